#include <algorithm>
#include <string>

#include "check_util.hpp"
#include "pcore/gen_inverse.hpp"
#include "pcore/theorem_suite.hpp"
#include "sums.hpp"

namespace pcore {

namespace {

using detail::conclusion_equal;
using detail::conclusion_vanishes;
using detail::hypothesis_equal;

void commutation_hypotheses(TheoremReport& r, const ComplexMatrix& a, const ComplexMatrix& b) {
    hypothesis_equal(r, "ab=ba", a * b, b * a);
    hypothesis_equal(r, "a*b=ba*", a.adjoint() * b, b * a.adjoint());
}

struct Annihilation {
    ComplexMatrix value;
    double reference = 0.0;
};

// a^π (a+b)^Ⓓ a a^Ⓓ
Annihilation clause_one(const ComplexMatrix& a, const ComplexMatrix& a_pc,
                        const ComplexMatrix& s_pc, const TolerancePolicy& tol) {
    const ComplexMatrix a_d = drazin(a, tol).inverse;
    const ComplexMatrix a_pi = identity(a.rows()) - a * a_d;
    return {a_pi * s_pc * a * a_pc,
            (1.0 + a.norm() * a_d.norm()) * s_pc.norm() * a.norm() * a_pc.norm()};
}

} // namespace

TheoremReport check_theorem_3_1(const ComplexMatrix& a, const ComplexMatrix& b,
                                const TolerancePolicy& tol) {
    detail::require_square_pair(a, b, "check_theorem_3_1");
    TheoremReport r = detail::start_report(TheoremId::T3_1, tol);
    commutation_hypotheses(r, a, b);

    const Index n = a.rows();
    const GenInverseResult pa = pseudo_core(a, tol);
    const GenInverseResult ps = pseudo_core(a + b, tol);
    const ComplexMatrix u = identity(n) + pa.inverse * b;
    const GenInverseResult pu = pseudo_core(u, tol);
    r.certificate("a^pc", pa);
    r.certificate("(a+b)^pc", ps);
    r.certificate("(1+a^pc b)^pc", pu);

    const Annihilation ann = clause_one(a, pa.inverse, ps.inverse, tol);
    const bool annihilated = vanishes(ann.value, ann.reference, tol);
    const bool lhs = ps.certified(tol) && annihilated;

    detail::AdditiveSum sum(a, b, tol);
    const int first = std::max(sum.index_u(), 1);
    const int last = sum.index_u() + static_cast<int>(n);
    std::optional<int> found;
    for (int m = first; m <= last && !found; ++m) {
        if (sum.at(m).vanishes(tol)) {
            found = m;
        }
    }
    const bool rhs = pu.certified(tol) && found.has_value();

    const ComplexMatrix bracket = a * pa.inverse - pa.inverse * a;
    r.witnesses["lhs"] = lhs;
    r.witnesses["rhs"] = rhs;
    r.witnesses["annihilation"] = ann.value;
    r.witnesses["bracket_nonzero"] =
        !vanishes(bracket, 2.0 * a.norm() * pa.inverse.norm(), tol);
    r.witnesses["index(1+a^pc b)"] = static_cast<std::int64_t>(sum.index_u());
    if (found) {
        r.witnesses["m"] = static_cast<std::int64_t>(*found);
    }
    r.conclusion("lhs<=>rhs", lhs == rhs);
    return r;
}

TheoremReport check_corollary_3_2(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const TolerancePolicy& tol) {
    detail::require_square_pair(a, b, "check_corollary_3_2");
    TheoremReport r = detail::start_report(TheoremId::C3_2, tol);
    const StarDmp dmp = is_star_dmp(a, tol);
    r.hypothesis("a is *-DMP", dmp.holds);
    r.witnesses["dmp exponent"] = static_cast<std::int64_t>(dmp.exponent);
    commutation_hypotheses(r, a, b);

    const GenInverseResult pa = pseudo_core(a, tol);
    r.certificate("a^pc", pa);
    conclusion_vanishes(r, "a a^pc - a^pc a = 0", a * pa.inverse - pa.inverse * a,
                        2.0 * a.norm() * pa.inverse.norm());
    r.certificate("(a+b)^pc", pseudo_core(a + b, tol));
    r.certificate("(1+a^pc b)^pc", pseudo_core(identity(a.rows()) + pa.inverse * b, tol));
    return r;
}

TheoremReport reproduce_example_3_3(const TolerancePolicy& tol) {
    TheoremReport r = detail::start_report(TheoremId::EX3_3, tol);
    const Complex i{0.0, 1.0};
    const ComplexMatrix a = from_rows({{i, 0.0}, {0.0, 0.0}});
    const ComplexMatrix b = from_rows({{0.0, 0.0}, {1.0, 0.0}});
    const ComplexMatrix s = a + b;
    r.witnesses["a"] = a;
    r.witnesses["b"] = b;
    r.witnesses["a+b"] = s;

    const GenInverseResult pa = pseudo_core(a, tol);
    r.certificate("a^pc", pa);
    conclusion_equal(r, "(i) a^pc=[[-i,0],[0,0]]", pa.inverse,
                     from_rows({{-i, 0.0}, {0.0, 0.0}}));

    const GenInverseResult pb = pseudo_core(b, tol);
    r.certificate("b^pc", pb);
    conclusion_equal(r, "(ii) b^pc=0", pb.inverse, zeros(2, 2));

    const ComplexMatrix u = identity(2) + pa.inverse * b;
    r.witnesses["1+a^pc b"] = u;
    conclusion_equal(r, "(iii) 1+a^pc b=1", u, identity(2));
    r.certificate("(1+a^pc b)^pc", pseudo_core(u, tol));

    const ComplexMatrix commutator = a * b - b * a;
    r.witnesses["ab-ba"] = commutator;
    r.conclusion("(iv) ab!=ba", !vanishes(commutator, 2.0 * a.norm() * b.norm(), tol));

    const GenInverseResult ps = pseudo_core(s, tol);
    r.certificate("(a+b)^pc", ps);
    conclusion_equal(r, "(a+b)^pc=(1/2)[[-i,1],[-1,-i]]", ps.inverse,
                     0.5 * from_rows({{-i, 1.0}, {-1.0, -i}}));

    const Annihilation ann = clause_one(a, pa.inverse, ps.inverse, tol);
    r.witnesses["annihilation"] = ann.value;
    r.conclusion("(v) rank(a^pi (a+b)^pc a a^pc)=1",
                 numerical_rank_at_scale(ann.value, ann.reference, tol) == 1);
    conclusion_equal(r, "a^pi (a+b)^pc a a^pc=(1/2)[[0,0],[-1,0]]", ann.value,
                     0.5 * from_rows({{0.0, 0.0}, {-1.0, 0.0}}));

    const StarDmp dmp = is_star_dmp(a, tol);
    r.conclusion("a is *-DMP", dmp.holds && dmp.exponent == 1);

    r.note = "a+b is stated to have no pseudo core inverse, but it has the certified "
             "inverse (1/2)[[-i,1],[-1,-i]]. The pair fails the hypothesis ab=ba, and the "
             "annihilation a^pi (a+b)^pc a a^pc = 0 fails (rank 1); these are the "
             "outcomes reported instead.";
    return r;
}

} // namespace pcore
