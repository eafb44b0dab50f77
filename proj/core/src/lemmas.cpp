#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "check_util.hpp"
#include "pcore/errors.hpp"
#include "pcore/gen_inverse.hpp"
#include "pcore/theorem_suite.hpp"
#include "sums.hpp"

namespace pcore {

namespace {

using detail::conclusion_equal;
using detail::conclusion_vanishes;
using detail::hypothesis_equal;
using detail::hypothesis_vanishes;

void require_square(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(who) + ": matrix must be square");
    }
}

// Powers that vanish at the scale of their factors are replaced by exact zeros
// so that range comparisons are not made against rounding noise.
ComplexMatrix clean_power(const ComplexMatrix& a, int n, const TolerancePolicy& tol) {
    ComplexMatrix an = power(a, n);
    if (vanishes(an, std::pow(a.norm(), n), tol)) {
        an.setZero();
    }
    return an;
}

void hypothesis_certificate(TheoremReport& r, const std::string& name,
                            const GenInverseResult& result) {
    r.hypothesis("certificate " + name, result.max_residual(), r.policy.residual_tol);
    r.witnesses[name] = result.inverse;
}

void commutation_hypotheses(TheoremReport& r, const ComplexMatrix& a, const ComplexMatrix& b) {
    hypothesis_equal(r, "ab=ba", a * b, b * a);
    hypothesis_equal(r, "a*b=ba*", a.adjoint() * b, b * a.adjoint());
}

} // namespace

TheoremReport check_theorem_1_1(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "check_theorem_1_1");
    TheoremReport r = detail::start_report(TheoremId::T1_1, tol);
    const int k = index(a, tol);
    const int n = std::max(k, 1);
    r.witnesses["index"] = static_cast<std::int64_t>(k);

    const GenInverseResult pc = pseudo_core(a, tol);
    r.certificate("a^pc", pc);
    r.certificate("a^D", drazin(a, tol));
    r.certificate("(a^k)^(1,3)", one_three(power(a, k), tol));

    const ComplexMatrix an = clean_power(a, n, tol);
    r.conclusion("R(a^n)=R(x)", same_column_space(an, pc.inverse, tol));
    r.conclusion("R(x)=R(x*)", same_column_space(pc.inverse, pc.inverse.adjoint(), tol));

    const int m_index = index(an, tol);
    r.conclusion("index(a^m)<=1", m_index <= 1);
    if (m_index <= 1) {
        const GenInverseResult core = core_inverse(an, tol);
        r.certificate("(a^m)^core", core);
        conclusion_equal(r, "(a^m)^core=(a^pc)^m", core.inverse, power(pc.inverse, n));
    }
    return r;
}

TheoremReport check_lemma_2_1(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol) {
    detail::require_square_pair(a, b, "check_lemma_2_1");
    TheoremReport r = detail::start_report(TheoremId::L2_1, tol);
    commutation_hypotheses(r, a, b);
    const GenInverseResult pa = pseudo_core(a, tol);
    r.certificate("a^pc", pa);
    conclusion_equal(r, "a^pc b=b a^pc", pa.inverse * b, b * pa.inverse);
    return r;
}

TheoremReport check_lemma_2_2(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol) {
    detail::require_square_pair(a, b, "check_lemma_2_2");
    TheoremReport r = detail::start_report(TheoremId::L2_2, tol);
    commutation_hypotheses(r, a, b);
    const GenInverseResult pab = pseudo_core(a * b, tol);
    const GenInverseResult pa = pseudo_core(a, tol);
    const GenInverseResult pb = pseudo_core(b, tol);
    r.certificate("(ab)^pc", pab);
    r.certificate("a^pc", pa);
    r.certificate("b^pc", pb);
    conclusion_equal(r, "(ab)^pc=a^pc b^pc", pab.inverse, pa.inverse * pb.inverse);
    return r;
}

TheoremReport check_lemma_2_3(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol) {
    detail::require_square_pair(a, b, "check_lemma_2_3");
    TheoremReport r = detail::start_report(TheoremId::L2_3, tol);
    const double ref = a.norm() * b.norm();
    hypothesis_vanishes(r, "ab=0", a * b, ref);
    hypothesis_vanishes(r, "ba=0", b * a, ref);
    hypothesis_vanishes(r, "a*b=0", a.adjoint() * b, ref);

    const ComplexMatrix s = a + b;
    const GenInverseResult ps = pseudo_core(s, tol);
    r.certificate("(a+b)^pc", ps);

    // Not asserted: how well a^pc + b^pc does as an inverse of a + b.
    const ComplexMatrix sum = pseudo_core(a, tol).inverse + pseudo_core(b, tol).inverse;
    const auto res = verify_defining_triple(s, sum, std::max(ps.index_used, 1));
    double worst = 0.0;
    for (const auto& [label, value] : res) {
        worst = std::max(worst, value);
    }
    r.witnesses["a^pc+b^pc residual"] = worst;
    return r;
}

TheoremReport check_lemma_2_4(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol) {
    detail::require_square_pair(a, b, "check_lemma_2_4");
    TheoremReport r = detail::start_report(TheoremId::L2_4, tol);
    const GenInverseResult pa = pseudo_core(a, tol);
    r.certificate("a^pc", pa);
    const ComplexMatrix& x = pa.inverse;
    const ComplexMatrix one = identity(a.rows());
    const double ref = (1.0 + x.norm() * a.norm()) * b.norm();
    const bool left = vanishes((one - x * a) * b, ref, tol);
    const bool right = vanishes((one - a * x) * b, ref, tol);
    r.witnesses["(1-a^pc a)b=0"] = left;
    r.witnesses["(1-a a^pc)b=0"] = right;
    r.conclusion("equivalence", left == right);
    return r;
}

TheoremReport check_lemma_2_5(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& d, const TolerancePolicy& tol) {
    if (a.rows() != a.cols() || d.rows() != d.cols() || b.rows() != a.rows() ||
        b.cols() != d.rows()) {
        throw DimensionError("check_lemma_2_5: expected a (n x n), b (n x m), d (m x m)");
    }
    TheoremReport r = detail::start_report(TheoremId::L2_5a, tol);
    hypothesis_certificate(r, "a^pc", pseudo_core(a, tol));
    hypothesis_certificate(r, "d^pc", pseudo_core(d, tol));
    const std::optional<int> m = find_triangular_exponent(a, b, d, tol);
    r.hypothesis("sum condition", m.has_value());
    if (m) {
        r.witnesses["m"] = static_cast<std::int64_t>(*m);
    }

    const ComplexMatrix x = block_matrix(a, b, zeros(d.rows(), a.cols()), d);
    const GenInverseResult px = pseudo_core(x, tol);
    r.certificate("x^pc", px);
    conclusion_vanishes(r, "lower-left of x^pc = 0",
                        px.inverse.bottomLeftCorner(d.rows(), a.cols()),
                        detail::inverse_noise_reference(x, px.inverse));
    return r;
}

TheoremReport check_lemma_2_5_converse(const ComplexMatrix& x, Index split,
                                       const TolerancePolicy& tol) {
    require_square(x, "check_lemma_2_5_converse");
    if (split < 1 || split >= x.rows()) {
        throw ParameterError("check_lemma_2_5_converse: split must lie in [1, " +
                             std::to_string(x.rows() - 1) + "], got " + std::to_string(split));
    }
    const Index nd = x.rows() - split;
    if (!vanishes(x.bottomLeftCorner(nd, split), x.norm(), tol)) {
        throw PreconditionError("check_lemma_2_5_converse: lower-left block of x is nonzero");
    }
    TheoremReport r = detail::start_report(TheoremId::L2_5b, tol);
    const ComplexMatrix a = x.topLeftCorner(split, split);
    const ComplexMatrix b = x.topRightCorner(split, nd);
    const ComplexMatrix d = x.bottomRightCorner(nd, nd);
    const ComplexMatrix triangular = block_matrix(a, b, zeros(nd, split), d);

    const GenInverseResult px = pseudo_core(triangular, tol);
    hypothesis_certificate(r, "x^pc", px);
    hypothesis_vanishes(r, "lower-left of x^pc = 0", px.inverse.bottomLeftCorner(nd, split),
                        detail::inverse_noise_reference(triangular, px.inverse));

    r.certificate("a^pc", pseudo_core(a, tol));
    r.certificate("d^pc", pseudo_core(d, tol));
    const std::optional<int> m = find_triangular_exponent(a, b, d, tol);
    r.conclusion("sum condition", m.has_value());
    if (m) {
        r.witnesses["m"] = static_cast<std::int64_t>(*m);
    }
    return r;
}

TheoremReport check_lemma_2_5_projection(const ComplexMatrix& x, const ComplexMatrix& p,
                                         const TolerancePolicy& tol) {
    require_square(x, "check_lemma_2_5_projection");
    const PierceBlocks blocks = pierce_decompose(x, p, tol);
    const Index n = x.rows();
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(p);
    const Index np = std::count_if(eig.eigenvalues().begin(), eig.eigenvalues().end(),
                                   [](double v) { return v > 0.5; });
    if (np < 1 || np >= n) {
        throw ParameterError("check_lemma_2_5_projection: p must be a proper nonzero projection");
    }
    TheoremReport r = detail::start_report(TheoremId::L2_5p, tol);
    hypothesis_vanishes(r, "p^pi x p = 0", blocks.ppi_a_p, x.norm());

    // Work in an orthonormal basis of R(p) followed by one of R(p^pi), where
    // x is block upper triangular.
    const Index nq = n - np;
    ComplexMatrix v(n, n);
    v << eig.eigenvectors().rightCols(np), eig.eigenvectors().leftCols(nq);
    ComplexMatrix y = v.adjoint() * x * v;
    y.bottomLeftCorner(nq, np).setZero();
    // blocks that vanish are rounding noise left by the change of basis
    const auto clean = [&](auto&& block) {
        if (vanishes(block, x.norm(), tol)) {
            block.setZero();
        }
    };
    clean(y.topLeftCorner(np, np));
    clean(y.topRightCorner(np, nq));
    clean(y.bottomRightCorner(nq, nq));
    const ComplexMatrix a = y.topLeftCorner(np, np);
    const ComplexMatrix b = y.topRightCorner(np, nq);
    const ComplexMatrix d = y.bottomRightCorner(nq, nq);

    GenInverseResult py = pseudo_core(y, tol);
    const bool corner =
        vanishes(py.inverse.bottomLeftCorner(nq, np), detail::inverse_noise_reference(y, py.inverse),
                 tol);
    py.inverse = v * py.inverse * v.adjoint();
    r.certificate("x^pc", py);
    r.certificate("a^pc", pseudo_core(a, tol));
    r.certificate("d^pc", pseudo_core(d, tol));
    const std::optional<int> m = find_triangular_exponent(a, b, d, tol);
    r.witnesses["p^pi x^pc p = 0"] = corner;
    r.witnesses["sum condition"] = m.has_value();
    if (m) {
        r.witnesses["m"] = static_cast<std::int64_t>(*m);
    }
    r.conclusion("equivalence", corner == m.has_value());
    return r;
}

} // namespace pcore
