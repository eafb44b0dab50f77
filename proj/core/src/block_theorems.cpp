#include <algorithm>
#include <cmath>
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
using detail::hypothesis_vanishes;

ComplexMatrix assemble(const ComplexMatrix& A, const ComplexMatrix& B, const ComplexMatrix& C,
                       const ComplexMatrix& D) {
    return block_matrix(A, B, C, D);
}

void nilpotency_hypothesis(TheoremReport& r, const std::string& label,
                           const ComplexMatrix& product, double reference) {
    r.hypothesis(label, is_nilpotent(product, r.policy, reference));
}

// Runs `dual` on the conjugate-transpose arrangement [[A*, C*], [B*, D*]] and
// keeps its verdict and certificate.
template <typename Check>
void record_dual(TheoremReport& r, Check dual, const ComplexMatrix& A, const ComplexMatrix& B,
                 const ComplexMatrix& C, const ComplexMatrix& D) {
    const TheoremReport d = dual(A.adjoint(), C.adjoint(), B.adjoint(), D.adjoint(), r.policy);
    r.witnesses["dual verdict"] = std::string(to_string(d.verdict()));
    r.certificate("(M*)^pc", pseudo_core(assemble(A, B, C, D).adjoint(), r.policy));
}

} // namespace

TheoremReport check_theorem_4_1(const ComplexMatrix& A, const ComplexMatrix& B,
                                const ComplexMatrix& C, const ComplexMatrix& D,
                                const TolerancePolicy& tol) {
    detail::require_blocks(A, B, C, D, "check_theorem_4_1");
    TheoremReport r = detail::start_report(TheoremId::T4_1, tol);
    hypothesis_equal(r, "AB=BD", A * B, B * D);
    hypothesis_equal(r, "DC=CA", D * C, C * A);
    hypothesis_equal(r, "A*B=BD*", A.adjoint() * B, B * D.adjoint());
    hypothesis_equal(r, "D*C=CA*", D.adjoint() * C, C * A.adjoint());
    const ComplexMatrix pa = pseudo_core(A, tol).inverse;
    const ComplexMatrix pd = pseudo_core(D, tol).inverse;
    nilpotency_hypothesis(r, "A^pc B D^pc C nilpotent", pa * B * pd * C,
                          pa.norm() * B.norm() * pd.norm() * C.norm());

    r.certificate("M^pc", pseudo_core(assemble(A, B, C, D), tol));
    return r;
}

TheoremReport check_corollary_4_2(const ComplexMatrix& A, const ComplexMatrix& B,
                                  const ComplexMatrix& C, const ComplexMatrix& D,
                                  const TolerancePolicy& tol) {
    detail::require_blocks(A, B, C, D, "check_corollary_4_2");
    TheoremReport r = detail::start_report(TheoremId::C4_2, tol);
    hypothesis_equal(r, "AB=BD", A * B, B * D);
    hypothesis_equal(r, "DC=CA", D * C, C * A);
    hypothesis_equal(r, "D*C=CA*", D.adjoint() * C, C * A.adjoint());
    hypothesis_equal(r, "A*B=BD*", A.adjoint() * B, B * D.adjoint());
    const ComplexMatrix pa = pseudo_core(A, tol).inverse;
    const ComplexMatrix pd = pseudo_core(D, tol).inverse;
    nilpotency_hypothesis(r, "B D^pc C A^pc nilpotent", B * pd * C * pa,
                          pa.norm() * B.norm() * pd.norm() * C.norm());

    record_dual(r, check_theorem_4_1, A, B, C, D);
    r.certificate("M^pc", pseudo_core(assemble(A, B, C, D), tol));
    return r;
}

TheoremReport check_theorem_4_3(const ComplexMatrix& A, const ComplexMatrix& B,
                                const ComplexMatrix& C, const ComplexMatrix& D,
                                const TolerancePolicy& tol) {
    detail::require_blocks(A, B, C, D, "check_theorem_4_3");
    TheoremReport r = detail::start_report(TheoremId::T4_3, tol);
    hypothesis_equal(r, "AB=BD", A * B, B * D);
    hypothesis_equal(r, "DC=CA", D * C, C * A);
    hypothesis_equal(r, "B*A=DB*", B.adjoint() * A, D * B.adjoint());
    const ComplexMatrix pcb = pseudo_core(C * B, tol).inverse;
    const ComplexMatrix pbc = pseudo_core(B * C, tol).inverse;
    nilpotency_hypothesis(r, "B (CB)^pc D C (BC)^pc A nilpotent", B * pcb * D * C * pbc * A,
                          B.norm() * pcb.norm() * D.norm() * C.norm() * pbc.norm() * A.norm());

    r.certificate("M^pc", pseudo_core(assemble(A, B, C, D), tol));

    const ComplexMatrix Q = assemble(zeros(A.rows(), A.cols()), B, C, zeros(D.rows(), D.cols()));
    const GenInverseResult pq = pseudo_core(Q, tol);
    const GenInverseResult pq2 = pseudo_core(Q * Q, tol);
    r.certificate("Q^pc", pq);
    r.certificate("(Q^2)^pc", pq2);
    conclusion_equal(r, "Q^pc=Q (Q^2)^pc", pq.inverse, Q * pq2.inverse);
    return r;
}

TheoremReport check_corollary_4_4(const ComplexMatrix& A, const ComplexMatrix& B,
                                  const ComplexMatrix& C, const ComplexMatrix& D,
                                  const TolerancePolicy& tol) {
    detail::require_blocks(A, B, C, D, "check_corollary_4_4");
    TheoremReport r = detail::start_report(TheoremId::C4_4, tol);
    hypothesis_equal(r, "AB=BD", A * B, B * D);
    hypothesis_equal(r, "DC=CA", D * C, C * A);
    hypothesis_equal(r, "AC*=C*D", A * C.adjoint(), C.adjoint() * D);
    const ComplexMatrix pbc = pseudo_core(B * C, tol).inverse;
    const ComplexMatrix pcb = pseudo_core(C * B, tol).inverse;
    nilpotency_hypothesis(r, "A (BC)^pc B D (CB)^pc C nilpotent", A * pbc * B * D * pcb * C,
                          A.norm() * pbc.norm() * B.norm() * D.norm() * pcb.norm() * C.norm());

    record_dual(r, check_theorem_4_3, A, B, C, D);
    r.certificate("M^pc", pseudo_core(assemble(A, B, C, D), tol));
    return r;
}

TheoremReport check_theorem_4_5(const ComplexMatrix& A, const ComplexMatrix& B,
                                const ComplexMatrix& C, const ComplexMatrix& D,
                                const TolerancePolicy& tol) {
    detail::require_blocks(A, B, C, D, "check_theorem_4_5");
    TheoremReport r = detail::start_report(TheoremId::T4_5, tol);
    const double bc_ref = B.norm() * C.norm();
    hypothesis_vanishes(r, "BC=0", B * C, bc_ref);
    hypothesis_vanishes(r, "CB=0", C * B, bc_ref);
    hypothesis_equal(r, "CA=DC", C * A, D * C);
    hypothesis_equal(r, "AC*=C*D", A * C.adjoint(), C.adjoint() * D);

    detail::TriangularSum sum(A, B, D, tol);
    const bool at_index = sum.at(sum.index_a()).vanishes(tol);
    const std::optional<int> found = find_triangular_exponent(A, B, D, tol);
    r.witnesses["sum at m=i(A)"] = at_index;
    if (found) {
        r.witnesses["m"] = static_cast<std::int64_t>(*found);
    }
    r.hypothesis("sum condition", found.has_value());

    r.certificate("M^pc", pseudo_core(assemble(A, B, C, D), tol));
    const ComplexMatrix q = assemble(A, B, zeros(D.rows(), A.cols()), D);
    const GenInverseResult pq = pseudo_core(q, tol);
    r.certificate("Q^pc", pq);
    conclusion_vanishes(r, "lower-left of Q^pc = 0", pq.inverse.bottomLeftCorner(D.rows(), A.cols()),
                        detail::inverse_noise_reference(q, pq.inverse));
    return r;
}

TheoremReport check_corollary_4_6(const ComplexMatrix& A, const ComplexMatrix& B,
                                  const ComplexMatrix& C, const ComplexMatrix& D,
                                  const TolerancePolicy& tol) {
    detail::require_blocks(A, B, C, D, "check_corollary_4_6");
    TheoremReport r = detail::start_report(TheoremId::C4_6, tol);
    const double bc_ref = B.norm() * C.norm();
    hypothesis_vanishes(r, "BC=0", B * C, bc_ref);
    hypothesis_vanishes(r, "CB=0", C * B, bc_ref);
    hypothesis_equal(r, "AB=BD", A * B, B * D);
    hypothesis_equal(r, "A*B=BD*", A.adjoint() * B, B * D.adjoint());

    const GenInverseResult ad = drazin(A, tol);
    const ComplexMatrix a_pi = identity(A.rows()) - A * ad.inverse;
    const double pi_bound = 1.0 + A.norm() * ad.inverse.norm();
    ComplexMatrix sum = zeros(C.rows(), C.cols());
    double reference = 0.0;
    ComplexMatrix a_power = identity(A.rows());
    for (int i = 1; i <= ad.index_used; ++i) {
        sum += C * a_power * a_pi;
        reference += C.norm() * std::pow(A.norm(), i - 1) * pi_bound;
        a_power = a_power * A;
    }
    hypothesis_vanishes(r, "sum C A^{i-1} A^pi = 0", sum, reference);

    record_dual(r, check_theorem_4_5, A, B, C, D);
    r.certificate("M^pc", pseudo_core(assemble(A, B, C, D), tol));
    return r;
}

} // namespace pcore
