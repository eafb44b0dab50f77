#pragma once

#include <optional>

#include "pcore/matrix_kernel.hpp"
#include "pcore/theorem_report.hpp"
#include "pcore/tolerance.hpp"

namespace pcore {

/// The four corners of `a` relative to a projection p, with p^π = I - p.
struct PierceBlocks {
    ComplexMatrix p;
    ComplexMatrix pap;        ///< p a p
    ComplexMatrix pap_pi;     ///< p a p^π
    ComplexMatrix ppi_a_p;    ///< p^π a p
    ComplexMatrix ppi_a_ppi;  ///< p^π a p^π

    ComplexMatrix sum() const { return pap + pap_pi + ppi_a_p + ppi_a_ppi; }
};

/// Throws InvalidProjectionError when p is not a projection of matching size.
PierceBlocks pierce_decompose(const ComplexMatrix& a, const ComplexMatrix& p,
                              const TolerancePolicy& tol);

/// [[a, b], [c, d]]; throws DimensionError on non-conformable blocks.
ComplexMatrix block_matrix(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ComplexMatrix& c, const ComplexMatrix& d);

/// A matrix that should vanish together with the magnitude of the factors it
/// was built from; the zero test is made at that magnitude.
struct ScaledMatrix {
    ComplexMatrix value;
    double reference = 0.0;

    bool vanishes(const TolerancePolicy& tol) const {
        return pcore::vanishes(value, reference, tol);
    }
};

/// sum_{i=1}^{m} a^{i-1} a^π b d^{m-i}. Terms with i - 1 >= index(a) are
/// exactly zero (a^{i-1} a^π = 0 there) and are skipped.
ScaledMatrix triangular_sum(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ComplexMatrix& d, int m, const TolerancePolicy& tol);

struct ExponentWindow {
    int first = 1;
    int last = 1;
};

/// [max(i(a), 1), i(a) + i(d) + max(dim a, dim d)].
ExponentWindow triangular_window(const ComplexMatrix& a, const ComplexMatrix& d,
                                 const TolerancePolicy& tol);

/// First m in the window at which triangular_sum vanishes. Past i(a) + i(d)
/// the answer no longer changes, so the search stops there.
std::optional<int> find_triangular_exponent(const ComplexMatrix& a, const ComplexMatrix& b,
                                            const ComplexMatrix& d,
                                            const TolerancePolicy& tol);

/// The summand of the additive criterion with u = 1 + a^Ⓓ b:
/// sum_{i=1}^{m} u^{i-1} a^{i-1} u^π a (a a^Ⓓ - a^Ⓓ a) (a + b)^{m-i}.
ScaledMatrix additive_sum(const ComplexMatrix& a, const ComplexMatrix& b, int m,
                          const TolerancePolicy& tol);

// Per-result checks. Each verifies its hypotheses, evaluates its conclusion,
// and never throws for an instance that merely fails a hypothesis.

TheoremReport check_theorem_1_1(const ComplexMatrix& a, const TolerancePolicy& tol);

TheoremReport check_lemma_2_1(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol);
TheoremReport check_lemma_2_2(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol);
TheoremReport check_lemma_2_3(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol);
TheoremReport check_lemma_2_4(const ComplexMatrix& a, const ComplexMatrix& b,
                              const TolerancePolicy& tol);

/// Forward direction for x = [[a, b], [0, d]].
TheoremReport check_lemma_2_5(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& d, const TolerancePolicy& tol);

/// Converse direction. Throws PreconditionError unless the lower-left block
/// of x under `split` vanishes.
TheoremReport check_lemma_2_5_converse(const ComplexMatrix& x, Index split,
                                       const TolerancePolicy& tol);

/// Projection form: x with p^π x p = 0; checks that p^π x^Ⓓ p = 0 exactly
/// when the corner sum condition holds. Throws InvalidProjectionError.
TheoremReport check_lemma_2_5_projection(const ComplexMatrix& x, const ComplexMatrix& p,
                                         const TolerancePolicy& tol);

TheoremReport check_theorem_3_1(const ComplexMatrix& a, const ComplexMatrix& b,
                                const TolerancePolicy& tol);
TheoremReport check_corollary_3_2(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const TolerancePolicy& tol);
TheoremReport reproduce_example_3_3(const TolerancePolicy& tol);

TheoremReport check_theorem_4_1(const ComplexMatrix& A, const ComplexMatrix& B,
                                const ComplexMatrix& C, const ComplexMatrix& D,
                                const TolerancePolicy& tol);
TheoremReport check_corollary_4_2(const ComplexMatrix& A, const ComplexMatrix& B,
                                  const ComplexMatrix& C, const ComplexMatrix& D,
                                  const TolerancePolicy& tol);
TheoremReport check_theorem_4_3(const ComplexMatrix& A, const ComplexMatrix& B,
                                const ComplexMatrix& C, const ComplexMatrix& D,
                                const TolerancePolicy& tol);
TheoremReport check_corollary_4_4(const ComplexMatrix& A, const ComplexMatrix& B,
                                  const ComplexMatrix& C, const ComplexMatrix& D,
                                  const TolerancePolicy& tol);
TheoremReport check_theorem_4_5(const ComplexMatrix& A, const ComplexMatrix& B,
                                const ComplexMatrix& C, const ComplexMatrix& D,
                                const TolerancePolicy& tol);
TheoremReport check_corollary_4_6(const ComplexMatrix& A, const ComplexMatrix& B,
                                  const ComplexMatrix& C, const ComplexMatrix& D,
                                  const TolerancePolicy& tol);

} // namespace pcore
