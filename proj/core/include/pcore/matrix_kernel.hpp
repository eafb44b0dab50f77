#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "pcore/tolerance.hpp"

namespace pcore {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

ComplexMatrix identity(Index n);
ComplexMatrix zeros(Index rows, Index cols);

/// Builds a matrix from nested rows; every row must have the same length.
ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

bool all_finite(const ComplexMatrix& a);

ComplexMatrix conjugate_transpose(const ComplexMatrix& a);

// Shape-checked ring operations. Eigen only asserts conformability in debug
// builds; these throw DimensionError instead.
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex s);

/// a^k by repeated squaring; a^0 is the identity. Requires square a, k >= 0.
ComplexMatrix power(const ComplexMatrix& a, int k);

/// Horizontal concatenation [a | b].
ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
/// Largest singular value.
double spectral_norm(const ComplexMatrix& a);

/// Number of singular values exceeding rank_rel_tol * sigma_max (0 for the
/// zero matrix and for empty matrices).
Index numerical_rank(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Rank measured against an external magnitude: singular values exceeding
/// rank_rel_tol * reference count. Use this when a matrix is a product whose
/// exact value may be zero; `reference` is then the size of its factors.
Index numerical_rank_at_scale(const ComplexMatrix& a, double reference,
                              const TolerancePolicy& tol);

/// numerical_rank_at_scale(a, reference) == 0.
bool vanishes(const ComplexMatrix& a, double reference, const TolerancePolicy& tol);

/// ||a - b||_F / max(1, ||a||_F, ||b||_F).
double relative_difference(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  const TolerancePolicy& tol);

/// Column-space equality: rank(a) == rank(b) == rank([a | b]).
bool same_column_space(const ComplexMatrix& a, const ComplexMatrix& b,
                       const TolerancePolicy& tol);

/// p^2 = p = p^*.
bool is_projection(const ComplexMatrix& p, const TolerancePolicy& tol);

/// Orthonormal basis (as columns) of ker(a). Singular values at or below
/// rank_rel_tol * reference count as zero; reference defaults to sigma_max(a).
ComplexMatrix null_space_basis(const ComplexMatrix& a, const TolerancePolicy& tol,
                               double reference = -1.0);

/// Orthonormal basis of the orthogonal complement of span(v) in C^n, where v
/// has orthonormal columns.
ComplexMatrix orthonormal_complement(const ComplexMatrix& v, Index n);

/// Nested kernels ker(a) ⊆ ker(a^2) ⊆ ... built one step at a time:
/// ker(a^{j+1}) = ker((I - V_j V_j^*) a). Every rank decision is made on a
/// matrix of the size of `a`, so the chain never forms a^j explicitly.
struct KernelChain {
    /// dims[j] = dim ker(a^j); dims[0] = 0.
    std::vector<Index> dims;
    /// Orthonormal basis of the last kernel in the chain.
    ComplexMatrix basis;
    /// First j with dims[j] == dims[j+1].
    int stable_at = 0;
};

/// Runs the chain until it stabilizes. `reference` as in null_space_basis.
KernelChain kernel_chain(const ComplexMatrix& a, const TolerancePolicy& tol,
                         double reference = -1.0);

/// a^n = 0 for n = dim(a), decided by the kernel chain reaching the full
/// space. `reference` is the magnitude a zero test is measured against;
/// pass the product of factor norms when `a` is a product.
bool is_nilpotent(const ComplexMatrix& a, const TolerancePolicy& tol,
                  double reference = -1.0);

} // namespace pcore
