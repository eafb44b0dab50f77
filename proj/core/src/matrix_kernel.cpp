#include "pcore/matrix_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "pcore/errors.hpp"

namespace pcore {

namespace {

std::string shape(const ComplexMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shapes " + shape(a) + " and " +
                             shape(b) + " differ");
    }
}

// Jacobi is the accurate choice at the sizes we care about; the divide and
// conquer variant takes over for singular values of large inputs. Null
// spaces always go through Jacobi: BDCSVD returns wrong null vectors on
// rank deficient complex input.
constexpr Index kJacobiLimit = 48;

// Same singular values and right singular vectors as a, at square size.
ComplexMatrix square_factor(const ComplexMatrix& a) {
    if (a.rows() <= a.cols()) {
        return a;
    }
    const Eigen::HouseholderQR<ComplexMatrix> qr(a);
    return qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
}

Eigen::VectorXd singular_values(const ComplexMatrix& a) {
    if (a.size() == 0) {
        return Eigen::VectorXd();
    }
    if (std::min(a.rows(), a.cols()) <= kJacobiLimit) {
        return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
    }
    return Eigen::BDCSVD<ComplexMatrix>(square_factor(a)).singularValues();
}

Index count_above(const Eigen::VectorXd& sv, double threshold) {
    Index r = 0;
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > threshold) {
            ++r;
        }
    }
    return r;
}

} // namespace

void TolerancePolicy::validate() const {
    auto ok = [](double v) { return std::isfinite(v) && v >= 0.0 && v < 1.0; };
    if (!ok(rank_rel_tol) || !ok(eq_rel_tol) || !ok(residual_tol)) {
        throw ParameterError("tolerances must lie in [0, 1)");
    }
}

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix zeros(Index rows, Index cols) { return ComplexMatrix::Zero(rows, cols); }

ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
    const auto r = static_cast<Index>(rows.size());
    const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.front().size());
    ComplexMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        if (static_cast<Index>(rows[i].size()) != c) {
            throw DimensionError("from_rows: ragged row " + std::to_string(i));
        }
        for (Index j = 0; j < c; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

bool all_finite(const ComplexMatrix& a) {
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "add");
    return a + b;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "subtract");
    return a - b;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: " + shape(a) + " times " + shape(b));
    }
    return a * b;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex s) { return s * a; }

ComplexMatrix power(const ComplexMatrix& a, int k) {
    if (a.rows() != a.cols()) {
        throw DimensionError("power: matrix is " + shape(a) + ", not square");
    }
    if (k < 0) {
        throw ParameterError("power: negative exponent " + std::to_string(k));
    }
    ComplexMatrix result = identity(a.rows());
    ComplexMatrix base = a;
    while (k > 0) {
        if (k & 1) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("hstack: row counts of " + shape(a) + " and " + shape(b) +
                             " differ");
    }
    ComplexMatrix out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double spectral_norm(const ComplexMatrix& a) {
    const auto sv = singular_values(a);
    return sv.size() == 0 ? 0.0 : sv[0];
}

Index numerical_rank(const ComplexMatrix& a, const TolerancePolicy& tol) {
    const auto sv = singular_values(a);
    if (sv.size() == 0) {
        return 0;
    }
    return count_above(sv, tol.rank_rel_tol * sv[0]);
}

Index numerical_rank_at_scale(const ComplexMatrix& a, double reference,
                              const TolerancePolicy& tol) {
    const auto sv = singular_values(a);
    return count_above(sv, tol.rank_rel_tol * reference);
}

bool vanishes(const ComplexMatrix& a, double reference, const TolerancePolicy& tol) {
    return numerical_rank_at_scale(a, reference, tol) == 0;
}

double relative_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "relative_difference");
    const double denom = std::max({1.0, a.norm(), b.norm()});
    return (a - b).norm() / denom;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  const TolerancePolicy& tol) {
    return relative_difference(a, b) <= tol.eq_rel_tol;
}

bool same_column_space(const ComplexMatrix& a, const ComplexMatrix& b,
                       const TolerancePolicy& tol) {
    if (a.rows() != b.rows()) {
        throw DimensionError("same_column_space: row counts of " + shape(a) + " and " +
                             shape(b) + " differ");
    }
    // Each block is normalized before stacking so that a large block cannot
    // push the other one under the rank threshold.
    auto normalized = [](const ComplexMatrix& m) -> ComplexMatrix {
        const double n = m.norm();
        return n > 0.0 ? ComplexMatrix(m / n) : m;
    };
    const ComplexMatrix an = normalized(a);
    const ComplexMatrix bn = normalized(b);
    const Index ra = numerical_rank(an, tol);
    const Index rb = numerical_rank(bn, tol);
    return ra == rb && numerical_rank(hstack(an, bn), tol) == ra;
}

bool is_projection(const ComplexMatrix& p, const TolerancePolicy& tol) {
    if (p.rows() != p.cols()) {
        return false;
    }
    return approx_equal(p * p, p, tol) && approx_equal(p.adjoint(), p, tol);
}

ComplexMatrix null_space_basis(const ComplexMatrix& a, const TolerancePolicy& tol,
                               double reference) {
    const Index n = a.cols();
    if (n == 0) {
        return zeros(0, 0);
    }
    if (a.rows() == 0) {
        return identity(n);
    }
    const Eigen::JacobiSVD<ComplexMatrix> svd(square_factor(a), Eigen::ComputeFullV);
    const ComplexMatrix& v = svd.matrixV();
    const Eigen::VectorXd& sv = svd.singularValues();
    const double ref = reference >= 0.0 ? reference : (sv.size() ? sv[0] : 0.0);
    const Index r = count_above(sv, tol.rank_rel_tol * ref);
    return v.rightCols(n - r);
}

ComplexMatrix orthonormal_complement(const ComplexMatrix& v, Index n) {
    if (v.cols() == 0) {
        return identity(n);
    }
    if (v.rows() != n) {
        throw DimensionError("orthonormal_complement: basis has " +
                             std::to_string(v.rows()) + " rows, expected " +
                             std::to_string(n));
    }
    // Every singular value of v^* is 1, so its kernel is exactly the complement.
    TolerancePolicy exact;
    exact.rank_rel_tol = 1e-12;
    return null_space_basis(v.adjoint(), exact);
}

KernelChain kernel_chain(const ComplexMatrix& a, const TolerancePolicy& tol,
                         double reference) {
    if (a.rows() != a.cols()) {
        throw DimensionError("kernel_chain: matrix is " + shape(a) + ", not square");
    }
    const Index n = a.rows();
    const double ref = reference >= 0.0 ? reference : spectral_norm(a);

    KernelChain chain;
    chain.dims.push_back(0);
    chain.basis = zeros(n, 0);
    for (int j = 0; j <= n; ++j) {
        const ComplexMatrix& v = chain.basis;
        const ComplexMatrix deflated = a - v * (v.adjoint() * a);
        ComplexMatrix next = null_space_basis(deflated, tol, ref);
        if (next.cols() <= v.cols()) {
            chain.dims.push_back(v.cols());
            chain.stable_at = j;
            return chain;
        }
        chain.dims.push_back(next.cols());
        chain.basis = std::move(next);
    }
    // The dimension grows strictly until it stabilizes and is capped at n,
    // so the loop always returns above.
    chain.stable_at = static_cast<int>(n);
    return chain;
}

bool is_nilpotent(const ComplexMatrix& a, const TolerancePolicy& tol, double reference) {
    if (a.rows() != a.cols()) {
        return false;
    }
    if (a.size() == 0) {
        return true;
    }
    const KernelChain chain = kernel_chain(a, tol, reference);
    return chain.dims.back() == a.rows();
}

} // namespace pcore
