#include <algorithm>
#include <cmath>
#include <string>

#include "check_util.hpp"
#include "pcore/errors.hpp"
#include "pcore/gen_inverse.hpp"
#include "pcore/theorem_suite.hpp"
#include "sums.hpp"

namespace pcore {

namespace detail {

TriangularSum::TriangularSum(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& d, const TolerancePolicy& tol)
    : b_(b), d_(d) {
    if (a.rows() != a.cols() || d.rows() != d.cols() || b.rows() != a.rows() ||
        b.cols() != d.rows()) {
        throw DimensionError("triangular_sum: expected a (n x n), b (n x m), d (m x m)");
    }
    const CoreNilpotentSplit split = core_nilpotent_split(a, tol);
    index_a_ = split.index;
    const ComplexMatrix a_d = drazin(a, tol).inverse;
    const ComplexMatrix a_pi = identity(a.rows()) - a * a_d;
    const double pi_bound = 1.0 + a.norm() * a_d.norm();
    ComplexMatrix head = a_pi;
    double bound = pi_bound;
    for (int i = 0; i < index_a_; ++i) {
        head_.push_back(head);
        head_bound_.push_back(bound);
        head = a * head;
        bound *= a.norm();
    }
    norm_b_ = b.norm();
    norm_d_ = d.norm();
    d_powers_.push_back(identity(d.rows()));
}

const ComplexMatrix& TriangularSum::d_power(int j) {
    while (static_cast<int>(d_powers_.size()) <= j) {
        d_powers_.push_back(d_powers_.back() * d_);
    }
    return d_powers_[static_cast<std::size_t>(j)];
}

ScaledMatrix TriangularSum::at(int m) {
    if (m < 0) {
        throw ParameterError("triangular_sum: m must be >= 0, got " + std::to_string(m));
    }
    ScaledMatrix out{zeros(b_.rows(), b_.cols()), 0.0};
    const int terms = std::min(m, index_a_);
    for (int i = 1; i <= terms; ++i) {
        const int j = m - i;
        out.value += head_[static_cast<std::size_t>(i - 1)] * b_ * d_power(j);
        out.reference += head_bound_[static_cast<std::size_t>(i - 1)] * norm_b_ *
                         std::pow(norm_d_, j);
    }
    return out;
}

AdditiveSum::AdditiveSum(const ComplexMatrix& a, const ComplexMatrix& b,
                         const TolerancePolicy& tol)
    : a_(a) {
    require_square_pair(a, b, "additive_sum");
    const Index n = a.rows();
    const ComplexMatrix a_pc = pseudo_core(a, tol).inverse;
    u_ = identity(n) + a_pc * b;
    s_ = a + b;
    const GenInverseResult u_d = drazin(u_, tol);
    index_u_ = u_d.index_used;
    const ComplexMatrix u_pi = identity(n) - u_ * u_d.inverse;
    const ComplexMatrix bracket = a * a_pc - a_pc * a;
    core_ = u_pi * a * bracket;
    const double core_bound = (1.0 + u_.norm() * u_d.inverse.norm()) * a.norm() *
                              (2.0 * a.norm() * a_pc.norm());
    if (vanishes(core_, core_bound, tol)) {
        core_.setZero();
    }
    core_norm_ = core_.norm();
    s_powers_.push_back(identity(n));
    left_.push_back(identity(n));
    u_power_ = identity(n);
    a_power_ = identity(n);
}

const ComplexMatrix& AdditiveSum::s_power(int j) {
    while (static_cast<int>(s_powers_.size()) <= j) {
        s_powers_.push_back(s_powers_.back() * s_);
    }
    return s_powers_[static_cast<std::size_t>(j)];
}

const ComplexMatrix& AdditiveSum::left(int j) {
    while (static_cast<int>(left_.size()) <= j) {
        u_power_ = u_power_ * u_;
        a_power_ = a_power_ * a_;
        left_.push_back(u_power_ * a_power_);
    }
    return left_[static_cast<std::size_t>(j)];
}

ScaledMatrix AdditiveSum::at(int m) {
    if (m < 0) {
        throw ParameterError("additive_sum: m must be >= 0, got " + std::to_string(m));
    }
    ScaledMatrix out{zeros(a_.rows(), a_.cols()), 0.0};
    for (int i = 1; i <= m; ++i) {
        out.value += left(i - 1) * core_ * s_power(m - i);
        out.reference += left(i - 1).norm() * core_norm_ * s_power(m - i).norm();
    }
    return out;
}

} // namespace detail

PierceBlocks pierce_decompose(const ComplexMatrix& a, const ComplexMatrix& p,
                              const TolerancePolicy& tol) {
    if (a.rows() != a.cols() || p.rows() != a.rows() || p.cols() != a.cols()) {
        throw DimensionError("pierce_decompose: a and p must be square of equal size");
    }
    if (!is_projection(p, tol)) {
        throw InvalidProjectionError("pierce_decompose: p is not an orthogonal projection");
    }
    const ComplexMatrix q = identity(p.rows()) - p;
    PierceBlocks out;
    out.p = p;
    out.pap = p * a * p;
    out.pap_pi = p * a * q;
    out.ppi_a_p = q * a * p;
    out.ppi_a_ppi = q * a * q;
    return out;
}

ComplexMatrix block_matrix(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ComplexMatrix& c, const ComplexMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols()) {
        throw DimensionError("block_matrix: blocks are not conformable");
    }
    ComplexMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
    m << a, b, c, d;
    return m;
}

ScaledMatrix triangular_sum(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ComplexMatrix& d, int m, const TolerancePolicy& tol) {
    return detail::TriangularSum(a, b, d, tol).at(m);
}

ExponentWindow triangular_window(const ComplexMatrix& a, const ComplexMatrix& d,
                                 const TolerancePolicy& tol) {
    const int ia = index(a, tol);
    const int id = index(d, tol);
    const int dim = static_cast<int>(std::max(a.rows(), d.rows()));
    return {std::max(ia, 1), ia + id + dim};
}

std::optional<int> find_triangular_exponent(const ComplexMatrix& a, const ComplexMatrix& b,
                                            const ComplexMatrix& d,
                                            const TolerancePolicy& tol) {
    detail::TriangularSum sum(a, b, d, tol);
    const ExponentWindow w = triangular_window(a, d, tol);
    // From m = i(a) + i(d) on, the sum is the one at i(a) + i(d) times a power
    // of d acting injectively on its range, so later m only decay in norm.
    const int stable = std::max(w.first, index(a, tol) + index(d, tol));
    for (int m = w.first; m <= std::min(w.last, stable); ++m) {
        if (sum.at(m).vanishes(tol)) {
            return m;
        }
    }
    return std::nullopt;
}

ScaledMatrix additive_sum(const ComplexMatrix& a, const ComplexMatrix& b, int m,
                          const TolerancePolicy& tol) {
    return detail::AdditiveSum(a, b, tol).at(m);
}

} // namespace pcore
