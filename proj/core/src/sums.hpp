#pragma once

#include <optional>
#include <vector>

#include "pcore/matrix_kernel.hpp"
#include "pcore/theorem_suite.hpp"

namespace pcore::detail {

/// Evaluates sum_{i=1}^{m} a^{i-1} a^π b d^{m-i} for many m with shared
/// factorizations.
class TriangularSum {
public:
    TriangularSum(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& d,
                  const TolerancePolicy& tol);

    ScaledMatrix at(int m);
    int index_a() const { return index_a_; }

private:
    const ComplexMatrix& d_power(int j);

    ComplexMatrix b_;
    ComplexMatrix d_;
    int index_a_ = 0;
    // a^{i-1} a^π for i - 1 < index(a)
    std::vector<ComplexMatrix> head_;
    std::vector<double> head_bound_;
    std::vector<ComplexMatrix> d_powers_;
    double norm_b_ = 0.0;
    double norm_d_ = 0.0;
};

/// Evaluates the additive criterion summand for many m.
class AdditiveSum {
public:
    AdditiveSum(const ComplexMatrix& a, const ComplexMatrix& b, const TolerancePolicy& tol);

    ScaledMatrix at(int m);
    /// index(1 + a^Ⓓ b)
    int index_u() const { return index_u_; }

private:
    const ComplexMatrix& s_power(int j);
    const ComplexMatrix& left(int j);

    ComplexMatrix a_;
    ComplexMatrix u_;
    ComplexMatrix s_;
    // u^π a (a a^Ⓓ - a^Ⓓ a)
    ComplexMatrix core_;
    double core_norm_ = 0.0;
    int index_u_ = 0;
    std::vector<ComplexMatrix> s_powers_;
    // u^{j} a^{j}
    std::vector<ComplexMatrix> left_;
    ComplexMatrix u_power_;
    ComplexMatrix a_power_;
};

} // namespace pcore::detail
