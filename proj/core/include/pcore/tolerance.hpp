#pragma once

namespace pcore {

/// Thresholds behind every approximate decision in the library.
///
/// `rank_rel_tol`: singular values at or below rank_rel_tol * scale count as
/// zero, where scale is the largest singular value unless a caller supplies
/// the magnitude of the factors that produced the matrix.
/// `eq_rel_tol`: relative Frobenius threshold used by approx_equal.
/// `residual_tol`: acceptance threshold for inverse certificates.
struct TolerancePolicy {
    double rank_rel_tol = 1e-10;
    double eq_rel_tol = 1e-8;
    double residual_tol = 1e-8;

    /// Throws ParameterError unless every field lies in [0, 1).
    void validate() const;

    friend bool operator==(const TolerancePolicy&, const TolerancePolicy&) = default;
};

} // namespace pcore
