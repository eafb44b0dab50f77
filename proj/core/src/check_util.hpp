#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "pcore/errors.hpp"
#include "pcore/matrix_kernel.hpp"
#include "pcore/theorem_report.hpp"

namespace pcore::detail {

inline void require_square_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                const char* who) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DimensionError(std::string(who) + ": expected two square matrices of equal size");
    }
}

inline void require_blocks(const ComplexMatrix& A, const ComplexMatrix& B,
                           const ComplexMatrix& C, const ComplexMatrix& D, const char* who) {
    const bool ok = A.rows() == A.cols() && D.rows() == D.cols() && B.rows() == A.rows() &&
                    B.cols() == D.rows() && C.rows() == D.rows() && C.cols() == A.rows();
    if (!ok) {
        throw DimensionError(std::string(who) +
                             ": blocks must be A (nA x nA), B (nA x nD), C (nD x nA), "
                             "D (nD x nD)");
    }
}

// ||lhs - rhs|| / max(1, ||lhs||, ||rhs||)
inline double equation_residual(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    return relative_difference(lhs, rhs);
}

inline double norm(const ComplexMatrix& m) { return m.norm(); }

// sigma_max(m) / reference; m vanishes at `reference` iff this is <= rank_rel_tol.
inline double annihilation_ratio(const ComplexMatrix& m, double reference) {
    if (m.size() == 0 || m.norm() == 0.0) {
        return 0.0;
    }
    if (reference <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return spectral_norm(m) / reference;
}

// Scale of rounding in a computed inverse x of m: a perturbation e of m moves
// x by about x e x.
inline double inverse_noise_reference(const ComplexMatrix& m, const ComplexMatrix& x) {
    return x.norm() * std::max(1.0, x.norm() * m.norm());
}

inline bool hypothesis_vanishes(TheoremReport& r, std::string label, const ComplexMatrix& m,
                                double reference) {
    const double ratio = annihilation_ratio(m, reference);
    r.hypothesis(std::move(label), ratio, r.policy.rank_rel_tol);
    return ratio <= r.policy.rank_rel_tol;
}

inline bool conclusion_vanishes(TheoremReport& r, std::string label, const ComplexMatrix& m,
                                double reference) {
    const double ratio = annihilation_ratio(m, reference);
    r.conclusion(std::move(label), ratio, r.policy.rank_rel_tol);
    return ratio <= r.policy.rank_rel_tol;
}

inline bool hypothesis_equal(TheoremReport& r, std::string label, const ComplexMatrix& lhs,
                             const ComplexMatrix& rhs) {
    const double res = equation_residual(lhs, rhs);
    r.hypothesis(std::move(label), res, r.policy.eq_rel_tol);
    return res <= r.policy.eq_rel_tol;
}

inline bool conclusion_equal(TheoremReport& r, std::string label, const ComplexMatrix& lhs,
                             const ComplexMatrix& rhs) {
    const double res = equation_residual(lhs, rhs);
    r.conclusion(std::move(label), res, r.policy.eq_rel_tol);
    return res <= r.policy.eq_rel_tol;
}

inline TheoremReport start_report(TheoremId id, const TolerancePolicy& tol) {
    tol.validate();
    TheoremReport r;
    r.theorem = id;
    r.policy = tol;
    return r;
}

} // namespace pcore::detail
