#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pcore/matrix_kernel.hpp"
#include "pcore/tolerance.hpp"

namespace pcore {

enum class InverseKind { moore_penrose, one_three, group, drazin, core, pseudo_core };

std::string_view to_string(InverseKind kind);

/// Accepts the canonical names plus the short aliases mp, pinv, 13, pcore,
/// core_ep.
std::optional<InverseKind> parse_inverse_kind(std::string_view name);

/// An inverse together with the residuals of the equations that define it.
struct GenInverseResult {
    InverseKind kind = InverseKind::moore_penrose;
    ComplexMatrix inverse;
    /// Exponent k of the defining equations; 0 for kinds without one.
    int index_used = 0;
    /// Relative residual per defining-equation label.
    std::map<std::string, double> residuals;

    double max_residual() const;
    bool certified(const TolerancePolicy& tol) const;
};

/// Smallest k >= 0 with rank(a^k) = rank(a^{k+1}).
int index(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Orthonormal split C^n = R(a^k) ⊕ R(a^k)^⊥ with k = index(a). In the basis
/// [core_basis | complement] the matrix is block upper triangular
///
///     [ core   coupling ]
///     [   0    nilpotent ]
///
/// with `core` invertible. Every inverse of the Drazin family is assembled
/// from these blocks.
struct CoreNilpotentSplit {
    int index = 0;
    ComplexMatrix core_basis;  ///< n x r, orthonormal basis of R(a^k)
    ComplexMatrix complement;  ///< n x (n - r)
    ComplexMatrix core;        ///< r x r
    ComplexMatrix coupling;    ///< r x (n - r)
    ComplexMatrix nilpotent;   ///< (n - r) x (n - r)
};

CoreNilpotentSplit core_nilpotent_split(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Any shape. Residual labels p1..p4 for the four Penrose equations.
GenInverseResult moore_penrose(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Canonical (1,3)-inverse: the Moore-Penrose inverse. Labels p1, p3.
GenInverseResult one_three(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Throws NoInverseError when index(a) >= 2.
GenInverseResult group_inverse(const ComplexMatrix& a, const TolerancePolicy& tol);

GenInverseResult drazin(const ComplexMatrix& a, const TolerancePolicy& tol);

/// I - a a^D.
ComplexMatrix spectral_idempotent(const ComplexMatrix& a, const TolerancePolicy& tol);

/// a^# a a^(1,3). Throws NoInverseError when index(a) >= 2. Residuals:
/// `axa` for a x a = a, `range` for R(x) ⊆ R(a), `corange` for R(x^*) ⊆ R(a).
GenInverseResult core_inverse(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Pseudo core (core-EP) inverse, a^D a^k (a^k)^(1,3) with k = index(a). It
/// exists for every square complex matrix.
GenInverseResult pseudo_core(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Residuals of x a^{k+1} = a^k, a x^2 = x, (a x)^* = a x, each relative to
/// max(1, norm of the right-hand side). Labels: xa^{k+1}=a^k, ax^2=x, (ax)^*=ax.
/// Throws ParameterError for k < 1.
std::map<std::string, double> verify_defining_triple(const ComplexMatrix& a,
                                                     const ComplexMatrix& x, int k);

struct StarDmp {
    bool holds = false;
    /// First n for which (a^n)^† = (a^n)^#; 0 when none exists.
    int exponent = 0;
};

/// Scans n = max(index(a), 1) ... dim(a) for a power with coinciding
/// Moore-Penrose and group inverses.
StarDmp is_star_dmp(const ComplexMatrix& a, const TolerancePolicy& tol);

} // namespace pcore
