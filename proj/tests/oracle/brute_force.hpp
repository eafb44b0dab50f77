#pragma once

#include <optional>

#include "pcore/matrix_kernel.hpp"

namespace oracle {

/// Solves x a^{k+1} = a^k, (ax)^* = ax, (1 - P)x = 0 with P the orthogonal
/// projector onto R(a^k), as one realified least-squares system. Returns
/// nullopt unless the system has full column rank and a consistent solution.
std::optional<pcore::ComplexMatrix> brute_force_pseudo_core(const pcore::ComplexMatrix& a,
                                                            int k);

} // namespace oracle
