#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcore/matrix_kernel.hpp"
#include "pcore/theorem_report.hpp"
#include "pcore/tolerance.hpp"

namespace pcore {

/// A theorem instance: matrices keyed by symbol (a, b, d, x, p, A, B, C, D).
struct Instance {
    std::map<std::string, ComplexMatrix> matrices;
    /// Block split for L2_5b.
    std::optional<Index> split;
    bool degenerate = false;

    const ComplexMatrix& at(const std::string& key) const;
};

/// Symbols a theorem consumes, in order.
const std::vector<std::string>& theorem_symbols(TheoremId id);

/// Dispatches to the matching check. Throws DimensionError (via the check)
/// or ParameterError when a symbol is missing.
TheoremReport run_check(TheoremId id, const Instance& instance, const TolerancePolicy& tol);

/// One seeded instance satisfying the theorem's hypotheses. `dims` is {n}
/// for single-matrix theorems and {n1, n2} (or {n} for both) for block ones.
Instance generate_instance(TheoremId id, const std::vector<Index>& dims, std::uint64_t seed);

struct TrialOutcome {
    std::uint64_t seed = 0;
    TheoremReport report;
    bool degenerate = false;
};

struct CampaignSummary {
    int trials = 0;
    int pass = 0;
    int fail = 0;
    int hypotheses_not_met = 0;
    int degenerate = 0;
};

struct Campaign {
    std::vector<TrialOutcome> outcomes;
    CampaignSummary summary;
};

TrialOutcome run_trial(TheoremId id, const std::vector<Index>& dims, std::uint64_t seed,
                       const TolerancePolicy& tol);

/// Trial i uses derive_seed(seed, i). Throws ParameterError for trials < 1.
Campaign run_campaign(TheoremId id, const std::vector<Index>& dims, int trials,
                      std::uint64_t seed, const TolerancePolicy& tol);

} // namespace pcore
