#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcore/gen_inverse.hpp"
#include "pcore/matrix_kernel.hpp"
#include "pcore/tolerance.hpp"

namespace pcore {

enum class TheoremId {
    T1_1,   // equivalent characterizations of pseudo core invertibility
    L2_1,   // commuting pair: a^Ⓓ commutes with b
    L2_2,   // commuting pair: (ab)^Ⓓ = a^Ⓓ b^Ⓓ
    L2_3,   // annihilating pair: a + b pseudo core invertible
    L2_4,   // (1 - a^Ⓓ a) b = 0  <=>  (1 - a a^Ⓓ) b = 0
    L2_5a,  // block triangular x, forward direction
    L2_5b,  // block triangular x, converse direction
    L2_5p,  // projection (Pierce) form, both directions
    T3_1,   // additive equivalence under commuting hypotheses
    C3_2,   // *-DMP specialisation
    EX3_3,  // the fixed 2x2 counterexample
    T4_1,
    C4_2,
    T4_3,
    C4_4,
    T4_5,
    C4_6,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
/// All ids in declaration order.
const std::vector<TheoremId>& all_theorem_ids();

enum class Verdict { pass, fail, hypotheses_not_met };

std::string_view to_string(Verdict v);

struct Check {
    std::string label;
    /// Residual (double) or truth value (bool).
    std::variant<double, bool> value;
    bool pass = false;
};

using Witness = std::variant<bool, std::int64_t, double, std::string, ComplexMatrix>;

struct TheoremReport {
    TheoremId theorem = TheoremId::T1_1;
    std::vector<Check> hypothesis_checks;
    std::vector<Check> conclusion_checks;
    std::map<std::string, Witness> witnesses;
    TolerancePolicy policy;
    std::string note;

    /// hypotheses_not_met iff some hypothesis check fails; otherwise pass iff
    /// every conclusion check passes.
    Verdict verdict() const;

    bool hypotheses_hold() const;

    // Builders used by the checks.
    void hypothesis(std::string label, bool holds);
    /// Passes when `residual` <= threshold.
    void hypothesis(std::string label, double residual, double threshold);
    void conclusion(std::string label, bool holds);
    void conclusion(std::string label, double residual, double threshold);
    /// Records a certificate's worst residual as a conclusion check and its
    /// inverse as a witness.
    void certificate(const std::string& name, const GenInverseResult& result);
};

} // namespace pcore
