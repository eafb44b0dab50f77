#include "pcore/theorem_report.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace pcore {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 17> kNames{{
    {TheoremId::T1_1, "T1_1"},   {TheoremId::L2_1, "L2_1"},   {TheoremId::L2_2, "L2_2"},
    {TheoremId::L2_3, "L2_3"},   {TheoremId::L2_4, "L2_4"},   {TheoremId::L2_5a, "L2_5a"},
    {TheoremId::L2_5b, "L2_5b"}, {TheoremId::L2_5p, "L2_5p"}, {TheoremId::T3_1, "T3_1"},
    {TheoremId::C3_2, "C3_2"},   {TheoremId::EX3_3, "EX3_3"}, {TheoremId::T4_1, "T4_1"},
    {TheoremId::C4_2, "C4_2"},   {TheoremId::T4_3, "T4_3"},   {TheoremId::C4_4, "C4_4"},
    {TheoremId::T4_5, "T4_5"},   {TheoremId::C4_6, "C4_6"},
}};

} // namespace

std::string_view to_string(TheoremId id) {
    for (const auto& [key, name] : kNames) {
        if (key == id) {
            return name;
        }
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (const auto& [key, label] : kNames) {
        if (label == name) {
            return key;
        }
    }
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorem_ids() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& [key, name] : kNames) {
            v.push_back(key);
        }
        return v;
    }();
    return ids;
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypotheses_not_met: return "hypotheses_not_met";
    }
    return "unknown";
}

bool TheoremReport::hypotheses_hold() const {
    return std::all_of(hypothesis_checks.begin(), hypothesis_checks.end(),
                       [](const Check& c) { return c.pass; });
}

Verdict TheoremReport::verdict() const {
    if (!hypotheses_hold()) {
        return Verdict::hypotheses_not_met;
    }
    const bool ok = std::all_of(conclusion_checks.begin(), conclusion_checks.end(),
                                [](const Check& c) { return c.pass; });
    return ok ? Verdict::pass : Verdict::fail;
}

void TheoremReport::hypothesis(std::string label, bool holds) {
    hypothesis_checks.push_back({std::move(label), holds, holds});
}

void TheoremReport::hypothesis(std::string label, double residual, double threshold) {
    hypothesis_checks.push_back({std::move(label), residual, residual <= threshold});
}

void TheoremReport::conclusion(std::string label, bool holds) {
    conclusion_checks.push_back({std::move(label), holds, holds});
}

void TheoremReport::conclusion(std::string label, double residual, double threshold) {
    conclusion_checks.push_back({std::move(label), residual, residual <= threshold});
}

void TheoremReport::certificate(const std::string& name, const GenInverseResult& result) {
    conclusion("certificate " + name, result.max_residual(), policy.residual_tol);
    witnesses[name] = result.inverse;
}

} // namespace pcore
