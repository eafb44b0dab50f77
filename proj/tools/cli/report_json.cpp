#include "cli/report_json.hpp"

#include <type_traits>

#include "cli/matrix_io.hpp"
#include "pcore/version.hpp"

namespace pcore::cli {

namespace {

json check_to_json(const Check& c) {
    json value;
    std::visit([&](const auto& v) { value = v; }, c.value);
    return json{{"label", c.label}, {"value", value}, {"pass", c.pass}};
}

json witness_to_json(const Witness& w) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ComplexMatrix>) {
                return matrix_to_json(v);
            } else {
                return v;
            }
        },
        w);
}

} // namespace

json to_json(const TolerancePolicy& tol) {
    return json{{"rank_rel_tol", tol.rank_rel_tol},
                {"eq_rel_tol", tol.eq_rel_tol},
                {"residual_tol", tol.residual_tol}};
}

json to_json(const GenInverseResult& result) {
    return json{{"kind", std::string(to_string(result.kind))},
                {"inverse", matrix_to_json(result.inverse)},
                {"index_used", result.index_used},
                {"residuals", result.residuals},
                {"max_residual", result.max_residual()}};
}

json to_json(const TheoremReport& report) {
    json hyp = json::array();
    for (const Check& c : report.hypothesis_checks) {
        hyp.push_back(check_to_json(c));
    }
    json con = json::array();
    for (const Check& c : report.conclusion_checks) {
        con.push_back(check_to_json(c));
    }
    json wit = json::object();
    for (const auto& [name, w] : report.witnesses) {
        wit[name] = witness_to_json(w);
    }
    json j{{"theorem", std::string(to_string(report.theorem))},
           {"verdict", std::string(to_string(report.verdict()))},
           {"hypothesis_checks", std::move(hyp)},
           {"conclusion_checks", std::move(con)},
           {"witnesses", std::move(wit)},
           {"policy", to_json(report.policy)}};
    if (!report.note.empty()) {
        j["note"] = report.note;
    }
    return j;
}

json to_json(const CampaignSummary& s) {
    return json{{"trials", s.trials},
                {"pass", s.pass},
                {"fail", s.fail},
                {"hypotheses_not_met", s.hypotheses_not_met},
                {"degenerate", s.degenerate}};
}

json report_header(const std::string& command, const TolerancePolicy& tol) {
    return json{{"command", command}, {"version", kVersion}, {"policy", to_json(tol)}};
}

} // namespace pcore::cli
