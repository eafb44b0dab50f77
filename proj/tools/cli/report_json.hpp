#pragma once

#include <json.hpp>

#include "pcore/campaign.hpp"
#include "pcore/gen_inverse.hpp"
#include "pcore/theorem_report.hpp"
#include "pcore/tolerance.hpp"

namespace pcore::cli {

using nlohmann::json;

json to_json(const TolerancePolicy& tol);
json to_json(const GenInverseResult& result);
json to_json(const TheoremReport& report);
json to_json(const CampaignSummary& summary);

/// Command echo, version and policy shared by every report.
json report_header(const std::string& command, const TolerancePolicy& tol);

} // namespace pcore::cli
