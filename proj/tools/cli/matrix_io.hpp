#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pcore/campaign.hpp"
#include "pcore/matrix_kernel.hpp"

namespace pcore::cli {

using nlohmann::json;

/// Unreadable or ill-formed input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json read_json_file(const std::string& path);

bool is_matrix_file(const json& j);

/// Object keyed by symbol; an optional integer "split" and boolean
/// "degenerate" ride along.
json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& j);

} // namespace pcore::cli
