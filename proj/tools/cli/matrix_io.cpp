#include "cli/matrix_io.hpp"

#include <cmath>
#include <fstream>

namespace pcore::cli {

namespace {

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw InputError(std::string("matrix file is missing \"") + key + "\"");
    }
    return *it;
}

Index dimension(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw InputError(std::string("\"") + key + "\" must be a positive integer");
    }
    return static_cast<Index>(v.get<long long>());
}

double component(const json& v) {
    if (!v.is_number()) {
        throw InputError("matrix entries must be [real, imaginary] number pairs");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw InputError("matrix entries must be finite");
    }
    return x;
}

} // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json data = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        data.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("matrix file must be a JSON object");
    }
    const Index rows = dimension(j, "rows");
    const Index cols = dimension(j, "cols");
    const json& data = field(j, "data");
    if (!data.is_array() || static_cast<Index>(data.size()) != rows) {
        throw InputError("\"data\" must hold " + std::to_string(rows) + " rows");
    }
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& row = data[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            throw InputError("row " + std::to_string(i) + " must hold " + std::to_string(cols) +
                             " entries");
        }
        for (Index k = 0; k < cols; ++k) {
            const json& entry = row[static_cast<std::size_t>(k)];
            if (!entry.is_array() || entry.size() != 2) {
                throw InputError("matrix entries must be [real, imaginary] number pairs");
            }
            m(i, k) = Complex(component(entry[0]), component(entry[1]));
        }
    }
    return m;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

bool is_matrix_file(const json& j) {
    return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("data");
}

json instance_to_json(const Instance& instance) {
    json j = json::object();
    for (const auto& [key, m] : instance.matrices) {
        j[key] = matrix_to_json(m);
    }
    if (instance.split) {
        j["split"] = *instance.split;
    }
    j["degenerate"] = instance.degenerate;
    return j;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("instance file must be a JSON object");
    }
    // output of `pcore generate`
    if (j.contains("instance") && j.contains("theorem")) {
        return instance_from_json(j.at("instance"));
    }
    Instance out;
    for (const auto& [key, value] : j.items()) {
        if (key == "split") {
            if (!value.is_number_integer()) {
                throw InputError("\"split\" must be an integer");
            }
            out.split = static_cast<Index>(value.get<long long>());
        } else if (key == "degenerate") {
            out.degenerate = value.is_boolean() && value.get<bool>();
        } else {
            out.matrices[key] = matrix_from_json(value);
        }
    }
    return out;
}

} // namespace pcore::cli
