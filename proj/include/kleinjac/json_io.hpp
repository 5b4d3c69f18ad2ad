#pragma once

// JSON forms of the library's value types.
//
//   IntegerMatrix     [[int, ...], ...]                       row-major
//   RealPartMatrix    {"genus": g, "parity": "even"|"odd", "re2": [[int]]}   (stores 2 Re P)
//   FixedLocus        {"count": n, "offsets": [["0", "1/2", ...], ...]}
//   Divisor           {"points": [{"x": "p/q", "y": "r/s", "mult": n}, ...]}

#include "kleinjac/genus1_divisor_model.hpp"
#include "kleinjac/integer_matrix.hpp"
#include "kleinjac/torus_fixed_locus.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kleinjac {

using nlohmann::json;

inline json to_json_value(const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntegerMatrix integer_matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols) throw std::invalid_argument("matrix JSON rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!row.at(k).is_number_integer()) throw std::invalid_argument("matrix JSON entries must be integers");
            m(i, k) = row.at(k).get<long long>();
        }
    }
    return m;
}

inline json to_json_value(const RealPartMatrix& rp) {
    return {{"genus", rp.genus()}, {"parity", std::string(to_string(rp.parity()))}, {"re2", to_json_value(rp.doubled())}};
}

inline RealPartMatrix real_part_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("real-part JSON must be an object");
    const auto genus = j.at("genus").get<unsigned>();
    const Parity parity = j.contains("parity") ? parse_parity(j.at("parity").get<std::string>()) : parity_of(genus);
    return RealPartMatrix(genus, parity, integer_matrix_from_json(j.at("re2")));
}

inline json rational_row(const std::vector<Rational>& v) {
    json row = json::array();
    for (const auto& r : v) row.push_back(to_string(r));
    return row;
}

inline json to_json_value(const FixedLocus& locus) {
    json offsets = json::array();
    for (const auto& off : locus.offsets) offsets.push_back(rational_row(off));
    return {{"count", locus.count()}, {"offsets", std::move(offsets)}};
}

inline json to_json_value(const genus1::Divisor& d) {
    json pts = json::array();
    for (const auto& [p, m] : d.support()) pts.push_back({{"x", to_string(p.x)}, {"y", to_string(p.y)}, {"mult", m}});
    return {{"points", std::move(pts)}};
}

inline genus1::Divisor divisor_from_json(const json& j) {
    genus1::Divisor d;
    for (const json& p : j.at("points")) {
        d.add({parse_rational(p.at("x").get<std::string>()), parse_rational(p.at("y").get<std::string>())},
              p.at("mult").get<long long>());
    }
    return d;
}

}  // namespace kleinjac
