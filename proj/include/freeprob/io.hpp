// Copyright 2026 The freeprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef FREEPROB_IO_HPP
#define FREEPROB_IO_HPP

#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "freeprob/rational.hpp"

namespace freeprob {

/// One table cell: exact rationals stay `p/q` strings, floats are rendered
/// with 17 significant digits, integers verbatim.
using Cell = std::variant<std::string, Rat, double, long long>;

/// Deterministic %.17g rendering (no locale).
inline std::string fmt_f64(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

inline std::string cell_str(const Cell &c) {
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    if (std::holds_alternative<Rat>(c)) return rat_str(std::get<Rat>(c));
    if (std::holds_alternative<double>(c)) return fmt_f64(std::get<double>(c));
    return std::to_string(std::get<long long>(c));
}

/// Column-ordered table with ordered metadata; renders as CSV or JSON.
struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::pair<std::string, std::string>> meta; // ordered key/value
    std::vector<std::vector<Cell>> rows;

    void add_meta(std::string key, std::string value) {
        meta.emplace_back(std::move(key), std::move(value));
    }
    void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

/// First line is the header; '\n' endings; byte-stable for fixed input.
inline std::string render_csv(const OutputTable &t) {
    std::string out;
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto &row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_str(row[i]);
        }
        out += '\n';
    }
    return out;
}

/// {"meta": {...}, "rows": [{column: value, ...}, ...]}, snake_case keys.
inline std::string render_json(const OutputTable &t) {
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::object();
    for (const auto &[k, v] : t.meta) j["meta"][k] = v;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            const Cell &c = row[i];
            if (std::holds_alternative<double>(c))
                obj[t.columns[i]] = std::get<double>(c);
            else if (std::holds_alternative<long long>(c))
                obj[t.columns[i]] = std::get<long long>(c);
            else
                obj[t.columns[i]] = cell_str(c);
        }
        j["rows"].push_back(std::move(obj));
    }
    return j.dump(2) + "\n";
}

inline std::string render(const OutputTable &t, const std::string &format) {
    if (format == "json") return render_json(t);
    return render_csv(t);
}

} // namespace freeprob

#endif
