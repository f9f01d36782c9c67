// Copyright 2026 The qmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmeas/cli/table.hpp"

#include <algorithm>
#include <cstdio>

#include "qmeas/errors.hpp"

namespace qmeas::cli {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw ShapeError("table row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string &name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw DomainError("no column named '" + name + "'");
    }
    return static_cast<std::size_t>(it - columns.begin());
}

double Table::number(std::size_t row, const std::string &column) const {
    const Cell &c = rows.at(row).at(column_index(column));
    if (const auto *d = std::get_if<double>(&c)) {
        return *d;
    }
    if (const auto *i = std::get_if<std::int64_t>(&c)) {
        return static_cast<double>(*i);
    }
    if (const auto *b = std::get_if<bool>(&c)) {
        return *b ? 1.0 : 0.0;
    }
    throw DomainError("column '" + column + "' is not numeric");
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string cell_text(const Cell &c) {
    struct Visitor {
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string &s) const { return s; }
    };
    return std::visit(Visitor{}, c);
}

} // namespace

void write_csv(std::ostream &os, const Table &table) {
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
        os << (k ? "," : "") << table.columns[k];
    }
    os << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            os << (k ? "," : "") << cell_text(row[k]);
        }
        os << '\n';
    }
}

nlohmann::json table_to_json(const Table &table, const nlohmann::json &config) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::visit([&](const auto &v) { obj[table.columns[k]] = v; }, row[k]);
        }
        rows.push_back(std::move(obj));
    }
    return {{"config", config}, {"columns", table.columns}, {"rows", std::move(rows)}};
}

std::string label_token(const std::string &label) {
    std::string out;
    out.reserve(label.size());
    for (const char c : label) {
        out.push_back(c == '+' ? 'p' : c == '-' ? 'm' : c == ',' ? '_' : c);
    }
    return out;
}

} // namespace qmeas::cli
