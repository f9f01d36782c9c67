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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qmeas::cli {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// Rectangular result set; every row has one cell per column.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    [[nodiscard]] std::size_t column_index(const std::string &name) const;
    [[nodiscard]] double number(std::size_t row, const std::string &column) const;
};

/// "%.17g" so that every double survives a text round trip.
std::string format_double(double x);

/// One header line, then one line per row. Booleans print as true/false.
void write_csv(std::ostream &os, const Table &table);

/// {"config": <config>, "columns": [...], "rows": [{column: value, ...}, ...]}
nlohmann::json table_to_json(const Table &table, const nlohmann::json &config);

/// Column-name token for an outcome label: '+' -> 'p', '-' -> 'm', ',' -> '_'.
std::string label_token(const std::string &label);

} // namespace qmeas::cli
