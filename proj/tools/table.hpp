// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace coopw::cli {

enum class OutputFormat { Text, Csv, Json };

// Empty (monostate) cells render as blank fields in text/CSV and null in JSON.
using Cell = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

// Row-major result table with fixed columns.
//   text: "name: value" lines for a single row, aligned columns otherwise
//   csv:  header row + comma-separated rows, doubles at 12 significant digits
//   json: array of one object per row, column names as keys, insertion order
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> cells);
  void emit(std::ostream& os, OutputFormat format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

// 12 significant digits: enough to reproduce every figure without ambiguity.
[[nodiscard]] std::string format_double(double x);

[[nodiscard]] OutputFormat parse_format(const std::string& name);

}  // namespace coopw::cli
