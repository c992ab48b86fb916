// SPDX-License-Identifier: Apache-2.0

#include "table.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace coopw::cli {
namespace {

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(std::uint64_t u) const { return std::to_string(u); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(std::uint64_t u) const { return u; }
    nlohmann::ordered_json operator()(double d) const { return d; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format: " + name);
}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw std::logic_error("Table::add_row: cell count does not match columns");
  }
  rows_.push_back(std::move(cells));
}

void Table::emit(std::ostream& os, OutputFormat format) const {
  switch (format) {
    case OutputFormat::Csv: {
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        os << (c ? "," : "") << csv_escape(columns_[c]);
      }
      os << '\n';
      for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          os << (c ? "," : "") << csv_escape(cell_text(row[c]));
        }
        os << '\n';
      }
      return;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& row : rows_) {
        nlohmann::ordered_json object;
        for (std::size_t c = 0; c < row.size(); ++c) object[columns_[c]] = cell_json(row[c]);
        out.push_back(std::move(object));
      }
      os << out.dump(2) << '\n';
      return;
    }
    case OutputFormat::Text: {
      if (rows_.size() == 1) {
        std::size_t width = 0;
        for (const auto& name : columns_) width = std::max(width, name.size());
        for (std::size_t c = 0; c < columns_.size(); ++c) {
          os << columns_[c] << std::string(width - columns_[c].size(), ' ') << " : "
             << cell_text(rows_[0][c]) << '\n';
        }
        return;
      }
      std::vector<std::size_t> widths(columns_.size());
      for (std::size_t c = 0; c < columns_.size(); ++c) widths[c] = columns_[c].size();
      for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          widths[c] = std::max(widths[c], cell_text(row[c]).size());
        }
      }
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        os << (c ? "  " : "") << columns_[c]
           << std::string(widths[c] - columns_[c].size(), ' ');
      }
      os << '\n';
      for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          const std::string text = cell_text(row[c]);
          os << (c ? "  " : "") << text << std::string(widths[c] - text.size(), ' ');
        }
        os << '\n';
      }
      return;
    }
  }
}

}  // namespace coopw::cli
