#include "workbench/csv.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace rspec::workbench {

std::string format_real(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{:.12g}", x);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::row() {
  rows_.emplace_back();
  return *this;
}

CsvTable& CsvTable::cell(std::string_view text) {
  if (rows_.empty()) throw std::logic_error("CsvTable::cell before row()");
  if (text.find_first_of(",\n\"") != std::string_view::npos) {
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    rows_.back().push_back(quoted + '"');
  } else {
    rows_.back().emplace_back(text);
  }
  return *this;
}

CsvTable& CsvTable::cell(double x) { return cell(std::string_view(format_real(x))); }

CsvTable& CsvTable::cell(std::uint64_t n) { return cell(std::string_view(std::to_string(n))); }

CsvTable& CsvTable::cell(std::int64_t n) { return cell(std::string_view(std::to_string(n))); }

std::string CsvTable::str() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
  return out;
}

}  // namespace rspec::workbench
