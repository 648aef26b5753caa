#pragma once

// CSV dialect: comma separator, '.' decimal point, header row, LF endings,
// reals with 12 significant digits. Output is byte-stable for equal input.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rspec::workbench {

/// %.12g with negative zero folded to "0".
std::string format_real(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable& row();
  CsvTable& cell(std::string_view text);
  CsvTable& cell(double x);
  CsvTable& cell(std::uint64_t n);
  CsvTable& cell(std::int64_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace rspec::workbench
