#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rspec::workbench::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Vertical bars over [0, 1); one bar per count.
std::string bar_chart(const std::string& title, const std::vector<std::uint64_t>& counts);

/// Polylines sharing one pair of axes; each series gets its own colour.
std::string line_chart(const std::string& title, const std::vector<Series>& series);

/// Square grid, row-major cells[x * bins + y], y drawn upward.
std::string heat_map(const std::string& title, const std::vector<std::uint64_t>& cells,
                     std::size_t bins);

}  // namespace rspec::workbench::svg
