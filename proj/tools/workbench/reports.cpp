#include "workbench/reports.hpp"

#include <fmt/format.h>

#include <functional>

#include "workbench/csv.hpp"

namespace rspec::workbench {

namespace {

std::string join(std::span<const std::uint64_t> v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string histogram_csv(const Histogram& h) {
  CsvTable t({"bin_low", "bin_high", "count"});
  for (std::size_t k = 0; k < h.bin_count; ++k) {
    t.row().cell(h.bin_low(k)).cell(h.bin_high(k)).cell(h.counts[k]);
  }
  return t.str();
}

std::string bi_distribution_csv(const BiDistribution& b) {
  CsvTable t({"x_bin", "y_bin", "count"});
  for (std::size_t x = 0; x < b.bins; ++x) {
    for (std::size_t y = 0; y < b.bins; ++y) {
      t.row().cell(std::uint64_t{x}).cell(std::uint64_t{y}).cell(b.cell(x, y));
    }
  }
  return t.str();
}

std::string row_csv(std::span<const RowEntry> row) {
  CsvTable t({"q", "c"});
  for (const auto& e : row) t.row().cell(e.q).cell(e.c);
  return t.str();
}

std::string matrix_csv(const CorrelationMatrix& m) {
  std::vector<std::string> header{"p"};
  for (auto p : m.primes) header.push_back(std::to_string(p));
  CsvTable t(std::move(header));
  for (std::size_t i = 0; i < m.size(); ++i) {
    t.row().cell(m.primes[i]);
    for (std::size_t j = 0; j < m.size(); ++j) t.cell(m.at(i, j));
  }
  return t.str();
}

std::string resonance_flags(const ResonanceRow& row) {
  std::vector<std::string_view> flags;
  if (row.resonant) flags.push_back("resonant");
  if (row.q_divides_p_minus_1) flags.push_back("q_divides_p_minus_1");
  if (row.p_divides_q_minus_1) flags.push_back("p_divides_q_minus_1");
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) out += ';';
    out += flags[i];
  }
  return out;
}

std::string resonance_csv(const ResonanceReport& r) {
  CsvTable t({"q", "c", "z", "flags", "shared_predecessors"});
  for (const auto& row : r.rows) {
    t.row().cell(row.q).cell(row.c).cell(row.z).cell(resonance_flags(row)).cell(
        join(row.shared_predecessors, ";"));
  }
  return t.str();
}

std::string resonance_summary(const ResonanceReport& r, std::size_t top) {
  const auto p_minus_1 = factorize(r.base_prime - 1);
  std::string s = fmt::format("base prime {} (p-1 = {})\n", r.base_prime,
                              format_factorization(p_minus_1));
  s += fmt::format("baseline: {} entries, mean {}, stddev {}\n", r.baseline_count,
                   format_real(r.baseline_mean), format_real(r.baseline_stddev));
  const auto flagged = r.resonances();
  s += fmt::format("resonances: {}\n", flagged.size());
  for (const auto* row : flagged) {
    s += fmt::format("  q={} c={} z={} q-1={} shared={} {}\n", row->q, format_real(row->c),
                     format_real(row->z), format_factorization(row->q_minus_1),
                     join(row->shared_predecessors, ","), resonance_flags(*row));
  }
  s += fmt::format("top {} by c:\n", std::min(top, r.rows.size()));
  for (std::size_t i = 0; i < top && i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    s += fmt::format("  #{} q={} c={} z={} q-1={}\n", i + 1, row.q, format_real(row.c),
                     format_real(row.z), format_factorization(row.q_minus_1));
  }
  return s;
}

std::string pratt_text(const PrattTree& tree) {
  std::string s;
  std::function<void(const PrattTree&, unsigned, unsigned)> walk =
      [&](const PrattTree& node, unsigned exponent, unsigned depth) {
        s += std::string(2 * depth, ' ') + std::to_string(node.prime);
        if (exponent > 1) s += "^" + std::to_string(exponent);
        s += '\n';
        for (const auto& e : node.edges) walk(e.child, e.exponent, depth + 1);
      };
  walk(tree, 1, 0);
  return s;
}

std::string pratt_csv(const PrattTree& tree) {
  CsvTable t({"parent", "child", "exponent"});
  std::function<void(const PrattTree&)> walk = [&](const PrattTree& node) {
    for (const auto& e : node.edges) {
      t.row().cell(node.prime).cell(e.child.prime).cell(std::uint64_t{e.exponent});
      walk(e.child);
    }
  };
  walk(tree);
  return t.str();
}

std::string series_csv(const DualitySeries& s) {
  CsvTable t({"abscissa", "value"});
  for (std::size_t k = 0; k < s.size(); ++k) t.row().cell(s.abscissa(k)).cell(s.values[k]);
  return t.str();
}

std::string peaks_csv(std::span<const Peak> peaks) {
  CsvTable t({"peak_abscissa", "peak_value", "prominence"});
  for (const auto& p : peaks) t.row().cell(p.abscissa).cell(p.value).cell(p.prominence);
  return t.str();
}

}  // namespace rspec::workbench
