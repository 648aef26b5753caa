#pragma once

// Text and CSV renderings of the core result types.

#include <span>
#include <string>

#include "rspec/correlation.hpp"
#include "rspec/duality.hpp"
#include "rspec/primes.hpp"
#include "rspec/sector.hpp"

namespace rspec::workbench {

std::string histogram_csv(const Histogram& h);             // bin_low,bin_high,count
std::string bi_distribution_csv(const BiDistribution& b);  // x_bin,y_bin,count
std::string row_csv(std::span<const RowEntry> row);        // q,c
std::string matrix_csv(const CorrelationMatrix& m);        // header of primes, one row per prime
std::string resonance_csv(const ResonanceReport& r);       // q,c,z,flags,shared_predecessors
std::string resonance_summary(const ResonanceReport& r, std::size_t top = 10);
std::string pratt_text(const PrattTree& tree);
std::string pratt_csv(const PrattTree& tree);  // parent,child,exponent
std::string series_csv(const DualitySeries& s);
std::string peaks_csv(std::span<const Peak> peaks);

/// "resonant;q_divides_p_minus_1" style flag list for one row.
std::string resonance_flags(const ResonanceRow& row);

}  // namespace rspec::workbench
