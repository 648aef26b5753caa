#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rspec/zero_table.hpp"

namespace rspec {

/// The p-sector X_p(t) = p^{it} sampled on a table of zero ordinates.
///
/// `reduced[n]` is frac(t_n log p / (2 pi q_c)) for compression factor q_c:
/// the reduction window is stretched by q_c, folding q_c periods of the
/// character into [0, 1). `values[n]` is always the unreduced e^{i t_n log p}.
struct SectorSample {
  std::uint64_t prime = 0;
  unsigned compression = 1;
  std::vector<std::complex<double>> values;
  std::vector<double> reduced;

  std::size_t size() const noexcept { return values.size(); }
};

/// Throws DomainError if p is not prime or compression is 0.
SectorSample sector_sample(const ZeroTable& zeros, std::uint64_t p, unsigned compression = 1);

/// Same, restricted to the first `count` ordinates (count <= zeros.size()).
SectorSample sector_sample(const ZeroTable& zeros, std::uint64_t p, unsigned compression,
                           std::size_t count);

/// frac(t * turns_per_unit), guaranteed to land in [0, 1).
double fractional_turns(double t, double turns_per_unit);

struct Histogram {
  std::size_t bin_count = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  double bin_low(std::size_t k) const { return static_cast<double>(k) / bin_count; }
  double bin_high(std::size_t k) const { return static_cast<double>(k + 1) / bin_count; }
};

/// Uniform binning of [0, 1). Throws DomainError for bins == 0 or any value
/// outside [0, 1).
Histogram histogram(std::span<const double> values, std::size_t bins);

/// Shannon entropy in nats of the binned distribution; in [0, log bins].
/// Throws DomainError for an empty histogram.
double histogram_entropy(const Histogram& h);

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// Joint reduction (frac(alpha_1 t), frac(alpha_2 t)) with M alpha = log P / 2 pi.
struct BiDistribution {
  std::array<std::uint64_t, 2> primes{};
  IntMatrix2 transform{};
  std::array<double, 2> alpha{};
  std::vector<std::array<double, 2>> points;
  std::size_t bins = 0;
  /// Row-major [x_bin * bins + y_bin].
  std::vector<std::uint64_t> grid;

  std::uint64_t cell(std::size_t x_bin, std::size_t y_bin) const {
    return grid[x_bin * bins + y_bin];
  }
};

/// Solves M alpha = (log p1, log p2) / 2 pi through the integer adjugate,
/// dividing by det M only after scaling by the logs.
std::array<double, 2> solve_alpha(const IntMatrix2& m, std::uint64_t p1, std::uint64_t p2);

/// Throws DomainError when det M = 0, either prime is composite, or bins == 0.
BiDistribution bi_distribution(const ZeroTable& zeros, std::uint64_t p1, std::uint64_t p2,
                               const IntMatrix2& m, std::size_t bins = 50);

}  // namespace rspec
