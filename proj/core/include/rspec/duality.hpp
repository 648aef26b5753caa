#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rspec/zero_table.hpp"

namespace rspec {

enum class DualityDirection { zeros_to_primes, primes_to_zeros };

std::string_view to_string(DualityDirection direction);

/// Uniform grid start + k * step, k = 0 .. count-1.
struct UniformGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  double operator[](std::size_t k) const noexcept { return start + static_cast<double>(k) * step; }

  /// Every start + k*step <= stop (with a 1e-9 step slack for the endpoint).
  /// Throws DomainError when step <= 0 or the grid is empty.
  static UniformGrid span(double start, double stop, double step);
};

struct DualitySeries {
  UniformGrid grid;
  std::vector<double> values;
  std::uint64_t truncation = 0;  // zeros used, or prime-power bound X
  DualityDirection direction = DualityDirection::zeros_to_primes;

  std::size_t size() const noexcept { return values.size(); }
  double abscissa(std::size_t k) const noexcept { return grid[k]; }
};

/// values[k] = -sum_{n <= C} cos(t_n log x_k). Maxima sit near prime powers.
/// Requires 1 < x_min < x_max, step > 0 and C <= zeros.size().
DualitySeries zeros_to_primes_series(const ZeroTable& zeros, std::size_t count, double x_min,
                                     double x_max, double step, unsigned threads = 0);

/// Same detector over an explicit block of ordinates (any length, possibly
/// empty); used for truncation-linearity checks.
DualitySeries zeros_to_primes_series(std::span<const double> ordinates, double x_min,
                                     double x_max, double step, unsigned threads = 0);

struct PrimePowerWeight {
  std::uint64_t n = 0;  // prime power p^m
  double log_n = 0.0;
  double weight = 0.0;  // Lambda(n) / sqrt(n)
};

/// Every prime power n <= X with its von Mangoldt weight, ascending in n.
std::vector<PrimePowerWeight> prime_power_weights(std::uint64_t X);

/// values[k] = -sum_{n <= X} Lambda(n) n^{-1/2} cos(t_k log n). Maxima sit
/// near zero ordinates. Requires 0 < t_min < t_max and step > 0.
DualitySeries primes_to_zeros_series(std::uint64_t X, double t_min, double t_max, double step,
                                     unsigned threads = 0);

struct Peak {
  double abscissa = 0.0;
  double value = 0.0;
  double prominence = 0.0;
};

/// Strict interior local maxima whose topographic prominence (height above
/// the higher of the two lowest points reached on either side before a
/// higher value or the series end) is at least min_prominence. Sorted by
/// abscissa. Throws DomainError for fewer than 3 points or a negative bound.
std::vector<Peak> find_peaks(const DualitySeries& series, double min_prominence);

}  // namespace rspec
