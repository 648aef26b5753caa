#include "rspec/duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rspec/errors.hpp"
#include "rspec/parallel.hpp"
#include "rspec/primes.hpp"
#include "rspec/summation.hpp"

namespace rspec {

std::string_view to_string(DualityDirection direction) {
  return direction == DualityDirection::zeros_to_primes ? "zeros_to_primes" : "primes_to_zeros";
}

UniformGrid UniformGrid::span(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("grid step must be positive");
  if (!(stop >= start)) throw DomainError("grid is empty: stop precedes start");
  const double steps = std::floor((stop - start) / step + 1e-9);
  return {start, step, static_cast<std::size_t>(steps) + 1};
}

DualitySeries zeros_to_primes_series(std::span<const double> ordinates, double x_min,
                                     double x_max, double step, unsigned threads) {
  if (!(x_min > 1.0)) throw DomainError("zeros_to_primes_series: x_min must exceed 1");
  if (!(x_max > x_min)) throw DomainError("zeros_to_primes_series: empty grid (x_max <= x_min)");
  DualitySeries s;
  s.grid = UniformGrid::span(x_min, x_max, step);
  s.truncation = ordinates.size();
  s.direction = DualityDirection::zeros_to_primes;
  s.values.assign(s.grid.count, 0.0);
  parallel_for(s.grid.count, threads, [&](std::size_t k) {
    const double log_x = std::log(s.grid[k]);
    s.values[k] = -pairwise_sum(ordinates.size(),
                                [&](std::size_t n) { return std::cos(ordinates[n] * log_x); });
  });
  return s;
}

DualitySeries zeros_to_primes_series(const ZeroTable& zeros, std::size_t count, double x_min,
                                     double x_max, double step, unsigned threads) {
  if (count > zeros.size()) {
    throw DomainError("zeros_to_primes_series: requested " + std::to_string(count) +
                      " zeros but the table holds " + std::to_string(zeros.size()));
  }
  return zeros_to_primes_series(zeros.ordinates().first(count), x_min, x_max, step, threads);
}

std::vector<PrimePowerWeight> prime_power_weights(std::uint64_t X) {
  std::vector<PrimePowerWeight> out;
  for (std::uint64_t p : primes_up_to(X)) {
    const double log_p = std::log(static_cast<double>(p));
    std::uint64_t n = p;
    for (unsigned m = 1;; ++m) {
      out.push_back({n, m * log_p, log_p / std::sqrt(static_cast<double>(n))});
      if (n > X / p) break;
      n *= p;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePowerWeight& a, const PrimePowerWeight& b) { return a.n < b.n; });
  return out;
}

DualitySeries primes_to_zeros_series(std::uint64_t X, double t_min, double t_max, double step,
                                     unsigned threads) {
  if (!(t_min > 0.0)) throw DomainError("primes_to_zeros_series: t_min must be positive");
  if (!(t_max > t_min)) throw DomainError("primes_to_zeros_series: empty grid (t_max <= t_min)");
  DualitySeries s;
  s.grid = UniformGrid::span(t_min, t_max, step);
  s.truncation = X;
  s.direction = DualityDirection::primes_to_zeros;
  s.values.assign(s.grid.count, 0.0);
  const auto weights = prime_power_weights(X);
  parallel_for(s.grid.count, threads, [&](std::size_t k) {
    const double t = s.grid[k];
    s.values[k] = -pairwise_sum(weights.size(), [&](std::size_t i) {
      return weights[i].weight * std::cos(t * weights[i].log_n);
    });
  });
  return s;
}

std::vector<Peak> find_peaks(const DualitySeries& series, double min_prominence) {
  const auto& v = series.values;
  if (v.size() < 3) throw DomainError("find_peaks: series needs at least 3 points");
  if (!(min_prominence >= 0.0)) throw DomainError("find_peaks: prominence must be >= 0");

  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (!(v[i] > v[i - 1] && v[i] > v[i + 1])) continue;
    double left_min = v[i];
    for (std::size_t j = i; j-- > 0;) {
      if (v[j] > v[i]) break;
      left_min = std::min(left_min, v[j]);
    }
    double right_min = v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] > v[i]) break;
      right_min = std::min(right_min, v[j]);
    }
    const double prominence = v[i] - std::max(left_min, right_min);
    if (prominence >= min_prominence) peaks.push_back({series.abscissa(i), v[i], prominence});
  }
  return peaks;
}

}  // namespace rspec
