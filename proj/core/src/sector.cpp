#include "rspec/sector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rspec/errors.hpp"
#include "rspec/primes.hpp"

namespace rspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t bin_of(double v, std::size_t bins) {
  const auto k = static_cast<std::size_t>(v * static_cast<double>(bins));
  return k < bins ? k : bins - 1;
}

}  // namespace

double fractional_turns(double t, double turns_per_unit) {
  const double x = t * turns_per_unit;
  const double r = x - std::floor(x);
  // x slightly below an integer from the negative side can round r up to 1.
  return r < 1.0 ? r : 0.0;
}

SectorSample sector_sample(const ZeroTable& zeros, std::uint64_t p, unsigned compression) {
  return sector_sample(zeros, p, compression, zeros.size());
}

SectorSample sector_sample(const ZeroTable& zeros, std::uint64_t p, unsigned compression,
                           std::size_t count) {
  if (!is_prime(p)) throw DomainError("sector_sample: " + std::to_string(p) + " is not prime");
  if (compression == 0) throw DomainError("sector_sample: compression must be >= 1");
  if (count > zeros.size()) {
    throw DomainError("sector_sample: requested " + std::to_string(count) +
                      " ordinates but the table holds " + std::to_string(zeros.size()));
  }

  const double turns = std::log(static_cast<double>(p)) / kTwoPi;
  const double compressed = turns / compression;
  SectorSample s;
  s.prime = p;
  s.compression = compression;
  s.values.resize(count);
  s.reduced.resize(count);
  const auto t = zeros.ordinates();
  for (std::size_t n = 0; n < count; ++n) {
    const double phase = fractional_turns(t[n], turns);
    s.values[n] = std::polar(1.0, kTwoPi * phase);
    s.reduced[n] = compression == 1 ? phase : fractional_turns(t[n], compressed);
  }
  return s;
}

Histogram histogram(std::span<const double> values, std::size_t bins) {
  if (bins == 0) throw DomainError("histogram: bin count must be >= 1");
  Histogram h;
  h.bin_count = bins;
  h.counts.assign(bins, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!(v >= 0.0 && v < 1.0)) {
      throw DomainError("histogram: value " + std::to_string(v) + " at position " +
                        std::to_string(i) + " is outside [0, 1)");
    }
    ++h.counts[bin_of(v, bins)];
  }
  h.total = values.size();
  return h;
}

double histogram_entropy(const Histogram& h) {
  if (h.total == 0) throw DomainError("histogram_entropy: histogram is empty");
  const double total = static_cast<double>(h.total);
  double entropy = 0.0;
  for (std::uint64_t c : h.counts) {
    if (c == 0) continue;
    const double f = static_cast<double>(c) / total;
    entropy -= f * std::log(f);
  }
  return entropy;
}

std::array<double, 2> solve_alpha(const IntMatrix2& m, std::uint64_t p1, std::uint64_t p2) {
  const std::int64_t det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == 0) throw DomainError("bi_distribution: transformation matrix is singular");
  const double l1 = std::log(static_cast<double>(p1)) / kTwoPi;
  const double l2 = std::log(static_cast<double>(p2)) / kTwoPi;
  const double d = static_cast<double>(det);
  return {(static_cast<double>(m[1][1]) * l1 - static_cast<double>(m[0][1]) * l2) / d,
          (static_cast<double>(m[0][0]) * l2 - static_cast<double>(m[1][0]) * l1) / d};
}

BiDistribution bi_distribution(const ZeroTable& zeros, std::uint64_t p1, std::uint64_t p2,
                               const IntMatrix2& m, std::size_t bins) {
  for (std::uint64_t p : {p1, p2}) {
    if (!is_prime(p)) throw DomainError("bi_distribution: " + std::to_string(p) + " is not prime");
  }
  if (bins == 0) throw DomainError("bi_distribution: bin count must be >= 1");

  BiDistribution b;
  b.primes = {p1, p2};
  b.transform = m;
  b.alpha = solve_alpha(m, p1, p2);
  b.bins = bins;
  b.grid.assign(bins * bins, 0);
  b.points.reserve(zeros.size());
  for (double t : zeros.ordinates()) {
    const std::array<double, 2> pt{fractional_turns(t, b.alpha[0]),
                                   fractional_turns(t, b.alpha[1])};
    ++b.grid[bin_of(pt[0], bins) * bins + bin_of(pt[1], bins)];
    b.points.push_back(pt);
  }
  return b;
}

}  // namespace rspec
