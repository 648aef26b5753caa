#include "rspec/duality.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rspec/errors.hpp"

namespace {

const rspec::ZeroTable& fixture() {
  static const auto t = rspec::ZeroTable::load(oracle::fixture_path());
  return t;
}

rspec::DualitySeries from_values(std::vector<double> v) {
  rspec::DualitySeries s;
  s.grid = {0.0, 1.0, v.size()};
  s.values = std::move(v);
  return s;
}

TEST(UniformGrid, SpanIncludesEndpoint) {
  const auto g = rspec::UniformGrid::span(1.5, 10.5, 0.001);
  EXPECT_EQ(g.count, 9001u);
  EXPECT_NEAR(g[g.count - 1], 10.5, 1e-12);
  for (std::size_t k = 1; k < g.count; ++k) ASSERT_NEAR(g[k] - g[k - 1], 0.001, 1e-12);
  EXPECT_THROW(rspec::UniformGrid::span(1.0, 2.0, 0.0), rspec::DomainError);
  EXPECT_THROW(rspec::UniformGrid::span(2.0, 1.0, 0.1), rspec::DomainError);
}

TEST(ZerosToPrimes, EmptySumIsZero) {
  const auto s = rspec::zeros_to_primes_series(fixture(), 0, 1.5, 10.5, 0.01);
  for (double v : s.values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(s.truncation, 0u);
  EXPECT_EQ(s.direction, rspec::DualityDirection::zeros_to_primes);
}

TEST(ZerosToPrimes, ThreeTermPoint) {
  const auto s = rspec::zeros_to_primes_series(fixture(), 3, 2.0, 2.0 + 1e-3, 1e-3);
  const double l2 = std::log(2.0);
  const double expected =
      -(std::cos(fixture()[0] * l2) + std::cos(fixture()[1] * l2) + std::cos(fixture()[2] * l2));
  EXPECT_NEAR(s.values[0], expected, 1e-14);
}

TEST(ZerosToPrimes, MatchesNaiveOracle) {
  const auto s = rspec::zeros_to_primes_series(fixture(), 1000, 1.5, 10.5, 0.37);
  for (std::size_t k = 0; k < s.size(); ++k) {
    ASSERT_NEAR(s.values[k], oracle::naive_zeros_detector(fixture().ordinates(), s.abscissa(k)),
                1e-10);
  }
}

TEST(ZerosToPrimes, LinearInTruncation) {
  const auto t = fixture().ordinates();
  for (auto [c1, c2] : {std::pair<std::size_t, std::size_t>{100, 300}, {300, 1000}, {0, 50}}) {
    const auto a = rspec::zeros_to_primes_series(fixture(), c1, 1.5, 10.5, 0.01);
    const auto b = rspec::zeros_to_primes_series(fixture(), c2, 1.5, 10.5, 0.01);
    const auto block = rspec::zeros_to_primes_series(t.subspan(c1, c2 - c1), 1.5, 10.5, 0.01);
    for (std::size_t k = 0; k < a.size(); ++k) {
      ASSERT_NEAR(b.values[k] - a.values[k], block.values[k], 1e-12) << c1 << ".." << c2;
    }
  }
}

TEST(ZerosToPrimes, LandauGrowthAtPrimePowers) {
  // At a prime power the detector is positive and grows with the height of
  // the last zero used; between prime powers it stays comparatively small.
  for (double x : {2.0, 3.0, 4.0, 5.0, 7.0}) {
    double prev = 0.0;
    for (std::size_t c : {100u, 300u, 1000u}) {
      const auto s = rspec::zeros_to_primes_series(fixture(), c, x, x + 1e-3, 1e-3);
      ASSERT_GT(s.values[0], prev) << "x=" << x << " C=" << c;
      prev = s.values[0];
    }
  }
  const auto at5 = rspec::zeros_to_primes_series(fixture(), 1000, 5.0, 5.001, 1e-3).values[0];
  const auto at55 = rspec::zeros_to_primes_series(fixture(), 1000, 5.5, 5.501, 1e-3).values[0];
  EXPECT_GE(at5, 3.0 * std::abs(at55));
}

TEST(ZerosToPrimes, Errors) {
  EXPECT_THROW(rspec::zeros_to_primes_series(fixture(), 10, 1.0, 2.0, 0.1), rspec::DomainError);
  EXPECT_THROW(rspec::zeros_to_primes_series(fixture(), 10, 3.0, 2.0, 0.1), rspec::DomainError);
  EXPECT_THROW(rspec::zeros_to_primes_series(fixture(), 1001, 2.0, 3.0, 0.1), rspec::DomainError);
  EXPECT_THROW(rspec::zeros_to_primes_series(fixture(), 10, 2.0, 3.0, -0.1), rspec::DomainError);
}

TEST(PrimePowerWeights, VonMangoldtSupport) {
  const auto w = rspec::prime_power_weights(100);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 2; n <= 100; ++n) {
    if (oracle::von_mangoldt(n) > 0) expected.push_back(n);
  }
  ASSERT_EQ(w.size(), expected.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    EXPECT_EQ(w[i].n, expected[i]);
    EXPECT_NEAR(w[i].log_n, std::log(static_cast<double>(w[i].n)), 1e-13);
    EXPECT_NEAR(w[i].weight, oracle::von_mangoldt(w[i].n) / std::sqrt(w[i].n), 1e-15);
  }
}

TEST(PrimesToZeros, BelowTwoIsZero) {
  const auto s = rspec::primes_to_zeros_series(1, 10.0, 16.0, 0.5);
  for (double v : s.values) EXPECT_EQ(v, 0.0);
}

TEST(PrimesToZeros, ClosedFormAtSmallT) {
  // t -> 0 gives -sum Lambda(n)/sqrt(n); t = 1e-9 keeps the grid positive.
  const auto s = rspec::primes_to_zeros_series(10, 1e-9, 2e-9, 1e-9);
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  const double expected = -(l2 * (1 / std::sqrt(2.0) + 0.5 + 1 / std::sqrt(8.0)) +
                            l3 * (1 / std::sqrt(3.0) + 1.0 / 3.0) + std::log(5.0) / std::sqrt(5.0) +
                            std::log(7.0) / std::sqrt(7.0));
  EXPECT_NEAR(s.values[0], expected, 1e-12);
  EXPECT_NEAR(expected, -3.53750281426624904, 1e-14);
}

TEST(PrimesToZeros, MatchesNaiveOracle) {
  const auto s = rspec::primes_to_zeros_series(2000, 10.0, 16.0, 0.77);
  for (std::size_t k = 0; k < s.size(); ++k) {
    ASSERT_NEAR(s.values[k], oracle::naive_primes_detector(2000, s.abscissa(k)), 1e-10);
  }
}

TEST(PrimesToZeros, Errors) {
  EXPECT_THROW(rspec::primes_to_zeros_series(100, 0.0, 1.0, 0.1), rspec::DomainError);
  EXPECT_THROW(rspec::primes_to_zeros_series(100, 5.0, 5.0, 0.1), rspec::DomainError);
}

TEST(FindPeaks, Examples) {
  const auto p = rspec::find_peaks(from_values({0, 1, 0}), 0.5);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].abscissa, 1.0);
  EXPECT_EQ(p[0].value, 1.0);
  EXPECT_TRUE(rspec::find_peaks(from_values({0, 1, 2, 3, 4}), 0.0).empty());
  EXPECT_TRUE(rspec::find_peaks(from_values({4, 3, 2, 1, 0}), 0.0).empty());
  EXPECT_TRUE(rspec::find_peaks(from_values({0, 1, 1, 0}), 0.0).empty());  // plateau is not strict
}

TEST(FindPeaks, ProminenceIsTopographic) {
  // Small bump at index 3 rides on the shoulder of the big peak at index 6.
  const auto s = from_values({0, 1, 2, 2.5, 2.4, 4, 10, 3, 0});
  auto all = rspec::find_peaks(s, 0.0);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_NEAR(all[0].prominence, 0.1, 1e-12);
  EXPECT_NEAR(all[1].prominence, 10.0, 1e-12);
  EXPECT_EQ(rspec::find_peaks(s, 0.5).size(), 1u);
}

TEST(FindPeaks, Errors) {
  EXPECT_THROW(rspec::find_peaks(from_values({0, 1}), 0.0), rspec::DomainError);
  EXPECT_THROW(rspec::find_peaks(from_values({0, 1, 0}), -1.0), rspec::DomainError);
}

TEST(FindPeaks, PrimePowersFromThousandZeros) {
  const auto s = rspec::zeros_to_primes_series(fixture(), 1000, 1.5, 10.5, 0.001);
  // Prime-power peaks have prominence >= 73 here, the sidelobes <= 57.
  const auto peaks = rspec::find_peaks(s, 65.0);
  EXPECT_EQ(peaks.size(), 7u);
  for (double target : {2.0, 3.0, 4.0, 5.0, 7.0, 8.0, 9.0}) {
    const bool hit = std::any_of(peaks.begin(), peaks.end(),
                                 [&](const auto& p) { return std::abs(p.abscissa - target) <= 0.02; });
    EXPECT_TRUE(hit) << "no peak near " << target;
  }
}

TEST(FindPeaks, RefiningTheGridKeepsPeaksInPlace) {
  const auto coarse = rspec::zeros_to_primes_series(fixture(), 1000, 1.5, 10.5, 0.002);
  const auto fine = rspec::zeros_to_primes_series(fixture(), 1000, 1.5, 10.5, 0.001);
  const auto pc = rspec::find_peaks(coarse, 65.0);
  const auto pf = rspec::find_peaks(fine, 65.0);
  ASSERT_FALSE(pc.empty());
  for (const auto& p : pc) {
    const auto nearest = std::min_element(pf.begin(), pf.end(), [&](const auto& a, const auto& b) {
      return std::abs(a.abscissa - p.abscissa) < std::abs(b.abscissa - p.abscissa);
    });
    ASSERT_NE(nearest, pf.end());
    EXPECT_LE(std::abs(nearest->abscissa - p.abscissa), 0.002 + 1e-12) << p.abscissa;
  }
}

}  // namespace
