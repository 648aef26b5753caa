#include "rspec/summation.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>
#include <vector>

#include "rspec/parallel.hpp"

namespace {

TEST(PairwiseSum, EmptyIsZero) {
  EXPECT_EQ(rspec::pairwise_sum(0, [](std::size_t) { return 1.0; }), 0.0);
}

TEST(PairwiseSum, CountsOnesExactly) {
  for (std::size_t n : {1u, 15u, 16u, 17u, 1000u, 100000u}) {
    EXPECT_EQ(rspec::pairwise_sum(n, [](std::size_t) { return 1.0; }), static_cast<double>(n));
  }
}

TEST(PairwiseSum, BeatsNaiveAccumulationOnSmallTerms) {
  // 10^7 copies of 0.1: naive left-to-right drifts by ~1e-4, pairwise by far less.
  const std::size_t n = 10'000'000;
  const double exact = 1'000'000.0;
  const double pairwise = rspec::pairwise_sum(n, [](std::size_t) { return 0.1; });
  double naive = 0.0;
  for (std::size_t i = 0; i < n; ++i) naive += 0.1;
  EXPECT_LT(std::abs(pairwise - exact), std::abs(naive - exact));
  EXPECT_NEAR(pairwise, exact, 1e-6);
}

TEST(PairwiseSum, ComplexTermsAndSpanOverload) {
  std::vector<std::complex<double>> v{{1, 2}, {3, -4}, {0.5, 0.25}};
  const auto s = rspec::pairwise_sum(std::span<const std::complex<double>>(v));
  EXPECT_EQ(s, std::complex<double>(4.5, -1.75));
}

TEST(ParallelFor, ResultIndependentOfWorkerCount) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> data(5000);
  for (auto& x : data) x = u(rng);

  auto run = [&](unsigned threads) {
    std::vector<double> out(64);
    rspec::parallel_for(out.size(), threads, [&](std::size_t k) {
      out[k] = rspec::pairwise_sum(data.size(), [&](std::size_t i) { return data[i] * (k + 1); });
    });
    return out;
  };
  const auto one = run(1);
  for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(run(t), one);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(rspec::parallel_for(100, 4,
                                   [](std::size_t i) {
                                     if (i == 57) throw std::runtime_error("boom");
                                   }),
               std::runtime_error);
}

}  // namespace
