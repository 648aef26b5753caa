#pragma once

// Pairwise (cascade) summation with a fixed reduction tree.
//
// The tree depends only on the number of terms, so a sum is bit-reproducible
// regardless of how the caller partitions independent sums across threads.
// Terms are produced on demand by a generator `term(i)`; nothing is buffered.

#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>

namespace rspec {

inline constexpr std::size_t kPairwiseLeaf = 16;

template <typename Generator,
          typename T = std::remove_cvref_t<std::invoke_result_t<Generator&, std::size_t>>>
T pairwise_sum(std::size_t begin, std::size_t end, Generator& term) {
  const std::size_t n = end - begin;
  if (n <= kPairwiseLeaf) {
    T acc{};
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = begin + n / 2;
  return pairwise_sum<Generator, T>(begin, mid, term) +
         pairwise_sum<Generator, T>(mid, end, term);
}

template <typename Generator>
auto pairwise_sum(std::size_t n, Generator term) {
  return pairwise_sum(std::size_t{0}, n, term);
}

template <typename T>
T pairwise_sum(std::span<const T> values) {
  return pairwise_sum(values.size(), [values](std::size_t i) { return values[i]; });
}

}  // namespace rspec
