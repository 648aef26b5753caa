#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rspec/primes.hpp"
#include "rspec/sector.hpp"
#include "rspec/zero_table.hpp"

namespace rspec {

/// raw: |<X_p, X_q>|, the modulus of the normalized Hermitian inner product.
/// centered: modulus of the complex Pearson coefficient.
enum class CorrelationMode { raw, centered };

std::string_view to_string(CorrelationMode mode);
/// Accepts "raw" or "centered"; throws DomainError otherwise.
CorrelationMode parse_correlation_mode(std::string_view text);

struct CorrelationConfig {
  CorrelationMode mode = CorrelationMode::raw;
  std::size_t zero_count = 1000;
  std::uint64_t small_prime_floor = 50;
  double resonance_z = 3.0;

  /// Throws DomainError unless zero_count >= 2 and resonance_z > 0.
  void validate() const;
};

/// (1/N) sum_n a_n conj(b_n), evaluated from the phase difference of the
/// two reduced samples so that a sample paired with itself gives exactly 1.
/// Both samples need compression 1 and equal length.
std::complex<double> inner_product(const SectorSample& a, const SectorSample& b);

/// The same quantity as the literal product of the stored unit values.
std::complex<double> inner_product_from_values(const SectorSample& a, const SectorSample& b);

/// (1/N) sum_n (p/q)^{i t_n} straight from the ordinates, through log(p/q).
std::complex<double> ratio_inner_product(std::span<const double> ordinates, std::uint64_t p,
                                         std::uint64_t q);

/// Result lies in [0, 1]. Centered mode throws DegenerateSampleError when
/// either sample has zero variance.
double correlation(const SectorSample& a, const SectorSample& b, CorrelationMode mode);

struct RowEntry {
  std::uint64_t q = 0;
  double c = 0.0;
};

/// c(X_p, X_q) for each q over the first config.zero_count ordinates. The
/// q == p entry is reported as 0 (plotting convention for the self-term).
std::vector<RowEntry> correlation_row(const ZeroTable& zeros, std::uint64_t p,
                                      std::span<const std::uint64_t> qs,
                                      const CorrelationConfig& config, unsigned threads = 0);

struct CorrelationMatrix {
  std::vector<std::uint64_t> primes;
  std::vector<double> entries;  // row-major, primes.size() squared
  CorrelationConfig config;

  std::size_t size() const noexcept { return primes.size(); }
  double at(std::size_t i, std::size_t j) const { return entries[i * primes.size() + j]; }
};

/// Full symmetric matrix; the diagonal is left untouched (exactly 1 in raw
/// mode). Output is independent of `threads`.
CorrelationMatrix correlation_matrix(const ZeroTable& zeros, std::span<const std::uint64_t> primes,
                                     const CorrelationConfig& config, unsigned threads = 0);

struct ResonanceRow {
  std::uint64_t q = 0;
  double c = 0.0;
  double z = 0.0;
  bool resonant = false;
  bool q_divides_p_minus_1 = false;
  bool p_divides_q_minus_1 = false;
  std::vector<std::uint64_t> shared_predecessors;  // primes dividing both p-1 and q-1
  std::vector<PrimePower> q_minus_1;
};

struct ResonanceReport {
  std::uint64_t base_prime = 0;
  double baseline_mean = 0.0;
  double baseline_stddev = 0.0;  // sample sd; 0 for a flat baseline, and then every z is 0
  std::size_t baseline_count = 0;
  std::vector<ResonanceRow> rows;  // descending c, ties by ascending q

  std::vector<const ResonanceRow*> resonances() const;
  /// Row for q, or nullptr.
  const ResonanceRow* find(std::uint64_t q) const;
  /// 1-based position of q in the ranking, 0 if absent.
  std::size_t rank_of(std::uint64_t q) const;
};

/// Baseline statistics use entries with q > small_prime_floor and q != p;
/// baseline entries with z >= resonance_z are marked resonant. Every row is
/// annotated with its POSet relation to p. Throws InsufficientDataError when
/// fewer than 3 baseline entries exist.
ResonanceReport detect_resonances(std::span<const RowEntry> row, std::uint64_t p,
                                  const CorrelationConfig& config);

}  // namespace rspec
