#include "rspec/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rspec/errors.hpp"
#include "rspec/parallel.hpp"
#include "rspec/summation.hpp"

namespace rspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Variance per sample below which a centered correlation is meaningless.
constexpr double kDegenerateVariance = 1e-24;

void require_comparable(const SectorSample& a, const SectorSample& b) {
  if (a.size() != b.size()) {
    throw DomainError("sector samples differ in length (" + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  }
  if (a.size() == 0) throw DomainError("sector samples are empty");
  if (a.compression != 1 || b.compression != 1) {
    throw DomainError("correlation requires compression factor 1");
  }
}

std::complex<double> mean(std::span<const std::complex<double>> v) {
  return pairwise_sum(v) / static_cast<double>(v.size());
}

double centered_correlation(const SectorSample& a, const SectorSample& b) {
  const std::size_t n = a.size();
  const auto ma = mean(a.values);
  const auto mb = mean(b.values);
  const auto cov = pairwise_sum(
      n, [&](std::size_t i) { return (a.values[i] - ma) * std::conj(b.values[i] - mb); });
  const double va = pairwise_sum(n, [&](std::size_t i) { return std::norm(a.values[i] - ma); });
  const double vb = pairwise_sum(n, [&](std::size_t i) { return std::norm(b.values[i] - mb); });
  const double nd = static_cast<double>(n);
  if (va / nd < kDegenerateVariance || vb / nd < kDegenerateVariance) {
    throw DegenerateSampleError("centered correlation of a zero-variance sector sample (p=" +
                                std::to_string(va / nd < kDegenerateVariance ? a.prime : b.prime) +
                                ")");
  }
  return std::abs(cov) / std::sqrt(va * vb);
}

}  // namespace

std::string_view to_string(CorrelationMode mode) {
  return mode == CorrelationMode::raw ? "raw" : "centered";
}

CorrelationMode parse_correlation_mode(std::string_view text) {
  if (text == "raw") return CorrelationMode::raw;
  if (text == "centered") return CorrelationMode::centered;
  throw DomainError("unknown correlation mode '" + std::string(text) + "'");
}

void CorrelationConfig::validate() const {
  if (zero_count < 2) throw DomainError("correlation needs at least 2 zeros");
  if (!(resonance_z > 0.0)) throw DomainError("resonance z threshold must be positive");
}

std::complex<double> inner_product(const SectorSample& a, const SectorSample& b) {
  require_comparable(a, b);
  const auto sum = pairwise_sum(a.size(), [&](std::size_t i) {
    return std::polar(1.0, kTwoPi * (a.reduced[i] - b.reduced[i]));
  });
  return sum / static_cast<double>(a.size());
}

std::complex<double> inner_product_from_values(const SectorSample& a, const SectorSample& b) {
  require_comparable(a, b);
  const auto sum =
      pairwise_sum(a.size(), [&](std::size_t i) { return a.values[i] * std::conj(b.values[i]); });
  return sum / static_cast<double>(a.size());
}

std::complex<double> ratio_inner_product(std::span<const double> ordinates, std::uint64_t p,
                                         std::uint64_t q) {
  if (ordinates.empty()) throw DomainError("ratio_inner_product: no ordinates");
  const double turns =
      (std::log(static_cast<double>(p)) - std::log(static_cast<double>(q))) / kTwoPi;
  const auto sum = pairwise_sum(ordinates.size(), [&](std::size_t i) {
    return std::polar(1.0, kTwoPi * fractional_turns(ordinates[i], turns));
  });
  return sum / static_cast<double>(ordinates.size());
}

double correlation(const SectorSample& a, const SectorSample& b, CorrelationMode mode) {
  if (mode == CorrelationMode::raw) return std::abs(inner_product(a, b));
  require_comparable(a, b);
  return centered_correlation(a, b);
}

std::vector<RowEntry> correlation_row(const ZeroTable& zeros, std::uint64_t p,
                                      std::span<const std::uint64_t> qs,
                                      const CorrelationConfig& config, unsigned threads) {
  config.validate();
  if (qs.empty()) throw DomainError("correlation_row: no primes to correlate against");
  const SectorSample base = sector_sample(zeros, p, 1, config.zero_count);
  std::vector<RowEntry> row(qs.size());
  parallel_for(qs.size(), threads, [&](std::size_t k) {
    const std::uint64_t q = qs[k];
    const SectorSample other = sector_sample(zeros, q, 1, config.zero_count);
    row[k] = {q, q == p ? 0.0 : correlation(base, other, config.mode)};
  });
  return row;
}

CorrelationMatrix correlation_matrix(const ZeroTable& zeros, std::span<const std::uint64_t> primes,
                                     const CorrelationConfig& config, unsigned threads) {
  config.validate();
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("correlation_matrix: primes must be distinct");
  }

  const std::size_t n = primes.size();
  std::vector<SectorSample> samples(n);
  parallel_for(n, threads, [&](std::size_t i) {
    samples[i] = sector_sample(zeros, primes[i], 1, config.zero_count);
  });

  // Upper triangle including the diagonal, flattened.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }

  CorrelationMatrix m;
  m.primes.assign(primes.begin(), primes.end());
  m.config = config;
  m.entries.assign(n * n, 0.0);
  parallel_for(cells.size(), threads, [&](std::size_t k) {
    const auto [i, j] = cells[k];
    const double c = correlation(samples[i], samples[j], config.mode);
    m.entries[i * n + j] = c;
    m.entries[j * n + i] = c;
  });
  return m;
}

std::vector<const ResonanceRow*> ResonanceReport::resonances() const {
  std::vector<const ResonanceRow*> out;
  for (const auto& r : rows) {
    if (r.resonant) out.push_back(&r);
  }
  return out;
}

const ResonanceRow* ResonanceReport::find(std::uint64_t q) const {
  for (const auto& r : rows) {
    if (r.q == q) return &r;
  }
  return nullptr;
}

std::size_t ResonanceReport::rank_of(std::uint64_t q) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].q == q) return i + 1;
  }
  return 0;
}

ResonanceReport detect_resonances(std::span<const RowEntry> row, std::uint64_t p,
                                  const CorrelationConfig& config) {
  config.validate();
  if (row.empty()) throw DomainError("detect_resonances: empty correlation row");
  const std::vector<std::uint64_t> p_preds = poset_predecessors(p);

  auto in_baseline = [&](const RowEntry& e) { return e.q > config.small_prime_floor && e.q != p; };
  std::vector<double> baseline;
  for (const auto& e : row) {
    if (in_baseline(e)) baseline.push_back(e.c);
  }
  if (baseline.size() < 3) {
    throw InsufficientDataError("detect_resonances: only " + std::to_string(baseline.size()) +
                                " baseline entries above the small-prime floor " +
                                std::to_string(config.small_prime_floor));
  }

  ResonanceReport report;
  report.base_prime = p;
  report.baseline_count = baseline.size();
  const double nb = static_cast<double>(baseline.size());
  report.baseline_mean = pairwise_sum(std::span<const double>(baseline)) / nb;
  const double ss = pairwise_sum(baseline.size(), [&](std::size_t i) {
    const double d = baseline[i] - report.baseline_mean;
    return d * d;
  });
  report.baseline_stddev = std::sqrt(ss / (nb - 1.0));
  // A spread at rounding level means a flat baseline; z-scores would be noise.
  if (report.baseline_stddev <= 1e-12 * std::max(1.0, std::abs(report.baseline_mean))) {
    report.baseline_stddev = 0.0;
  }

  for (const auto& e : row) {
    ResonanceRow r;
    r.q = e.q;
    r.c = e.c;
    r.z = report.baseline_stddev > 0.0 ? (e.c - report.baseline_mean) / report.baseline_stddev
                                       : 0.0;
    r.resonant = in_baseline(e) && r.z >= config.resonance_z;
    r.q_divides_p_minus_1 = is_poset_related(e.q, p);
    r.p_divides_q_minus_1 = is_poset_related(p, e.q);
    r.q_minus_1 = e.q > 1 ? factorize(e.q - 1) : std::vector<PrimePower>{};
    for (const auto& pp : r.q_minus_1) {
      if (std::binary_search(p_preds.begin(), p_preds.end(), pp.prime)) {
        r.shared_predecessors.push_back(pp.prime);
      }
    }
    report.rows.push_back(std::move(r));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ResonanceRow& a, const ResonanceRow& b) {
                     if (a.c != b.c) return a.c > b.c;
                     return a.q < b.q;
                   });
  return report;
}

}  // namespace rspec
