#include "rspec/primes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rspec/errors.hpp"

namespace rspec {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kSieveLimit = 1'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> sieve(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = sieve(kSieveLimit);
  return primes;
}

// Brent's cycle-finding variant of Pollard rho. n must be odd and composite.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

PrattTree build_pratt(std::uint64_t p) {
  PrattTree node{p, {}};
  for (const auto& [q, e] : factorize(p - 1)) {
    node.edges.push_back(PrattEdge{build_pratt(q), e});
  }
  return node;
}

void require_prime(std::uint64_t n, const char* what) {
  if (!is_prime(n)) {
    throw DomainError(std::string(what) + ": " + std::to_string(n) + " is not prime");
  }
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  if (n <= kSieveLimit) {
    const auto& cached = small_primes();
    return {cached.begin(), std::upper_bound(cached.begin(), cached.end(), n)};
  }
  return sieve(n);
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  // Rosser's bound p_n < n(ln n + ln ln n) for n >= 6.
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  const auto bound = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 1;
  auto primes = primes_up_to(bound);
  primes.resize(count);
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: 0 has no prime factorization");
  std::vector<PrimePower> result;
  for (std::uint64_t p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.push_back({p, e});
  }
  if (n == 1) return result;

  const std::uint64_t last = small_primes().back();
  if (n <= last * last) {
    result.push_back({n, 1});  // no divisor up to sqrt(n) was found
    return result;
  }
  std::vector<std::uint64_t> large;
  factor_large(n, large);
  std::sort(large.begin(), large.end());
  for (std::uint64_t p : large) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

std::string format_factorization(std::span<const PrimePower> factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::vector<std::uint64_t> poset_predecessors(std::uint64_t p) {
  require_prime(p, "poset_predecessors");
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(p - 1)) out.push_back(pp.prime);
  return out;
}

bool is_poset_related(std::uint64_t q, std::uint64_t p) {
  require_prime(q, "is_poset_related");
  require_prime(p, "is_poset_related");
  return (p - 1) % q == 0;
}

PrattTree pratt_tree(std::uint64_t p) {
  require_prime(p, "pratt_tree");
  return build_pratt(p);
}

std::uint64_t pratt_edge_product(const PrattTree& tree) {
  std::uint64_t product = 1;
  for (const auto& edge : tree.edges) {
    for (unsigned i = 0; i < edge.exponent; ++i) {
      if (__builtin_mul_overflow(product, edge.child.prime, &product)) {
        throw RangeError("Pratt edge product overflows 64 bits");
      }
    }
  }
  return product;
}

EuclidCandidate euclid_generate(std::span<const std::uint64_t> factors) {
  if (factors.empty()) throw DomainError("euclid_generate: at least one factor is required");
  EuclidCandidate result;
  result.factors.assign(factors.begin(), factors.end());
  std::sort(result.factors.begin(), result.factors.end());
  if (std::adjacent_find(result.factors.begin(), result.factors.end()) != result.factors.end()) {
    throw DomainError("euclid_generate: factors must be distinct");
  }
  std::uint64_t product = 2;
  for (std::uint64_t q : result.factors) {
    if (q == 2 || !is_prime(q)) {
      throw DomainError("euclid_generate: " + std::to_string(q) + " is not an odd prime");
    }
    if (__builtin_mul_overflow(product, q, &product)) {
      throw RangeError("euclid_generate: candidate overflows 64 bits");
    }
  }
  if (product == std::numeric_limits<std::uint64_t>::max()) {
    throw RangeError("euclid_generate: candidate overflows 64 bits");
  }
  result.candidate = product + 1;
  result.is_prime = is_prime(result.candidate);
  return result;
}

}  // namespace rspec
