#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rspec {

/// All primes <= n in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Deterministic over the whole 64-bit range (Miller-Rabin with the first
/// twelve prime bases, which has no strong pseudoprimes below 3.3e24).
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n >= 1, ascending by prime (empty for n = 1).
/// Trial division over a sieve of primes below 10^6, then Pollard rho.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Renders a factorization as "2^2*79"; "1" for the empty product.
std::string format_factorization(std::span<const PrimePower> factors);

// ---------------------------------------------------------------------------
// POSet of primes: q << p  iff  q | p - 1.
// Only the covering relation is exposed; chains are followed on demand.

/// Distinct prime divisors of p - 1, ascending. Throws DomainError unless p
/// is prime.
std::vector<std::uint64_t> poset_predecessors(std::uint64_t p);

/// True iff q | p - 1. Throws DomainError unless both are prime.
bool is_poset_related(std::uint64_t q, std::uint64_t p);

struct PrattEdge;

/// Recursive certificate tree: children are the distinct prime factors of
/// prime - 1, each with its multiplicity.
struct PrattTree {
  std::uint64_t prime = 0;
  std::vector<PrattEdge> edges;
};

struct PrattEdge {
  PrattTree child;
  unsigned exponent = 0;
};

/// Throws DomainError unless p is prime.
PrattTree pratt_tree(std::uint64_t p);

/// Product over the root's edges of child^exponent (with overflow checks).
std::uint64_t pratt_edge_product(const PrattTree& tree);

/// Candidate 2*q1*...*qr + 1 built from distinct odd primes.
struct EuclidCandidate {
  std::vector<std::uint64_t> factors;  // ascending
  std::uint64_t candidate = 0;
  bool is_prime = false;
};

/// Throws DomainError for repeated, even, or composite factors and
/// RangeError when the candidate does not fit in 64 bits.
EuclidCandidate euclid_generate(std::span<const std::uint64_t> factors);

}  // namespace rspec
