#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "addtrans/value.hpp"

namespace addtrans {

/// One p^alpha component of a canonical factorization. p is prime,
/// alpha >= 1.
struct PrimePower {
  Integer prime;
  int exponent = 1;

  Integer power() const;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition of a positive integer:
/// n = p_1^a_1 ... p_s^a_s with p_1 < p_2 < ... < p_s. n = 1 holds the
/// empty product.
class Factorization {
 public:
  Factorization() : n_(1) {}

  /// Assembles n from already-verified factors (sorted, distinct, prime).
  /// Only sortedness/exponent positivity is re-checked; primality is the
  /// caller's contract.
  static Factorization from_sorted_factors(std::vector<PrimePower> factors);

  /// The factorization of p^alpha, alpha >= 1 (alpha = 0 gives 1).
  static Factorization prime_power(const Integer& p, int alpha);

  static Factorization one() { return Factorization(); }

  const Integer& n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_prime_power() const { return factors_.size() == 1; }
  std::size_t distinct_primes() const { return factors_.size(); }

  /// v_p(n): exponent of p in n, 0 when p does not divide n.
  int exponent_of(const Integer& p) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Integer n_;
  std::vector<PrimePower> factors_;
};

/// Canonical factorization of n >= 1. Trial division handles every prime
/// factor up to 10^6; beyond that a probabilistic rho split takes over
/// (best effort, deterministic parameters). Throws DomainError for n < 1.
Factorization factorize(const Integer& n);

/// Smallest-prime-factor sieve over [2, bound]. Immutable once built and
/// safe to share across threads.
class SpfTable {
 public:
  /// Throws DomainError for bound < 2 and ResourceError when the table
  /// cannot be allocated.
  explicit SpfTable(std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }

  /// Smallest prime factor of k, 2 <= k <= bound.
  std::uint32_t spf(std::uint64_t k) const;

  /// Same output as addtrans::factorize(n); requires 1 <= n <= bound
  /// (RangeError otherwise).
  Factorization factorize(std::uint64_t n) const;

  bool is_prime(std::uint64_t k) const { return k >= 2 && spf(k) == k; }

  /// Primes in [2, bound] in increasing order.
  std::vector<std::uint64_t> primes() const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint32_t> spf_;
};

/// Free-function spelling of SpfTable(bound).
SpfTable build_spf(std::uint64_t bound);

/// All divisors of n, ascending, each exactly once. The enumeration walks
/// exponent vectors odometer-style, so the divisor count is always
/// prod(alpha_i + 1) with no recursion.
std::vector<Integer> divisors(const Factorization& n);

/// Calls fn(d, n/d) for every divisor d of n, both sides handed over as
/// factorizations built from the exponent split (no refactorization).
/// Enumeration order is deterministic but not sorted.
void for_each_divisor_pair(
    const Factorization& n,
    const std::function<void(const Factorization&, const Factorization&)>& fn);

}  // namespace addtrans
