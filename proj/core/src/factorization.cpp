#include "addtrans/factorization.hpp"

#include <algorithm>
#include <new>
#include <numeric>

#include "addtrans/errors.hpp"

namespace addtrans {

namespace {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle-finding rho. Deterministic: the increment walks 1, 2, 3, ...
// so repeated runs on the same n split identically.
u64 pollard_rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 saved = 0;
    u64 power = 1, lam = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = f(y);
      ++lam;
      saved = x > y ? x - y : y - x;
      if (saved == 0) break;
      d = std::gcd(saved, n);
    }
    if (d != 0 && d != n && d > 1) return d;
  }
}

void factor_u64_into(u64 n, std::vector<std::pair<u64, int>>* out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out->emplace_back(n, 1);
    return;
  }
  u64 d = pollard_rho_u64(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

void merge_sorted(std::vector<std::pair<u64, int>>* factors) {
  std::sort(factors->begin(), factors->end());
  std::size_t w = 0;
  for (std::size_t i = 0; i < factors->size(); ++i) {
    if (w > 0 && (*factors)[w - 1].first == (*factors)[i].first) {
      (*factors)[w - 1].second += (*factors)[i].second;
    } else {
      (*factors)[w++] = (*factors)[i];
    }
  }
  factors->resize(w);
}

// Rho on mpz for inputs past 64 bits. Best effort: identity suites never
// need it, but eval --n accepts arbitrary integers.
Integer pollard_rho_mpz(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Integer diff = x > y ? x - y : y - x;
      if (sgn(diff) == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n && d > 1) return d;
  }
}

void factor_mpz_into(const Integer& n, std::vector<Factorization>* partials);

}  // namespace

Integer PrimePower::power() const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), prime.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return r;
}

Factorization Factorization::from_sorted_factors(
    std::vector<PrimePower> factors) {
  Factorization f;
  Integer n = 1;
  const Integer* prev = nullptr;
  for (const auto& pp : factors) {
    if (pp.exponent < 1 || pp.prime < 2 || (prev && !(*prev < pp.prime))) {
      throw DomainError("Factorization: factors must be sorted prime powers");
    }
    n *= pp.power();
    prev = &pp.prime;
  }
  f.n_ = std::move(n);
  f.factors_ = std::move(factors);
  return f;
}

Factorization Factorization::prime_power(const Integer& p, int alpha) {
  if (alpha == 0) return one();
  return from_sorted_factors({PrimePower{p, alpha}});
}

int Factorization::exponent_of(const Integer& p) const {
  for (const auto& pp : factors_) {
    if (pp.prime == p) return pp.exponent;
    if (pp.prime > p) break;
  }
  return 0;
}

namespace {

// Trial division entirely in machine words, stripping every prime factor
// up to kTrialDivisionBound. Returns the unfactored remainder: 1 when n is
// done, a prime when the remainder is below the bound squared, and
// otherwise a rho-sized leftover with no small factors.
u64 factor_u64_trial(u64 n, std::vector<PrimePower>* out) {
  auto strip = [&](u64 p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      out->push_back(PrimePower{Integer(static_cast<unsigned long>(p)), e});
    }
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= kTrialDivisionBound && p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  return n;
}

}  // namespace

Factorization factorize(const Integer& n) {
  if (n < 1) {
    throw DomainError("factorize: n must be a positive integer");
  }
  if (n == 1) return Factorization::one();

  if (n.fits_ulong_p()) {
    std::vector<PrimePower> small;
    const u64 rest = factor_u64_trial(n.get_ui(), &small);
    if (rest > 1) {
      if (rest <= kTrialDivisionBound * kTrialDivisionBound) {
        // No factor up to min(bound, sqrt): the remainder is prime.
        small.push_back(PrimePower{Integer(static_cast<unsigned long>(rest)), 1});
      } else {
        std::vector<std::pair<u64, int>> parts;
        factor_u64_into(rest, &parts);
        merge_sorted(&parts);
        for (const auto& [p, e] : parts) {
          small.push_back(PrimePower{Integer(static_cast<unsigned long>(p)), e});
        }
      }
    }
    return Factorization::from_sorted_factors(std::move(small));
  }

  std::vector<PrimePower> out;
  Integer rest = n;

  // Trial division by 2, then odd candidates, up to the fixed bound.
  auto strip = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) out.push_back(PrimePower{p, e});
  };
  strip(2);
  for (Integer p = 3; p <= kTrialDivisionBound && p * p <= rest; p += 2) {
    strip(p);
  }
  if (rest == 1) {
    return Factorization::from_sorted_factors(std::move(out));
  }
  if (rest <= kTrialDivisionBound * kTrialDivisionBound) {
    // Whatever survived trial division below sqrt is prime.
    out.push_back(PrimePower{rest, 1});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.prime < b.prime;
    });
    return Factorization::from_sorted_factors(std::move(out));
  }

  if (rest.fits_ulong_p()) {
    std::vector<std::pair<u64, int>> small;
    factor_u64_into(rest.get_ui(), &small);
    merge_sorted(&small);
    for (const auto& [p, e] : small) {
      out.push_back(PrimePower{Integer(static_cast<unsigned long>(p)), e});
    }
  } else {
    std::vector<Factorization> partials;
    factor_mpz_into(rest, &partials);
    std::vector<PrimePower> big;
    for (const auto& part : partials) {
      for (const auto& pp : part.factors()) big.push_back(pp);
    }
    std::sort(big.begin(), big.end(), [](const auto& a, const auto& b) {
      return a.prime < b.prime;
    });
    // Merge equal primes from independent splits.
    std::vector<PrimePower> merged;
    for (auto& pp : big) {
      if (!merged.empty() && merged.back().prime == pp.prime) {
        merged.back().exponent += pp.exponent;
      } else {
        merged.push_back(pp);
      }
    }
    for (auto& pp : merged) out.push_back(std::move(pp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.prime < b.prime; });
  return Factorization::from_sorted_factors(std::move(out));
}

namespace {

void factor_mpz_into(const Integer& n, std::vector<Factorization>* partials) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    partials->push_back(Factorization::prime_power(n, 1));
    return;
  }
  Integer d = pollard_rho_mpz(n);
  // Pull the full power of each prime of d out of n via recursion on the
  // two halves.
  factor_mpz_into(d, partials);
  factor_mpz_into(n / d, partials);
}

}  // namespace

SpfTable::SpfTable(std::uint64_t bound) : bound_(bound) {
  if (bound < 2) {
    throw DomainError("SpfTable: bound must be >= 2");
  }
  if (bound > std::uint64_t(1) << 32) {
    throw ResourceError("SpfTable: bound exceeds the 32-bit sieve limit");
  }
  try {
    spf_.assign(bound + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("SpfTable: allocation failed for bound " +
                        std::to_string(bound));
  }
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= bound; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

std::uint32_t SpfTable::spf(std::uint64_t k) const {
  if (k < 2 || k > bound_) {
    throw RangeError("SpfTable::spf: k outside [2, bound]");
  }
  return spf_[k];
}

Factorization SpfTable::factorize(std::uint64_t n) const {
  if (n < 1 || n > bound_) {
    throw RangeError("SpfTable::factorize: n outside [1, bound]");
  }
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back(PrimePower{Integer(static_cast<unsigned long>(p)), e});
  }
  return Factorization::from_sorted_factors(std::move(out));
}

std::vector<std::uint64_t> SpfTable::primes() const {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t k = 2; k <= bound_; ++k) {
    if (spf_[k] == k) ps.push_back(k);
  }
  return ps;
}

SpfTable build_spf(std::uint64_t bound) { return SpfTable(bound); }

std::vector<Integer> divisors(const Factorization& n) {
  const auto& fs = n.factors();
  std::vector<Integer> out;
  std::vector<int> exps(fs.size(), 0);
  Integer d = 1;
  while (true) {
    out.push_back(d);
    std::size_t i = 0;
    for (; i < fs.size(); ++i) {
      if (exps[i] < fs[i].exponent) {
        ++exps[i];
        d *= fs[i].prime;
        break;
      }
      // Roll this digit back to zero and carry into the next one.
      for (int k = 0; k < exps[i]; ++k) {
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), fs[i].prime.get_mpz_t());
      }
      exps[i] = 0;
    }
    if (i == fs.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_divisor_pair(
    const Factorization& n,
    const std::function<void(const Factorization&, const Factorization&)>&
        fn) {
  const auto& fs = n.factors();
  std::vector<int> exps(fs.size(), 0);
  while (true) {
    std::vector<PrimePower> d_side;
    std::vector<PrimePower> co_side;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (exps[i] > 0) d_side.push_back(PrimePower{fs[i].prime, exps[i]});
      if (exps[i] < fs[i].exponent) {
        co_side.push_back(PrimePower{fs[i].prime, fs[i].exponent - exps[i]});
      }
    }
    fn(Factorization::from_sorted_factors(std::move(d_side)),
       Factorization::from_sorted_factors(std::move(co_side)));
    std::size_t i = 0;
    for (; i < fs.size(); ++i) {
      if (exps[i] < fs[i].exponent) {
        ++exps[i];
        break;
      }
      exps[i] = 0;
    }
    if (i == fs.size()) break;
  }
}

}  // namespace addtrans
