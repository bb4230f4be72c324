#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "addtrans/arith_fn.hpp"
#include "addtrans/errors.hpp"
#include "addtrans/factorization.hpp"
#include "addtrans/transform.hpp"

using namespace addtrans;

namespace {

// Structure-blind oracles, each a direct count or divisor walk.

long brute_phi(std::uint64_t n) {
  long count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

long brute_mu(std::uint64_t n) {
  int prime_count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // not squarefree
      ++prime_count;
    }
  }
  if (n > 1) ++prime_count;
  return prime_count % 2 == 0 ? 1 : -1;
}

Integer brute_sigma(std::uint64_t n, int k) {
  Integer acc = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Integer dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), d, static_cast<unsigned long>(k));
      acc += dk;
    }
  }
  return acc;
}

int brute_big_omega(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

const ArithFn& fn(const char* name) {
  const ArithFn* f = find_in_catalog(name);
  REQUIRE(f != nullptr);
  return *f;
}

}  // namespace

TEST_CASE("catalog names and class tags") {
  const char* expected[] = {"eps",       "one",     "id",      "id_2",
                            "id_3",      "mu",      "phi",     "omega",
                            "big_omega", "liouville", "sigma_0", "sigma_1",
                            "sigma_2"};
  for (const char* name : expected) CHECK(find_in_catalog(name) != nullptr);
  CHECK(find_in_catalog("nope") == nullptr);

  CHECK(fn("eps").fn_class() == FnClass::CompletelyMultiplicative);
  CHECK(fn("one").fn_class() == FnClass::CompletelyMultiplicative);
  CHECK(fn("id").fn_class() == FnClass::CompletelyMultiplicative);
  CHECK(fn("liouville").fn_class() == FnClass::CompletelyMultiplicative);
  CHECK(fn("mu").fn_class() == FnClass::Multiplicative);
  CHECK(fn("phi").fn_class() == FnClass::Multiplicative);
  CHECK(fn("sigma_1").fn_class() == FnClass::Multiplicative);
  CHECK(fn("omega").fn_class() == FnClass::Additive);
  CHECK(fn("big_omega").fn_class() == FnClass::CompletelyAdditive);
}

TEST_CASE("value at one follows the class") {
  for (const auto& f : catalog()) {
    if (is_multiplicative(f.fn_class())) {
      CHECK(f.at_one() == Value(1));
    } else if (is_additive(f.fn_class())) {
      CHECK(f.at_one() == Value(0));
    }
    CHECK(f(Factorization::one()) == f.at_one());
  }
}

TEST_CASE("eval spot values against brute-force oracles") {
  const SpfTable spf = build_spf(300);

  CHECK(fn("phi")(factorize(36)) == Value(12));
  CHECK(brute_phi(36) == 12);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CHECK(fn("phi")(spf.factorize(n)) == Value(brute_phi(n)));
    CHECK(fn("mu")(spf.factorize(n)) == Value(brute_mu(n)));
    CHECK(fn("sigma_0")(spf.factorize(n)) == Value(brute_sigma(n, 0)));
    CHECK(fn("sigma_1")(spf.factorize(n)) == Value(brute_sigma(n, 1)));
    CHECK(fn("sigma_2")(spf.factorize(n)) == Value(brute_sigma(n, 2)));
    CHECK(fn("big_omega")(spf.factorize(n)) == Value(brute_big_omega(n)));
    const long lam = brute_big_omega(n) % 2 == 0 ? 1 : -1;
    CHECK(fn("liouville")(spf.factorize(n)) == Value(lam));
  }

  CHECK(fn("mu")(factorize(30)) == Value(-1));
  CHECK(fn("big_omega")(Factorization::one()) == Value(0));
  CHECK(fn("sigma_1")(factorize(12)) == Value(28));
  CHECK(fn("liouville")(factorize(12)) == Value(-1));

  // eps is the convolution identity pointwise: 1 at 1, 0 beyond.
  CHECK(fn("eps")(Factorization::one()) == Value(1));
  for (std::uint64_t n = 2; n <= 50; ++n) {
    CHECK(fn("eps")(spf.factorize(n)) == Value(0));
  }

  CHECK(fn("id_2")(factorize(6)) == Value(36));
  CHECK(fn("id_3")(factorize(2)) == Value(8));
}

TEST_CASE("prime-power rule consistency for complete classes") {
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (const auto& f : catalog()) {
    for (long p : primes) {
      for (int a = 1; a <= 6; ++a) {
        if (f.fn_class() == FnClass::CompletelyMultiplicative) {
          CHECK(f.at_prime_power(p, a) ==
                f.at_prime_power(p, 1).pow(static_cast<unsigned long>(a)));
        }
        if (f.fn_class() == FnClass::CompletelyAdditive) {
          CHECK(f.at_prime_power(p, a) ==
                Value(static_cast<long>(a)) * f.at_prime_power(p, 1));
        }
      }
    }
  }
}

TEST_CASE("recomposition laws over all pairs up to 1000") {
  // Coprime pairs must respect the class law for every catalog entry;
  // complete classes must respect it for every pair.
  const SpfTable spf = build_spf(1'000'000);
  const auto& fns = catalog();
  std::vector<std::vector<Value>> small(fns.size());
  for (std::size_t i = 0; i < fns.size(); ++i) {
    small[i] = tabulate(fns[i], spf, 1000);
  }
  for (std::uint64_t m = 2; m <= 1000; ++m) {
    for (std::uint64_t n = m; n <= 1000; ++n) {
      const bool coprime = std::gcd(m, n) == 1;
      const Factorization prod = spf.factorize(m * n);
      for (std::size_t i = 0; i < fns.size(); ++i) {
        const FnClass c = fns[i].fn_class();
        const bool complete = c == FnClass::CompletelyMultiplicative ||
                              c == FnClass::CompletelyAdditive;
        if (!coprime && !complete) continue;
        if (c == FnClass::General) continue;
        const Value lhs = fns[i](prod);
        const Value rhs = is_multiplicative(c)
                              ? small[i][m] * small[i][n]
                              : small[i][m] + small[i][n];
        if (lhs != rhs) {
          FAIL(fns[i].name() << " breaks its class law at m=" << m
                             << " n=" << n);
        }
      }
    }
  }
}

TEST_CASE("pointwise product") {
  const ArithFn om_id = pointwise_product(fn("big_omega"), fn("id"));
  CHECK(om_id.fn_class() == FnClass::General);
  CHECK(om_id(factorize(12)) == Value(36));
  CHECK(om_id(Factorization::one()) == Value(0));

  const ArithFn id_id = pointwise_product(fn("id"), fn("id"));
  CHECK(id_id.fn_class() == FnClass::CompletelyMultiplicative);
  CHECK(id_id(factorize(5)) == Value(25));
  for (std::uint64_t n = 1; n <= 100; ++n) {
    CHECK(id_id(factorize(Integer(static_cast<unsigned long>(n)))) ==
          fn("id_2")(factorize(Integer(static_cast<unsigned long>(n)))));
  }

  const ArithFn mu_phi = pointwise_product(fn("mu"), fn("phi"));
  CHECK(mu_phi.fn_class() == FnClass::Multiplicative);
  CHECK(mu_phi(factorize(6)) == Value(2));  // mu(6) phi(6) = 1 * 2

  // f.eps vanishes away from 1 and is f(1) at 1.
  const ArithFn s_eps = pointwise_product(fn("sigma_1"), fn("eps"));
  CHECK(s_eps(Factorization::one()) == Value(1));
  for (std::uint64_t n = 2; n <= 50; ++n) {
    CHECK(s_eps(factorize(Integer(static_cast<unsigned long>(n)))) ==
          Value(0));
  }
}

TEST_CASE("additive companion") {
  const ArithFn g_id = additive_companion(fn("id"));
  CHECK(g_id.fn_class() == FnClass::Additive);
  CHECK(g_id(factorize(12)) == Value(7));  // Id(4) + Id(3)
  CHECK(g_id(Factorization::one()) == Value(0));

  const ArithFn g_mu = additive_companion(fn("mu"));
  CHECK(g_mu(factorize(30)) == Value(-3));
  CHECK(g_mu.at_prime_power(7, 1) == Value(-1));
  CHECK(g_mu.at_prime_power(7, 2) == Value(0));

  // Companion agrees with f on every prime power up to 10^4.
  const SpfTable spf = build_spf(10'000);
  for (const char* name : {"sigma_1", "mu", "phi", "big_omega"}) {
    const ArithFn g = additive_companion(fn(name));
    for (std::uint64_t p = 2; p <= 10'000; ++p) {
      if (!spf.is_prime(p)) continue;
      const Integer prime(static_cast<unsigned long>(p));
      Integer pa = prime;
      for (int a = 1; pa <= 10'000; ++a, pa *= prime) {
        CHECK(g.at_prime_power(prime, a) == fn(name).at_prime_power(prime, a));
      }
    }
  }
}

TEST_CASE("L-additivity witness") {
  // Complete additivity is L-additivity with h = 1.
  CHECK(is_L_additive_witness(fn("big_omega"), fn("one"), 300));

  // The completely additive transform is L-additive with h = Id ...
  CHECK(is_L_additive_witness(complete_extension(fn("big_omega")), fn("id"),
                              300));

  // ... but the plain transform Phi_Omega is not: it already fails at
  // m = n = 2 (Phi(4) = 2 vs 2 Phi(2) + 2 Phi(2) = 4).
  CHECK_FALSE(is_L_additive_witness(
      TransformedFn(fn("big_omega")).as_arith_fn(), fn("id"), 300));

  CHECK_FALSE(is_L_additive_witness(fn("mu"), fn("id"), 30));

  // The companion must be completely multiplicative.
  CHECK_THROWS_AS(is_L_additive_witness(fn("big_omega"), fn("mu"), 10),
                  DomainError);
}

TEST_CASE("general functions without a value raise") {
  const ArithFn partial = ArithFn::general(
      "partial", Value(1), [](const Factorization& n) -> std::optional<Value> {
        if (n.n() > 10) return std::nullopt;
        return Value(n.n());
      });
  CHECK(partial(factorize(10)) == Value(10));
  CHECK_THROWS_AS(partial(factorize(11)), UndefinedValueError);
}
