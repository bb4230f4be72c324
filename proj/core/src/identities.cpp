#include "addtrans/identities.hpp"

#include <algorithm>
#include <numeric>

#include "addtrans/dirichlet.hpp"
#include "addtrans/errors.hpp"
#include "addtrans/factorization.hpp"
#include "addtrans/transform.hpp"

namespace addtrans {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Counterexample: return "counterexample";
    case CheckStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

namespace {

std::string range_string(std::uint64_t n_max) {
  return "[1, " + std::to_string(n_max) + "]";
}

IdentityReport base_report(std::string id, std::string description,
                           std::vector<std::string> functions,
                           std::string range) {
  IdentityReport r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.functions = std::move(functions);
  r.range = std::move(range);
  return r;
}

void fail_at(IdentityReport* r, Integer n, Value lhs, Value rhs) {
  r->status = CheckStatus::Counterexample;
  r->counterexample = CheckCounterexample{std::move(n), std::nullopt,
                                          std::move(lhs), std::move(rhs)};
}

void fail_at_pair(IdentityReport* r, Integer m, Integer n, Value lhs,
                  Value rhs) {
  r->status = CheckStatus::Counterexample;
  r->counterexample = CheckCounterexample{std::move(n), std::move(m),
                                          std::move(lhs), std::move(rhs)};
}

IdentityReport inapplicable(IdentityReport r, std::string why) {
  r.status = CheckStatus::Inapplicable;
  r.note = std::move(why);
  return r;
}

const ArithFn& catalog_fn(std::string_view name) {
  const ArithFn* f = find_in_catalog(name);
  if (!f) throw DomainError("catalog function missing: " + std::string(name));
  return *f;
}

// (f*Phi_g)(x) for x in [1, n_max] through the divisor-sum oracle, one
// convolve_at call per index.
std::vector<Value> oracle_convolution_table(const ArithFn& f,
                                            const ArithFn& g_transformed,
                                            const SpfTable& spf,
                                            std::uint64_t n_max) {
  std::vector<Value> out(n_max + 1, Value(0));
  for (std::uint64_t x = 1; x <= n_max; ++x) {
    out[x] = convolve_at(f, g_transformed, spf.factorize(x));
  }
  return out;
}

}  // namespace

IdentityReport check_closed_form(const ArithFn& f, std::uint64_t n_max) {
  auto r = base_report("closed_form",
                       "Phi_f by Leibniz recursion = n * sum f(p^a)/p^a",
                       {f.name()}, range_string(n_max));
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = phi_transform_leibniz(f, fact);
    const Value rhs = phi_transform(f, fact);
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_derivative_sum(const ArithFn& f, std::uint64_t n_max) {
  auto r = base_report("derivative_sum",
                       "Phi_f(n) = sum over p | n of (df/dp)(n)",
                       {f.name()}, range_string(n_max));
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = phi_transform(f, fact);
    const Value rhs = transform_as_derivative_sum(f, fact);
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_amgm_bound(const ArithFn& f, std::uint64_t n_max) {
  auto r = base_report(
      "amgm_lower_bound",
      "Phi_f(n)^w >= (n w)^w f(n)/n, w = omega(n) (w-th powers compared)",
      {f.name()}, "[2, " + std::to_string(n_max) + "]");
  if (!is_multiplicative(f.fn_class())) {
    return inapplicable(std::move(r), "requires multiplicative f");
  }
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    bool positive = true;
    for (const auto& pp : fact.factors()) {
      if (!f.at_prime_power(pp.prime, pp.exponent).is_positive()) {
        positive = false;
        break;
      }
    }
    if (!positive) {
      ++r.skipped;  // AM-GM applies to positive terms only
      continue;
    }
    const auto w = static_cast<unsigned long>(fact.distinct_primes());
    const Value lhs = phi_transform(f, fact).pow(w);
    const Value rhs =
        Value(fact.n() * Integer(static_cast<unsigned long>(w))).pow(w) *
        f(fact) / Value(fact.n());
    ++r.checked;
    if (lhs < rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_upper_bound(const ArithFn& f, std::uint64_t n_max) {
  auto r = base_report("additive_upper_bound", "2 Phi_f(n) <= n f(n)",
                       {f.name()}, range_string(n_max));
  if (!is_additive(f.fn_class())) {
    return inapplicable(std::move(r), "requires additive f");
  }
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    bool nonnegative = true;
    for (const auto& pp : fact.factors()) {
      if (f.at_prime_power(pp.prime, pp.exponent).is_negative()) {
        nonnegative = false;
        break;
      }
    }
    if (!nonnegative) {
      ++r.skipped;
      continue;
    }
    const Value lhs = Value(2) * phi_transform(f, fact);
    const Value rhs = Value(fact.n()) * f(fact);
    ++r.checked;
    if (lhs > rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_companion_equivalence(const ArithFn& f,
                                           std::uint64_t n_max) {
  auto r = base_report("companion_equivalence",
                       "Phi_f = Phi_g for the additive companion g of f",
                       {f.name()}, range_string(n_max));
  const ArithFn g = additive_companion(f);
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = phi_transform(f, fact);
    const Value rhs = phi_transform_leibniz(g, fact);
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_injectivity(const ArithFn& f, const ArithFn& g,
                                 std::uint64_t n_max) {
  auto r = base_report(
      "injectivity",
      "(Phi_f = Phi_g on prime powers <= N) <=> (f = g on [1, N])",
      {f.name(), g.name()}, range_string(n_max));
  if (!is_multiplicative(f.fn_class()) || !is_multiplicative(g.fn_class())) {
    return inapplicable(std::move(r), "requires multiplicative f and g");
  }
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));

  bool transforms_agree = true;
  Factorization first_pp_diff;
  for (std::uint64_t n = 2; n <= n_max && transforms_agree; ++n) {
    if (!spf.is_prime(n)) continue;
    Integer power(static_cast<unsigned long>(n));
    for (int a = 1; power <= n_max; ++a, power *= n) {
      const auto fact =
          Factorization::prime_power(Integer(static_cast<unsigned long>(n)), a);
      ++r.checked;
      if (phi_transform(f, fact) != phi_transform(g, fact)) {
        transforms_agree = false;
        first_pp_diff = fact;
        break;
      }
    }
  }

  bool values_agree = true;
  Factorization first_value_diff;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    ++r.checked;
    if (f(fact) != g(fact)) {
      values_agree = false;
      first_value_diff = fact;
      break;
    }
  }

  if (transforms_agree == values_agree) {
    if (!transforms_agree) {
      r.note = "both sides false: functions differ at n = " +
               first_value_diff.n().get_str();
    }
    return r;
  }
  if (transforms_agree) {
    // Transforms agree on prime powers yet the functions differ: a genuine
    // counterexample to the biconditional.
    fail_at(&r, first_value_diff.n(), f(first_value_diff),
            g(first_value_diff));
  } else {
    fail_at(&r, first_pp_diff.n(), phi_transform(f, first_pp_diff),
            phi_transform(g, first_pp_diff));
    r.note = "transforms differ on a prime power but values agree";
  }
  return r;
}

IdentityReport check_convolution_leibniz(const ArithFn& f, const ArithFn& g,
                                         std::uint64_t n_max) {
  auto r = base_report(
      "conv_leibniz",
      "(f*Phi_g)(nm) = (Id*f)(n)(f*Phi_g)(m) + (Id*f)(m)(f*Phi_g)(n), "
      "gcd(m, n) = 1",
      {f.name(), g.name()}, "coprime pairs, m*n <= " + std::to_string(n_max));
  if (!is_multiplicative(f.fn_class())) {
    return inapplicable(std::move(r), "requires multiplicative f");
  }
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  const ArithFn phi_g = TransformedFn(g).as_arith_fn();
  const std::vector<Value> conv =
      oracle_convolution_table(f, phi_g, spf, n_max);
  const std::vector<Value> idf =
      oracle_convolution_table(catalog_fn("id"), f, spf, n_max);

  for (std::uint64_t m = 1; m <= n_max; ++m) {
    for (std::uint64_t n = 1; m * n <= n_max; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const Value lhs = conv[m * n];
      const Value rhs = idf[n] * conv[m] + idf[m] * conv[n];
      ++r.checked;
      if (lhs != rhs) {
        fail_at_pair(&r, Integer(static_cast<unsigned long>(m)),
                     Integer(static_cast<unsigned long>(n)), lhs, rhs);
        return r;
      }
    }
  }
  return r;
}

IdentityReport check_convolution_decomposition(const ArithFn& f,
                                               const ArithFn& g,
                                               std::uint64_t n_max) {
  auto r = base_report(
      "conv_decomposition",
      "(f*Phi_g)(n) = (Id*f)(n) * sum (f*Phi_g)(p^a)/(Id*f)(p^a)",
      {f.name(), g.name()}, range_string(n_max));
  if (!is_multiplicative(f.fn_class())) {
    return inapplicable(std::move(r), "requires multiplicative f");
  }
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  const ArithFn phi_g = TransformedFn(g).as_arith_fn();
  const std::vector<Value> conv =
      oracle_convolution_table(f, phi_g, spf, n_max);
  const std::vector<Value> idf =
      oracle_convolution_table(catalog_fn("id"), f, spf, n_max);

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    Value sum(0);
    bool defined = true;
    for (const auto& pp : fact.factors()) {
      const std::uint64_t pa = pp.power().get_ui();  // p^a <= n <= n_max
      if (idf[pa].is_zero()) {
        defined = false;
        break;
      }
      sum += conv[pa] / idf[pa];
    }
    if (!defined) {
      ++r.skipped;
      continue;
    }
    const Value lhs = conv[n];
    const Value rhs = idf[n] * sum;
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_mobius_prime_power(const ArithFn& f, std::uint64_t p_max,
                                        int a_max) {
  auto r = base_report(
      "mobius_prime_power",
      "(mu*Phi_f)(p^a) = f(p^a) - f(p^(a-1)) for a > 1, f(p) for a = 1",
      {f.name()},
      "p <= " + std::to_string(p_max) + ", 1 <= a <= " +
          std::to_string(a_max));
  const ArithFn& mu = catalog_fn("mu");
  const ArithFn phi_f = TransformedFn(f).as_arith_fn();
  const SpfTable spf(std::max<std::uint64_t>(p_max, 2));
  for (std::uint64_t p : spf.primes()) {
    const Integer prime(static_cast<unsigned long>(p));
    for (int a = 1; a <= a_max; ++a) {
      const auto fact = Factorization::prime_power(prime, a);
      const Value lhs = convolve_at(mu, phi_f, fact);
      const Value rhs = a == 1 ? f.at_prime_power(prime, 1)
                               : f.at_prime_power(prime, a) -
                                     f.at_prime_power(prime, a - 1);
      ++r.checked;
      if (lhs != rhs) {
        fail_at(&r, fact.n(), lhs, rhs);
        return r;
      }
    }
  }
  return r;
}

namespace {

// phi(n) * sum over p^a || n of (f(p^a) - f(p^(a-1))) / (p^a - p^(a-1)).
// The alpha = 1 term uses f(p^0) = f(1).
Value mobius_transform_rhs(const ArithFn& f, const ArithFn& phi,
                           const Factorization& fact) {
  Value sum(0);
  for (const auto& pp : fact.factors()) {
    const Value diff = f.at_prime_power(pp.prime, pp.exponent) -
                       f.at_prime_power(pp.prime, pp.exponent - 1);
    sum += diff / phi.at_prime_power(pp.prime, pp.exponent);
  }
  return phi(fact) * sum;
}

}  // namespace

IdentityReport check_mobius_transform(const ArithFn& f, std::uint64_t n_max) {
  auto r = base_report(
      "mobius_transform",
      "(mu*Phi_f)(n) = phi(n) * sum (f(p^a) - f(p^(a-1)))/(p^a - p^(a-1))",
      {f.name()}, range_string(n_max));
  if (!is_additive(f.fn_class())) {
    return inapplicable(std::move(r), "requires additive f");
  }
  const ArithFn& mu = catalog_fn("mu");
  const ArithFn& phi = catalog_fn("phi");
  const ArithFn phi_f = TransformedFn(f).as_arith_fn();
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = convolve_at(mu, phi_f, fact);
    const Value rhs = mobius_transform_rhs(f, phi, fact);
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

namespace {

IdentityReport check_remark_form(const ArithFn& f, std::uint64_t n_max,
                                 bool phi_scaled) {
  auto r = base_report(
      phi_scaled ? "remark_eq17_scaled" : "remark_eq17_printed",
      phi_scaled
          ? "(mu*Phi_f)(n) = phi(n) * sum f(p)/(p^a - p^(a-1)), f "
            "completely additive"
          : "(mu*Phi_f)(n) = sum f(p)/(p^a - p^(a-1)), f completely "
            "additive (as printed; erratum candidate)",
      {f.name()}, range_string(n_max));
  r.asserted = phi_scaled;
  if (f.fn_class() != FnClass::CompletelyAdditive) {
    return inapplicable(std::move(r), "requires completely additive f");
  }
  const ArithFn& mu = catalog_fn("mu");
  const ArithFn& phi = catalog_fn("phi");
  const ArithFn phi_f = TransformedFn(f).as_arith_fn();
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = convolve_at(mu, phi_f, fact);
    Value sum(0);
    for (const auto& pp : fact.factors()) {
      sum += f.at_prime_power(pp.prime, 1) /
             phi.at_prime_power(pp.prime, pp.exponent);
    }
    const Value rhs = phi_scaled ? phi(fact) * sum : sum;
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      if (!phi_scaled) {
        r.note = "erratum-candidate: printed form lacks the phi(n) factor";
      }
      break;
    }
  }
  return r;
}

}  // namespace

RemarkComparison check_remark_completely_additive(const ArithFn& f,
                                                  std::uint64_t n_max) {
  RemarkComparison cmp{check_remark_form(f, n_max, false),
                       check_remark_form(f, n_max, true)};
  const auto outcome = [](const IdentityReport& r) {
    return std::string(to_string(r.status));
  };
  cmp.printed.note += (cmp.printed.note.empty() ? "" : "; ");
  cmp.printed.note += "phi-scaled form: " + outcome(cmp.phi_scaled);
  return cmp;
}

IdentityReport check_id_product_transform(const ArithFn& f,
                                          std::uint64_t n_max) {
  auto r = base_report("id_product_transform", "Phi_{Id.f}(n) = n f(n)",
                       {f.name()}, range_string(n_max));
  if (!is_additive(f.fn_class())) {
    return inapplicable(std::move(r), "requires additive f");
  }
  const ArithFn id_f = pointwise_product(catalog_fn("id"), f);
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = phi_transform(id_f, fact);
    const Value rhs = Value(fact.n()) * f(fact);
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_main_theorem(const ArithFn& f, std::uint64_t n_max) {
  auto r = base_report(
      "main_theorem",
      "(mu*(f.Id))(n) = phi(n) f(n) + phi(n) * sum (f(p^a) - "
      "f(p^(a-1)))/(p - 1)",
      {f.name()}, range_string(n_max));
  if (!is_additive(f.fn_class())) {
    return inapplicable(std::move(r), "requires additive f");
  }
  const ArithFn& mu = catalog_fn("mu");
  const ArithFn& phi = catalog_fn("phi");
  const ArithFn f_id = pointwise_product(f, catalog_fn("id"));
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = convolve_at(mu, f_id, fact);
    Value sum(0);
    for (const auto& pp : fact.factors()) {
      const Value diff = f.at_prime_power(pp.prime, pp.exponent) -
                         f.at_prime_power(pp.prime, pp.exponent - 1);
      sum += diff / Value(pp.prime - 1);
    }
    const Value phi_n = phi(fact);
    const Value rhs = phi_n * f(fact) + phi_n * sum;
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

IdentityReport check_completely_additive_corollary(const ArithFn& f,
                                                   std::uint64_t n_max) {
  auto r = base_report(
      "completely_additive_corollary",
      "(mu*(Id.f))(n) = phi(n) f(n) + phi(n) * sum f(p)/(p - 1)",
      {f.name()}, range_string(n_max));
  if (f.fn_class() != FnClass::CompletelyAdditive) {
    return inapplicable(std::move(r), "requires completely additive f");
  }
  const ArithFn& mu = catalog_fn("mu");
  const ArithFn& phi = catalog_fn("phi");
  const ArithFn id_f = pointwise_product(catalog_fn("id"), f);
  const SpfTable spf(std::max<std::uint64_t>(n_max, 2));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Factorization fact = spf.factorize(n);
    const Value lhs = convolve_at(mu, id_f, fact);
    Value sum(0);
    for (const auto& pp : fact.factors()) {
      sum += f.at_prime_power(pp.prime, 1) / Value(pp.prime - 1);
    }
    const Value phi_n = phi(fact);
    const Value rhs = phi_n * f(fact) + phi_n * sum;
    ++r.checked;
    if (lhs != rhs) {
      fail_at(&r, fact.n(), lhs, rhs);
      break;
    }
  }
  return r;
}

}  // namespace addtrans
