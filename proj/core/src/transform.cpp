#include "addtrans/transform.hpp"

#include "addtrans/errors.hpp"

namespace addtrans {

Value phi_transform(const ArithFn& f, const Factorization& n) {
  Value acc(0);
  for (const auto& pp : n.factors()) {
    Integer cofactor;  // n / p^a, always integral
    mpz_divexact(cofactor.get_mpz_t(), n.n().get_mpz_t(),
                 pp.power().get_mpz_t());
    acc += Value(cofactor) * f.at_prime_power(pp.prime, pp.exponent);
  }
  return acc;
}

Value phi_transform_leibniz(const ArithFn& f, const Factorization& n) {
  if (n.is_one()) return Value(0);
  const auto& fs = n.factors();
  if (fs.size() == 1) {
    return f.at_prime_power(fs[0].prime, fs[0].exponent);
  }
  // n = head * rest with gcd(head, rest) = 1, head = p_1^a_1.
  const Integer head = fs[0].power();
  auto rest = Factorization::from_sorted_factors(
      std::vector<PrimePower>(fs.begin() + 1, fs.end()));
  return Value(head) * phi_transform_leibniz(f, rest) +
         Value(rest.n()) * f.at_prime_power(fs[0].prime, fs[0].exponent);
}

Value partial_derivative(const ArithFn& f, const Integer& p,
                         const Factorization& n) {
  const int alpha = n.exponent_of(p);
  if (alpha == 0) {
    throw DomainError("partial_derivative: p = " + p.get_str() +
                      " does not divide n = " + n.n().get_str());
  }
  Integer palpha;
  mpz_pow_ui(palpha.get_mpz_t(), p.get_mpz_t(),
             static_cast<unsigned long>(alpha));
  return Value(n.n(), palpha) * f.at_prime_power(p, alpha);
}

Value transform_as_derivative_sum(const ArithFn& f, const Factorization& n) {
  Value acc(0);
  for (const auto& pp : n.factors()) {
    acc += partial_derivative(f, pp.prime, n);
  }
  return acc;
}

ArithFn complete_extension(const ArithFn& f) {
  // Psi(n) = sum over p^a || n of (n / p^a) * a p^(a-1) f(p)
  //        = sum over p^a || n of a (n/p) f(p).
  return ArithFn::general(
      "complete:" + f.name(), Value(0),
      [f](const Factorization& n) -> std::optional<Value> {
        Value acc(0);
        for (const auto& pp : n.factors()) {
          Integer n_over_p;
          mpz_divexact(n_over_p.get_mpz_t(), n.n().get_mpz_t(),
                       pp.prime.get_mpz_t());
          acc += Value(static_cast<long>(pp.exponent)) * Value(n_over_p) *
                 f.at_prime_power(pp.prime, 1);
        }
        return acc;
      });
}

TransformedFn::TransformedFn(ArithFn base, Mode mode)
    : base_(std::move(base)), mode_(mode) {}

Value TransformedFn::operator()(const Factorization& n) const {
  return mode_ == Mode::ClosedForm ? phi_transform(base_, n)
                                   : phi_transform_leibniz(base_, n);
}

ArithFn TransformedFn::as_arith_fn() const {
  const ArithFn base = base_;
  const Mode mode = mode_;
  return ArithFn::general(
      "phi_of:" + base.name(), Value(0),
      [base, mode](const Factorization& n) -> std::optional<Value> {
        return mode == Mode::ClosedForm ? phi_transform(base, n)
                                        : phi_transform_leibniz(base, n);
      });
}

}  // namespace addtrans
