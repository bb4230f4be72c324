#include "addtrans/arith_fn.hpp"

namespace addtrans {

namespace {

Integer int_pow(const Integer& p, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// sigma_k(p^a) = 1 + p^k + p^2k + ... + p^ak
Value sigma_prime_power(const Integer& p, int alpha, unsigned long k) {
  Integer acc = 0;
  const Integer pk = int_pow(p, k);
  Integer term = 1;
  for (int j = 0; j <= alpha; ++j) {
    acc += term;
    term *= pk;
  }
  return Value(acc);
}

std::vector<ArithFn> build_catalog() {
  std::vector<ArithFn> fns;

  fns.push_back(ArithFn::completely_multiplicative(
      "eps", [](const Integer&) { return Value(0); }));
  fns.push_back(ArithFn::completely_multiplicative(
      "one", [](const Integer&) { return Value(1); }));
  fns.push_back(ArithFn::completely_multiplicative(
      "id", [](const Integer& p) { return Value(p); }));
  fns.push_back(ArithFn::completely_multiplicative(
      "id_2", [](const Integer& p) { return Value(p * p); }));
  fns.push_back(ArithFn::completely_multiplicative(
      "id_3", [](const Integer& p) { return Value(p * p * p); }));

  fns.push_back(ArithFn::multiplicative(
      "mu", [](const Integer&, int alpha) {
        return alpha == 1 ? Value(-1) : Value(0);
      }));
  fns.push_back(ArithFn::multiplicative(
      "phi", [](const Integer& p, int alpha) {
        return Value(int_pow(p, static_cast<unsigned long>(alpha)) -
                     int_pow(p, static_cast<unsigned long>(alpha - 1)));
      }));

  fns.push_back(ArithFn::additive(
      "omega", [](const Integer&, int) { return Value(1); }));
  fns.push_back(ArithFn::completely_additive(
      "big_omega", [](const Integer&) { return Value(1); }));

  fns.push_back(ArithFn::completely_multiplicative(
      "liouville", [](const Integer&) { return Value(-1); }));

  fns.push_back(ArithFn::multiplicative(
      "sigma_0", [](const Integer& p, int alpha) {
        return sigma_prime_power(p, alpha, 0);
      }));
  fns.push_back(ArithFn::multiplicative(
      "sigma_1", [](const Integer& p, int alpha) {
        return sigma_prime_power(p, alpha, 1);
      }));
  fns.push_back(ArithFn::multiplicative(
      "sigma_2", [](const Integer& p, int alpha) {
        return sigma_prime_power(p, alpha, 2);
      }));

  return fns;
}

}  // namespace

const std::vector<ArithFn>& catalog() {
  static const std::vector<ArithFn> fns = build_catalog();
  return fns;
}

const ArithFn* find_in_catalog(std::string_view name) {
  for (const auto& f : catalog()) {
    if (f.name() == name) return &f;
  }
  return nullptr;
}

}  // namespace addtrans
