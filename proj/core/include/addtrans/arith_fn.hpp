#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addtrans/factorization.hpp"
#include "addtrans/value.hpp"

namespace addtrans {

/// Structural class of an arithmetic function. The tag always records the
/// strongest property that is declared true: CompletelyMultiplicative
/// implies Multiplicative, CompletelyAdditive implies Additive.
enum class FnClass {
  Multiplicative,
  CompletelyMultiplicative,
  Additive,
  CompletelyAdditive,
  General,
};

bool is_multiplicative(FnClass c);
bool is_additive(FnClass c);
std::string_view to_string(FnClass c);

/// An arithmetic function as an evaluable object. Multiplicative and
/// additive classes are fully determined by a prime-power rule plus the
/// recomposition law
///
///   f(n) = f(p_1^a_1) * ... * f(p_s^a_s)   (multiplicative)
///   f(n) = f(p_1^a_1) + ... + f(p_s^a_s)   (additive)
///
/// General functions evaluate through an explicit rule on factorizations.
/// Instances are immutable and cheap to copy.
class ArithFn {
 public:
  /// (p, alpha) -> f(p^alpha), alpha >= 1.
  using PrimePowerRule = std::function<Value(const Integer&, int)>;
  /// p -> f(p); completely multiplicative/additive classes extend it to
  /// all prime powers.
  using PrimeRule = std::function<Value(const Integer&)>;
  /// n -> f(n); nullopt means the rule does not define a value there.
  using GeneralRule = std::function<std::optional<Value>(const Factorization&)>;

  static ArithFn multiplicative(std::string name, PrimePowerRule rule);
  static ArithFn completely_multiplicative(std::string name, PrimeRule rule);
  static ArithFn additive(std::string name, PrimePowerRule rule);
  static ArithFn completely_additive(std::string name, PrimeRule rule);
  static ArithFn general(std::string name, Value value_at_one,
                         GeneralRule rule);

  const std::string& name() const;
  FnClass fn_class() const;

  /// f(1): 1 for multiplicative classes, 0 for additive ones, declared for
  /// General.
  const Value& at_one() const;

  /// f(p^alpha) for alpha >= 0; alpha = 0 yields at_one() (the f(p^0)
  /// convention the prime-power formulas rely on at alpha = 1).
  Value at_prime_power(const Integer& p, int alpha) const;

  /// Evaluates f(n). Throws UndefinedValueError when a General rule has no
  /// value at n.
  Value operator()(const Factorization& n) const;

  /// Same function under a different display name.
  ArithFn with_name(std::string name) const;

 private:
  struct Impl;
  explicit ArithFn(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Free-function spelling of ArithFn::operator().
Value eval(const ArithFn& f, const Factorization& n);

/// f(k) for k in [0, n_max]; index 0 is unused (kept zero). Chunks the
/// range across workers; the result does not depend on the worker count.
std::vector<Value> tabulate(const ArithFn& f, const SpfTable& spf,
                            std::uint64_t n_max);

/// The classical functions used throughout: eps, one, id, id_2, id_3, mu,
/// phi, omega, big_omega, liouville, sigma_0, sigma_1, sigma_2.
const std::vector<ArithFn>& catalog();

/// Catalog lookup by stable name; nullptr when absent.
const ArithFn* find_in_catalog(std::string_view name);

/// (f.g)(n) = f(n) g(n). Completely multiplicative when both operands are;
/// multiplicative when both are multiplicative; General otherwise.
ArithFn pointwise_product(const ArithFn& f, const ArithFn& g);

/// The additive function that agrees with f on every prime power:
/// g(n) = sum of f(p^alpha) over p^alpha || n, g(1) = 0.
ArithFn additive_companion(const ArithFn& f);

/// Exhaustively checks f(mn) = f(m) h(n) + f(n) h(m) over every pair
/// m, n >= 1 with m*n <= bound. h must be tagged CompletelyMultiplicative
/// (DomainError otherwise).
bool is_L_additive_witness(const ArithFn& f, const ArithFn& h,
                           std::uint64_t bound);

}  // namespace addtrans
