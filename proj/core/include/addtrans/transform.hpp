#pragma once

#include "addtrans/arith_fn.hpp"
#include "addtrans/factorization.hpp"
#include "addtrans/value.hpp"

namespace addtrans {

/// The additive transform Phi_f: the unique function with
/// Phi_f(p^a) = f(p^a) that obeys the Leibniz rule
/// Phi_f(nm) = n Phi_f(m) + m Phi_f(n) on coprime n, m. Closed form:
///
///   Phi_f(n) = sum over p^a || n of (n / p^a) * f(p^a),
///
/// an empty sum (0) at n = 1. Evaluated by the closed form here.
Value phi_transform(const ArithFn& f, const Factorization& n);

/// Phi_f(n) by the defining recursion instead of the closed form: peel the
/// first prime power off n and apply the Leibniz rule to the coprime
/// split. Independent of phi_transform; the two always agree.
Value phi_transform_leibniz(const ArithFn& f, const Factorization& n);

/// Arithmetic partial derivative df/dp (n) = (f(p^a) / p^a) * n with
/// a = v_p(n). Requires p | n (DomainError otherwise).
Value partial_derivative(const ArithFn& f, const Integer& p,
                         const Factorization& n);

/// Phi_f(n) as the sum of df/dp (n) over the primes p dividing n.
Value transform_as_derivative_sum(const ArithFn& f, const Factorization& n);

/// The completely additive transform seeded by f's prime values: the
/// unique Psi with Psi(p) = f(p) whose Leibniz rule holds for ALL pairs,
/// which forces Psi(p^a) = a p^(a-1) f(p). Psi is L-additive with
/// companion h = Id.
ArithFn complete_extension(const ArithFn& f);

/// Phi_f packaged as an evaluable object, with a selectable evaluation
/// route; both routes produce identical values on every n.
class TransformedFn {
 public:
  enum class Mode { ClosedForm, LeibnizRecursion };

  explicit TransformedFn(ArithFn base, Mode mode = Mode::ClosedForm);

  const ArithFn& base() const { return base_; }
  Mode mode() const { return mode_; }

  Value operator()(const Factorization& n) const;

  /// General-class view named "phi_of:<base>", usable anywhere an ArithFn
  /// is (convolutions, witnesses, the CLI).
  ArithFn as_arith_fn() const;

 private:
  ArithFn base_;
  Mode mode_;
};

}  // namespace addtrans
