#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addtrans/arith_fn.hpp"
#include "addtrans/factorization.hpp"
#include "addtrans/value.hpp"

namespace addtrans {

/// (f*g)(n) = sum over all divisor pairs a b = n of f(a) g(b).
///
/// This is the structure-blind oracle every identity is adjudicated
/// against: it never exploits multiplicativity or any other class tag,
/// only the literal divisor sum.
Value convolve_at(const ArithFn& f, const ArithFn& g, const Factorization& n);

/// (f*g)(p^m) = sum_{j=0}^{m} f(p^j) g(p^(m-j)), m >= 0.
Value convolve_prime_power(const ArithFn& f, const ArithFn& g,
                           const Integer& p, int m);

/// A Dirichlet convolution f*g packaged as an evaluable pair. Evaluation
/// goes through convolve_at, so (f*g)(1) = f(1) g(1) and the order of the
/// operands never matters. TransformedFn operands enter via as_arith_fn().
class ConvolvedFn {
 public:
  ConvolvedFn(ArithFn left, ArithFn right);

  const ArithFn& left() const { return left_; }
  const ArithFn& right() const { return right_; }

  Value operator()(const Factorization& n) const;

  /// General-class view named "(left*right)", usable as an operand of
  /// further convolutions.
  ArithFn as_arith_fn() const;

 private:
  ArithFn left_;
  ArithFn right_;
};

/// Values of one function on 1..bound, exact, with a provenance note
/// describing how they were computed. Immutable once built.
struct ValueTable {
  std::uint64_t bound = 0;
  std::vector<Value> values;  // index 0 unused; 1..bound
  std::string provenance;

  const Value& at(std::uint64_t n) const;
};

/// (f*g)(n) for every n in 1..bound by the divisor-pair double loop
/// (d, then multiples of d) over memoized per-index values of f and g.
/// O(N log N) value operations. Throws ResourceError when the table
/// cannot be allocated.
ValueTable convolve_table(const ArithFn& f, const ArithFn& g,
                          std::uint64_t bound);

/// G = mu * F over 1..bound, so that 1 * G = F (Moebius inversion
/// round-trip).
ValueTable mobius_invert(const ValueTable& table);

/// Pointwise table of f itself on 1..bound (the eps * f special case made
/// explicit).
ValueTable value_table(const ArithFn& f, std::uint64_t bound);

}  // namespace addtrans
