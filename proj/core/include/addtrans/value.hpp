#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace addtrans {

/// Arbitrary-precision integer used at every API boundary that carries an n.
using Integer = mpz_class;

/// Exact rational number. Always held in canonical form: denominator >= 1
/// and gcd(|numerator|, denominator) = 1. Equality is exact; there is no
/// tolerance anywhere in this library.
class Value {
 public:
  Value() : q_(0) {}
  Value(int n) : q_(n) {}
  Value(long n) : q_(n) {}
  explicit Value(unsigned long n) : q_(mpz_class(n)) {}
  explicit Value(const Integer& n) : q_(n) {}

  /// num/den, reduced. Throws DomainError if den == 0.
  Value(const Integer& num, const Integer& den);

  /// Accepts "a" or "a/b" with an optional leading '-' on a, digits only,
  /// b > 0 not required (sign is normalized). Returns nullopt on anything
  /// else, including whitespace.
  static std::optional<Value> parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  /// Integer part; only valid when is_integer().
  Integer to_integer() const;

  Value& operator+=(const Value& o) { q_ += o.q_; return *this; }
  Value& operator-=(const Value& o) { q_ -= o.q_; return *this; }
  Value& operator*=(const Value& o) { q_ *= o.q_; return *this; }
  Value& operator/=(const Value& o);

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  friend Value operator*(Value a, const Value& b) { return a *= b; }
  friend Value operator/(Value a, const Value& b) { return a /= b; }
  Value operator-() const;

  /// this^e for e >= 0 (0^0 = 1).
  Value pow(unsigned long e) const;

  friend bool operator==(const Value& a, const Value& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c <=> 0;
  }

  /// "a" when the denominator is 1, else "a/b"; sign on the numerator.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Value& v) {
    return os << v.str();
  }

 private:
  mpq_class q_;
};

}  // namespace addtrans
