#include "addtrans/value.hpp"

#include <cctype>

#include "addtrans/errors.hpp"

namespace addtrans {

Value::Value(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw DomainError("Value: zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Value& Value::operator/=(const Value& o) {
  if (o.is_zero()) {
    throw DomainError("Value: division by zero");
  }
  q_ /= o.q_;
  return *this;
}

Value Value::operator-() const {
  Value r;
  r.q_ = -q_;
  return r;
}

Value Value::pow(unsigned long e) const {
  Value r;
  mpz_pow_ui(mpq_numref(r.q_.get_mpq_t()), mpq_numref(q_.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.q_.get_mpq_t()), mpq_denref(q_.get_mpq_t()), e);
  return r;  // powers of a canonical fraction stay canonical
}

Integer Value::to_integer() const {
  if (!is_integer()) {
    throw DomainError("Value: " + str() + " is not an integer");
  }
  return q_.get_num();
}

std::string Value::str() const { return q_.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<Integer> parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

std::optional<Value> Value::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(text);
    if (!n) return std::nullopt;
    return Value(*n);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || sgn(*den) == 0) return std::nullopt;
  return Value(*num, *den);
}

}  // namespace addtrans
