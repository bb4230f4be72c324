#include "addtrans/dirichlet.hpp"

#include <new>

#include "addtrans/errors.hpp"

namespace addtrans {

Value convolve_at(const ArithFn& f, const ArithFn& g, const Factorization& n) {
  Value acc(0);
  for_each_divisor_pair(n, [&](const Factorization& d, const Factorization& co) {
    acc += f(d) * g(co);
  });
  return acc;
}

Value convolve_prime_power(const ArithFn& f, const ArithFn& g,
                           const Integer& p, int m) {
  if (m < 0) {
    throw DomainError("convolve_prime_power: negative exponent");
  }
  Value acc(0);
  for (int j = 0; j <= m; ++j) {
    acc += f.at_prime_power(p, j) * g.at_prime_power(p, m - j);
  }
  return acc;
}

ConvolvedFn::ConvolvedFn(ArithFn left, ArithFn right)
    : left_(std::move(left)), right_(std::move(right)) {}

Value ConvolvedFn::operator()(const Factorization& n) const {
  return convolve_at(left_, right_, n);
}

ArithFn ConvolvedFn::as_arith_fn() const {
  const ArithFn l = left_;
  const ArithFn r = right_;
  return ArithFn::general(
      "(" + l.name() + "*" + r.name() + ")", l.at_one() * r.at_one(),
      [l, r](const Factorization& n) -> std::optional<Value> {
        return convolve_at(l, r, n);
      });
}

const Value& ValueTable::at(std::uint64_t n) const {
  if (n < 1 || n > bound) {
    throw RangeError("ValueTable::at: n outside [1, bound]");
  }
  return values[n];
}

namespace {

std::vector<Value> allocate_values(std::uint64_t bound) {
  try {
    return std::vector<Value>(bound + 1, Value(0));
  } catch (const std::bad_alloc&) {
    throw ResourceError("value table allocation failed for bound " +
                        std::to_string(bound));
  }
}

}  // namespace

ValueTable convolve_table(const ArithFn& f, const ArithFn& g,
                          std::uint64_t bound) {
  if (bound < 1) {
    throw DomainError("convolve_table: bound must be >= 1");
  }
  const SpfTable spf(std::max<std::uint64_t>(bound, 2));
  const std::vector<Value> fv = tabulate(f, spf, bound);
  const std::vector<Value> gv = tabulate(g, spf, bound);

  ValueTable t;
  t.bound = bound;
  t.values = allocate_values(bound);
  for (std::uint64_t d = 1; d <= bound; ++d) {
    if (fv[d].is_zero()) continue;
    for (std::uint64_t m = d; m <= bound; m += d) {
      t.values[m] += fv[d] * gv[m / d];
    }
  }
  t.provenance = "(" + f.name() + " * " + g.name() +
                 ") on [1, " + std::to_string(bound) +
                 "] by divisor-pair accumulation";
  return t;
}

ValueTable mobius_invert(const ValueTable& table) {
  const std::uint64_t bound = table.bound;
  if (bound < 1) {
    throw DomainError("mobius_invert: empty table");
  }
  const SpfTable spf(std::max<std::uint64_t>(bound, 2));
  const ArithFn& mu = *find_in_catalog("mu");
  const std::vector<Value> muv = tabulate(mu, spf, bound);

  ValueTable t;
  t.bound = bound;
  t.values = allocate_values(bound);
  for (std::uint64_t d = 1; d <= bound; ++d) {
    if (muv[d].is_zero()) continue;
    for (std::uint64_t m = d; m <= bound; m += d) {
      t.values[m] += muv[d] * table.values[m / d];
    }
  }
  t.provenance = "mu * (" + table.provenance + ")";
  return t;
}

ValueTable value_table(const ArithFn& f, std::uint64_t bound) {
  if (bound < 1) {
    throw DomainError("value_table: bound must be >= 1");
  }
  const SpfTable spf(std::max<std::uint64_t>(bound, 2));
  ValueTable t;
  t.bound = bound;
  t.values = tabulate(f, spf, bound);
  t.provenance = f.name() + " on [1, " + std::to_string(bound) + "]";
  return t;
}

}  // namespace addtrans
