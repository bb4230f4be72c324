#include "addtrans/arith_fn.hpp"

#include <numeric>
#include <utility>

#include "addtrans/errors.hpp"
#include "addtrans/parallel.hpp"

namespace addtrans {

bool is_multiplicative(FnClass c) {
  return c == FnClass::Multiplicative ||
         c == FnClass::CompletelyMultiplicative;
}

bool is_additive(FnClass c) {
  return c == FnClass::Additive || c == FnClass::CompletelyAdditive;
}

std::string_view to_string(FnClass c) {
  switch (c) {
    case FnClass::Multiplicative: return "multiplicative";
    case FnClass::CompletelyMultiplicative:
      return "completely multiplicative";
    case FnClass::Additive: return "additive";
    case FnClass::CompletelyAdditive: return "completely additive";
    case FnClass::General: return "general";
  }
  return "?";
}

struct ArithFn::Impl {
  std::string name;
  FnClass cls = FnClass::General;
  Value at_one;
  PrimePowerRule prime_power_rule;  // set for all non-General classes
  GeneralRule general_rule;         // set for General
};

ArithFn::ArithFn(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ArithFn ArithFn::multiplicative(std::string name, PrimePowerRule rule) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->cls = FnClass::Multiplicative;
  impl->at_one = Value(1);
  impl->prime_power_rule = std::move(rule);
  return ArithFn(std::move(impl));
}

ArithFn ArithFn::completely_multiplicative(std::string name, PrimeRule rule) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->cls = FnClass::CompletelyMultiplicative;
  impl->at_one = Value(1);
  // f(p^a) = f(p)^a
  impl->prime_power_rule = [rule = std::move(rule)](const Integer& p,
                                                    int alpha) {
    return rule(p).pow(static_cast<unsigned long>(alpha));
  };
  return ArithFn(std::move(impl));
}

ArithFn ArithFn::additive(std::string name, PrimePowerRule rule) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->cls = FnClass::Additive;
  impl->at_one = Value(0);
  impl->prime_power_rule = std::move(rule);
  return ArithFn(std::move(impl));
}

ArithFn ArithFn::completely_additive(std::string name, PrimeRule rule) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->cls = FnClass::CompletelyAdditive;
  impl->at_one = Value(0);
  // f(p^a) = a f(p)
  impl->prime_power_rule = [rule = std::move(rule)](const Integer& p,
                                                    int alpha) {
    return Value(static_cast<long>(alpha)) * rule(p);
  };
  return ArithFn(std::move(impl));
}

ArithFn ArithFn::general(std::string name, Value value_at_one,
                         GeneralRule rule) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->cls = FnClass::General;
  impl->at_one = std::move(value_at_one);
  impl->general_rule = std::move(rule);
  return ArithFn(std::move(impl));
}

const std::string& ArithFn::name() const { return impl_->name; }
FnClass ArithFn::fn_class() const { return impl_->cls; }
const Value& ArithFn::at_one() const { return impl_->at_one; }

Value ArithFn::at_prime_power(const Integer& p, int alpha) const {
  if (alpha < 0) {
    throw DomainError("at_prime_power: negative exponent");
  }
  if (alpha == 0) return impl_->at_one;
  if (impl_->cls == FnClass::General) {
    return (*this)(Factorization::prime_power(p, alpha));
  }
  return impl_->prime_power_rule(p, alpha);
}

Value ArithFn::operator()(const Factorization& n) const {
  if (n.is_one()) return impl_->at_one;
  switch (impl_->cls) {
    case FnClass::Multiplicative:
    case FnClass::CompletelyMultiplicative: {
      Value acc(1);
      for (const auto& pp : n.factors()) {
        acc *= impl_->prime_power_rule(pp.prime, pp.exponent);
      }
      return acc;
    }
    case FnClass::Additive:
    case FnClass::CompletelyAdditive: {
      Value acc(0);
      for (const auto& pp : n.factors()) {
        acc += impl_->prime_power_rule(pp.prime, pp.exponent);
      }
      return acc;
    }
    case FnClass::General: {
      auto v = impl_->general_rule(n);
      if (!v) {
        throw UndefinedValueError("ArithFn '" + impl_->name +
                                  "': no value at n = " + n.n().get_str());
      }
      return *v;
    }
  }
  throw DomainError("ArithFn: unknown class");
}

ArithFn ArithFn::with_name(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return ArithFn(std::move(impl));
}

Value eval(const ArithFn& f, const Factorization& n) { return f(n); }

std::vector<Value> tabulate(const ArithFn& f, const SpfTable& spf,
                            std::uint64_t n_max) {
  if (n_max > spf.bound()) {
    throw RangeError("tabulate: n_max exceeds the sieve bound");
  }
  std::vector<Value> out(n_max + 1, Value(0));
  if (n_max >= 1) out[1] = f.at_one();
  parallel_chunks(2, n_max + 1, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      out[k] = f(spf.factorize(k));
    }
  });
  return out;
}

ArithFn pointwise_product(const ArithFn& f, const ArithFn& g) {
  const std::string name = f.name() + "." + g.name();
  if (f.fn_class() == FnClass::CompletelyMultiplicative &&
      g.fn_class() == FnClass::CompletelyMultiplicative) {
    return ArithFn::completely_multiplicative(
        name, [f, g](const Integer& p) {
          return f.at_prime_power(p, 1) * g.at_prime_power(p, 1);
        });
  }
  if (is_multiplicative(f.fn_class()) && is_multiplicative(g.fn_class())) {
    return ArithFn::multiplicative(name, [f, g](const Integer& p, int alpha) {
      return f.at_prime_power(p, alpha) * g.at_prime_power(p, alpha);
    });
  }
  return ArithFn::general(
      name, f.at_one() * g.at_one(),
      [f, g](const Factorization& n) -> std::optional<Value> {
        return f(n) * g(n);
      });
}

ArithFn additive_companion(const ArithFn& f) {
  return ArithFn::additive("companion:" + f.name(),
                           [f](const Integer& p, int alpha) {
                             return f.at_prime_power(p, alpha);
                           });
}

bool is_L_additive_witness(const ArithFn& f, const ArithFn& h,
                           std::uint64_t bound) {
  if (h.fn_class() != FnClass::CompletelyMultiplicative) {
    throw DomainError(
        "is_L_additive_witness: companion must be completely multiplicative");
  }
  if (bound < 1) return true;
  const SpfTable spf(std::max<std::uint64_t>(bound, 2));
  std::vector<Value> fv = tabulate(f, spf, bound);
  std::vector<Value> hv = tabulate(h, spf, bound);
  for (std::uint64_t m = 1; m <= bound; ++m) {
    for (std::uint64_t n = m; m * n <= bound; ++n) {
      if (fv[m * n] != fv[m] * hv[n] + fv[n] * hv[m]) return false;
    }
  }
  return true;
}

}  // namespace addtrans
