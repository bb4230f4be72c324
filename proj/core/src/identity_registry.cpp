#include <algorithm>

#include "addtrans/errors.hpp"
#include "addtrans/identities.hpp"

namespace addtrans {

namespace {

// Fixed ranges for the prime-power lemma when driven by a suite; the
// direct check keeps its own (p_max, a_max) parameters.
constexpr std::uint64_t kSuitePrimeMax = 100;
constexpr int kSuiteExponentMax = 8;

// The multiplicative partners the suite pairs with the selected function
// for the convolution identities (the selected function fills the g slot).
const std::vector<std::string>& conv_partners() {
  static const std::vector<std::string> partners = {"one", "mu", "id"};
  return partners;
}

using PartnerCheck = IdentityReport (*)(const ArithFn&, const ArithFn&,
                                        std::uint64_t);

IdentityReport run_with_partners(PartnerCheck check, const ArithFn& g,
                                 std::uint64_t n_max) {
  IdentityReport merged;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  bool have_base = false;
  for (const auto& partner_name : conv_partners()) {
    IdentityReport r = check(*find_in_catalog(partner_name), g, n_max);
    checked += r.checked;
    skipped += r.skipped;
    if (!have_base) {
      merged = r;  // id, description, range of the merged report
      merged.status = CheckStatus::Pass;
      merged.counterexample.reset();
      merged.note.clear();
      have_base = true;
    }
    if (r.status == CheckStatus::Counterexample &&
        merged.status != CheckStatus::Counterexample) {
      merged.status = r.status;
      merged.counterexample = std::move(r.counterexample);
      merged.note = "partner f = " + partner_name;
    }
  }
  merged.checked = checked;
  merged.skipped = skipped;
  merged.functions = conv_partners();
  merged.functions.push_back(g.name());
  return merged;
}

bool any_fn(const ArithFn&) { return true; }
bool multiplicative_fn(const ArithFn& f) {
  return is_multiplicative(f.fn_class());
}
bool additive_fn(const ArithFn& f) { return is_additive(f.fn_class()); }
bool completely_additive_fn(const ArithFn& f) {
  return f.fn_class() == FnClass::CompletelyAdditive;
}

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> specs;

  specs.push_back({"closed_form",
                   "Phi_f by Leibniz recursion equals the closed form",
                   "any f", true, any_fn, check_closed_form});
  specs.push_back({"derivative_sum",
                   "Phi_f(n) equals the sum of partial derivatives",
                   "any f", true, any_fn, check_derivative_sum});
  specs.push_back({"amgm_lower_bound",
                   "Phi_f(n)^w >= (n w)^w f(n)/n with w = omega(n)",
                   "multiplicative f, positive on prime powers", true,
                   multiplicative_fn, check_amgm_bound});
  specs.push_back({"additive_upper_bound", "2 Phi_f(n) <= n f(n)",
                   "additive f, nonnegative on prime powers", true,
                   additive_fn, check_upper_bound});
  specs.push_back({"companion_equivalence",
                   "Phi_f equals Phi of the additive companion of f",
                   "any f", true, any_fn, check_companion_equivalence});
  specs.push_back(
      {"injectivity",
       "(Phi_f = Phi_g on prime powers) <=> (f = g pointwise)",
       "multiplicative f (suite pairs f with itself)", true,
       multiplicative_fn,
       [](const ArithFn& f, std::uint64_t n_max) {
         return check_injectivity(f, f, n_max);
       }});
  specs.push_back(
      {"conv_leibniz",
       "(f*Phi_g)(nm) = (Id*f)(n)(f*Phi_g)(m) + (Id*f)(m)(f*Phi_g)(n)",
       "any g; multiplicative partners one, mu, id", true, any_fn,
       [](const ArithFn& g, std::uint64_t n_max) {
         return run_with_partners(check_convolution_leibniz, g, n_max);
       }});
  specs.push_back(
      {"conv_decomposition",
       "(f*Phi_g)(n) = (Id*f)(n) * sum (f*Phi_g)(p^a)/(Id*f)(p^a)",
       "any g; multiplicative partners one, mu, id", true, any_fn,
       [](const ArithFn& g, std::uint64_t n_max) {
         return run_with_partners(check_convolution_decomposition, g, n_max);
       }});
  specs.push_back(
      {"mobius_prime_power",
       "(mu*Phi_f)(p^a) = f(p^a) - f(p^(a-1)) for a > 1, f(p) for a = 1",
       "any f (suite runs p <= 100, a <= 8)", true, any_fn,
       [](const ArithFn& f, std::uint64_t) {
         return check_mobius_prime_power(f, kSuitePrimeMax,
                                         kSuiteExponentMax);
       }});
  specs.push_back({"mobius_transform",
                   "(mu*Phi_f)(n) = phi(n) * sum (f(p^a) - "
                   "f(p^(a-1)))/(p^a - p^(a-1))",
                   "additive f", true, additive_fn, check_mobius_transform});
  specs.push_back(
      {"remark_eq17_printed",
       "(mu*Phi_f)(n) = sum f(p)/(p^a - p^(a-1)) (erratum candidate)",
       "completely additive f", false,
       completely_additive_fn,
       [](const ArithFn& f, std::uint64_t n_max) {
         return check_remark_completely_additive(f, n_max).printed;
       }});
  specs.push_back(
      {"remark_eq17_scaled",
       "(mu*Phi_f)(n) = phi(n) * sum f(p)/(p^a - p^(a-1))",
       "completely additive f", true, completely_additive_fn,
       [](const ArithFn& f, std::uint64_t n_max) {
         return check_remark_completely_additive(f, n_max).phi_scaled;
       }});
  specs.push_back({"id_product_transform", "Phi_{Id.f}(n) = n f(n)",
                   "additive f", true, additive_fn,
                   check_id_product_transform});
  specs.push_back({"main_theorem",
                   "(mu*(f.Id))(n) = phi(n) f(n) + phi(n) * sum (f(p^a) - "
                   "f(p^(a-1)))/(p - 1)",
                   "additive f", true, additive_fn, check_main_theorem});
  specs.push_back({"completely_additive_corollary",
                   "(mu*(Id.f))(n) = phi(n) f(n) + phi(n) * sum f(p)/(p - 1)",
                   "completely additive f", true, completely_additive_fn,
                   check_completely_additive_corollary});
  return specs;
}

}  // namespace

const std::vector<IdentitySpec>& identity_registry() {
  static const std::vector<IdentitySpec> specs = build_registry();
  return specs;
}

const IdentitySpec* find_identity(std::string_view id) {
  for (const auto& s : identity_registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<IdentityReport> run_suite(const std::vector<std::string>& ids,
                                      const std::vector<ArithFn>& fns,
                                      std::uint64_t n_max) {
  std::vector<const IdentitySpec*> selection;
  selection.reserve(ids.size());
  for (const auto& id : ids) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) throw DomainError("unknown identity id: " + id);
    selection.push_back(spec);
  }
  std::vector<IdentityReport> reports;
  for (const IdentitySpec* spec : selection) {
    for (const ArithFn& f : fns) {
      if (!spec->applicable(f)) {
        IdentityReport r;
        r.id = spec->id;
        r.description = spec->description;
        r.functions = {f.name()};
        r.range = "n <= " + std::to_string(n_max);
        r.status = CheckStatus::Inapplicable;
        r.asserted = spec->asserted;
        r.note = "requires " + spec->applicability;
        reports.push_back(std::move(r));
        continue;
      }
      reports.push_back(spec->run(f, n_max));
    }
  }
  return reports;
}

bool suite_passed(const std::vector<IdentityReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const IdentityReport& r) {
                        return r.asserted &&
                               r.status == CheckStatus::Counterexample;
                      });
}

}  // namespace addtrans
