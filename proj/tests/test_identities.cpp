#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "addtrans/dirichlet.hpp"
#include "addtrans/errors.hpp"
#include "addtrans/identities.hpp"
#include "addtrans/report_io.hpp"
#include "addtrans/transform.hpp"

using namespace addtrans;

namespace {

const ArithFn& fn(const char* name) {
  const ArithFn* f = find_in_catalog(name);
  REQUIRE(f != nullptr);
  return *f;
}

}  // namespace

TEST_CASE("closed form vs Leibniz recursion") {
  CHECK(check_closed_form(fn("big_omega"), 10'000).status ==
        CheckStatus::Pass);
  CHECK(check_closed_form(fn("mu"), 10'000).status == CheckStatus::Pass);
  const auto trivial = check_closed_form(fn("sigma_1"), 1);
  CHECK(trivial.status == CheckStatus::Pass);
  CHECK(trivial.checked == 1);
}

TEST_CASE("derivative sum identity") {
  CHECK(check_derivative_sum(fn("big_omega"), 10'000).status ==
        CheckStatus::Pass);
  CHECK(check_derivative_sum(fn("phi"), 5000).status == CheckStatus::Pass);
}

TEST_CASE("AM-GM lower bound") {
  // Spot check at n = 12, f = sigma_1: Phi = 37, omega = 2, and the
  // squared comparison reads 37^2 * 3 >= 24^2 * 7 (4107 >= 4032).
  const Value lhs = phi_transform(fn("sigma_1"), factorize(12)).pow(2);
  const Value rhs = Value(24).pow(2) * Value(Integer(28), Integer(12));
  CHECK(lhs == Value(1369));
  CHECK(rhs == Value(1344));
  CHECK(lhs > rhs);
  CHECK(Value(1369) * Value(3) == Value(4107));
  CHECK(Value(1344) * Value(3) == Value(4032));

  CHECK(check_amgm_bound(fn("sigma_1"), 1000).status == CheckStatus::Pass);

  // Id is the equality case of AM-GM: every term f(p^a)/p^a is 1.
  const auto id_report = check_amgm_bound(fn("id"), 500);
  CHECK(id_report.status == CheckStatus::Pass);
  for (std::uint64_t n : {12ULL, 36ULL, 210ULL}) {
    const auto fact = factorize(Integer(static_cast<unsigned long>(n)));
    const auto w = static_cast<unsigned long>(fact.distinct_primes());
    const Value l = phi_transform(fn("id"), fact).pow(w);
    const Value r = Value(fact.n() * Integer(w)).pow(w) *
                    fn("id")(fact) / Value(fact.n());
    CHECK(l == r);
  }

  // mu is multiplicative but never positive on primes: every n >= 2 is
  // skipped by the positivity filter.
  const auto mu_report = check_amgm_bound(fn("mu"), 200);
  CHECK(mu_report.status == CheckStatus::Pass);
  CHECK(mu_report.checked == 0);
  CHECK(mu_report.skipped == 199);

  // Additive f is inapplicable.
  CHECK(check_amgm_bound(fn("omega"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("additive upper bound") {
  // Phi_omega(12) = 7 <= 12 * 2 / 2 = 12.
  CHECK(phi_transform(fn("omega"), factorize(12)) == Value(7));
  // Equality at a single prime power: Phi_Omega(2) = 1 = 2 * 1 / 2.
  CHECK(phi_transform(fn("big_omega"), factorize(2)) == Value(1));

  CHECK(check_upper_bound(fn("omega"), 10'000).status == CheckStatus::Pass);
  CHECK(check_upper_bound(fn("big_omega"), 10'000).status ==
        CheckStatus::Pass);
  CHECK(check_upper_bound(fn("sigma_1"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("companion equivalence") {
  CHECK(check_companion_equivalence(fn("sigma_1"), 10'000).status ==
        CheckStatus::Pass);
  CHECK(check_companion_equivalence(fn("mu"), 10'000).status ==
        CheckStatus::Pass);
}

TEST_CASE("injectivity biconditional") {
  CHECK(check_injectivity(fn("phi"), fn("phi"), 1000).status ==
        CheckStatus::Pass);
  CHECK(check_injectivity(fn("sigma_1"), fn("sigma_1"), 1000).status ==
        CheckStatus::Pass);

  // A variant of phi that differs at p = 2: both sides of the
  // biconditional are false, so it still holds.
  const ArithFn variant = ArithFn::multiplicative(
      "phi_variant", [](const Integer& p, int alpha) {
        const Value v = fn("phi").at_prime_power(p, alpha);
        if (p == 2 && alpha == 1) return v + Value(1);
        return v;
      });
  CHECK(phi_transform(fn("phi"), factorize(2)) !=
        phi_transform(variant, factorize(2)));
  const auto r = check_injectivity(fn("phi"), variant, 1000);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.note.find("both sides false") != std::string::npos);

  CHECK(check_injectivity(fn("omega"), fn("phi"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("convolution Leibniz rule (pair identity)") {
  // Spot values at (m, n) = (4, 3), f = 1, g = Omega:
  // (1*Phi_Omega)(12) = 19 and sigma(4) * 1 + sigma(3) * 3 = 19.
  const ArithFn phi_omega = TransformedFn(fn("big_omega")).as_arith_fn();
  CHECK(convolve_at(fn("one"), phi_omega, factorize(12)) == Value(19));
  CHECK(convolve_at(fn("one"), phi_omega, factorize(3)) == Value(1));
  CHECK(convolve_at(fn("one"), phi_omega, factorize(4)) == Value(3));
  CHECK(convolve_at(fn("id"), fn("one"), factorize(4)) == Value(7));
  CHECK(convolve_at(fn("id"), fn("one"), factorize(3)) == Value(4));
  CHECK(Value(7) * Value(1) + Value(4) * Value(3) == Value(19));

  CHECK(check_convolution_leibniz(fn("mu"), fn("big_omega"), 1000).status ==
        CheckStatus::Pass);
  CHECK(check_convolution_leibniz(fn("one"), fn("phi"), 500).status ==
        CheckStatus::Pass);
  CHECK(check_convolution_leibniz(fn("omega"), fn("phi"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("convolution decomposition over prime powers") {
  // n = 12, f = 1, g = Omega: 19 = sigma(12) (3/7 + 1/4) = 28 * 19/28.
  const Value sum = Value(Integer(3), Integer(7)) +
                    Value(Integer(1), Integer(4));
  CHECK(Value(28) * sum == Value(19));

  CHECK(check_convolution_decomposition(fn("one"), fn("big_omega"), 1000)
            .status == CheckStatus::Pass);
  CHECK(check_convolution_decomposition(fn("mu"), fn("phi"), 1000).status ==
        CheckStatus::Pass);
  CHECK(
      check_convolution_decomposition(fn("big_omega"), fn("phi"), 100).status ==
      CheckStatus::Inapplicable);
}

TEST_CASE("mu * Phi_f at prime powers (piecewise rule)") {
  const ArithFn phi_omega = TransformedFn(fn("big_omega")).as_arith_fn();
  // Omega(8) - Omega(4) = 1, matching the divisor sum computed directly.
  CHECK(convolve_at(fn("mu"), phi_omega, factorize(8)) == Value(1));
  // alpha = 1: two-term convolution, mu(p) Phi_f(1) drops out.
  CHECK(convolve_at(fn("mu"), phi_omega, factorize(7)) == Value(1));

  CHECK(check_mobius_prime_power(fn("big_omega"), 100, 8).status ==
        CheckStatus::Pass);
  CHECK(check_mobius_prime_power(fn("sigma_1"), 50, 6).status ==
        CheckStatus::Pass);
  CHECK(check_mobius_prime_power(fn("mu"), 50, 6).status ==
        CheckStatus::Pass);
}

TEST_CASE("mu * Phi_f unified formula") {
  // f = Omega, n = 12: phi(12) [(2-1)/(4-2) + (1-0)/(3-1)] = 4 * 1 = 4.
  const ArithFn phi_omega = TransformedFn(fn("big_omega")).as_arith_fn();
  CHECK(convolve_at(fn("mu"), phi_omega, factorize(12)) == Value(4));

  CHECK(check_mobius_transform(fn("big_omega"), 5000).status ==
        CheckStatus::Pass);
  CHECK(check_mobius_transform(fn("omega"), 10'000).status ==
        CheckStatus::Pass);
  CHECK(check_mobius_transform(fn("sigma_1"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("completely additive remark: printed vs phi-scaled") {
  const auto cmp = check_remark_completely_additive(fn("big_omega"), 1000);

  // The phi-scaled reading is an identity; the printed one is not.
  CHECK(cmp.phi_scaled.status == CheckStatus::Pass);
  CHECK(cmp.phi_scaled.asserted);
  CHECK(cmp.printed.status == CheckStatus::Counterexample);
  CHECK_FALSE(cmp.printed.asserted);
  CHECK(cmp.printed.note.find("phi-scaled form: pass") != std::string::npos);

  // Smallest failing n: the printed form already breaks at n = 3, where
  // the oracle gives f(3) = 1 but the sum reads 1/2. n = 2 passes since
  // p - 1 = 1 there.
  REQUIRE(cmp.printed.counterexample);
  CHECK(cmp.printed.counterexample->n == 3);
  CHECK(cmp.printed.counterexample->lhs == Value(1));
  CHECK(cmp.printed.counterexample->rhs == Value(Integer(1), Integer(2)));

  // The n = 12 spot: oracle 4, printed form 1/2 + 1/2 = 1.
  const ArithFn phi_omega = TransformedFn(fn("big_omega")).as_arith_fn();
  CHECK(convolve_at(fn("mu"), phi_omega, factorize(12)) == Value(4));
  const Value printed_at_12 =
      Value(Integer(1), Integer(2)) + Value(Integer(1), Integer(2));
  CHECK(printed_at_12 == Value(1));

  // Determinism: the counterexample re-verifies on a second run.
  const auto again = check_remark_completely_additive(fn("big_omega"), 1000);
  REQUIRE(again.printed.counterexample);
  CHECK(again.printed.counterexample->n == cmp.printed.counterexample->n);
  CHECK(again.printed.counterexample->lhs == cmp.printed.counterexample->lhs);
  CHECK(again.printed.counterexample->rhs == cmp.printed.counterexample->rhs);

  CHECK(check_remark_completely_additive(fn("omega"), 100).printed.status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("transform of the Id pointwise product") {
  const ArithFn id_omega = pointwise_product(fn("id"), fn("big_omega"));
  CHECK(phi_transform(id_omega, factorize(12)) == Value(36));
  CHECK(phi_transform(id_omega, Factorization::one()) == Value(0));

  CHECK(check_id_product_transform(fn("big_omega"), 5000).status ==
        CheckStatus::Pass);
  CHECK(check_id_product_transform(fn("omega"), 10'000).status ==
        CheckStatus::Pass);
  CHECK(check_id_product_transform(fn("phi"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("main theorem") {
  // Both routes at n = 12, f = Omega give 18.
  const ArithFn om_id = pointwise_product(fn("big_omega"), fn("id"));
  CHECK(convolve_at(fn("mu"), om_id, factorize(12)) == Value(18));
  const Value rhs = Value(4) * Value(3) +
                    Value(4) * (Value(1) + Value(Integer(1), Integer(2)));
  CHECK(rhs == Value(18));

  CHECK(check_main_theorem(fn("big_omega"), 5000).status ==
        CheckStatus::Pass);
  CHECK(check_main_theorem(fn("omega"), 10'000).status == CheckStatus::Pass);
  CHECK(check_main_theorem(fn("phi"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("completely additive corollary") {
  CHECK(check_completely_additive_corollary(fn("big_omega"), 10'000).status ==
        CheckStatus::Pass);
  // omega is additive but not completely additive.
  CHECK(check_completely_additive_corollary(fn("omega"), 100).status ==
        CheckStatus::Inapplicable);
}

TEST_CASE("registry exposes every identity id") {
  const char* ids[] = {"closed_form",
                       "derivative_sum",
                       "amgm_lower_bound",
                       "additive_upper_bound",
                       "companion_equivalence",
                       "injectivity",
                       "conv_leibniz",
                       "conv_decomposition",
                       "mobius_prime_power",
                       "mobius_transform",
                       "remark_eq17_printed",
                       "remark_eq17_scaled",
                       "id_product_transform",
                       "main_theorem",
                       "completely_additive_corollary"};
  for (const char* id : ids) CHECK(find_identity(id) != nullptr);
  CHECK(find_identity("nope") == nullptr);
  CHECK(identity_registry().size() == 15);
  CHECK_FALSE(find_identity("remark_eq17_printed")->asserted);
}

TEST_CASE("run_suite over the full registry") {
  std::vector<std::string> ids;
  for (const auto& spec : identity_registry()) ids.push_back(spec.id);
  const std::vector<ArithFn> fns = {fn("big_omega"), fn("omega")};
  const auto reports = run_suite(ids, fns, 1000);
  CHECK(reports.size() == ids.size() * fns.size());

  // Everything the source asserts passes (or is inapplicable); only the
  // printed remark form may carry a counterexample.
  for (const auto& r : reports) {
    if (r.asserted) {
      CHECK(r.status != CheckStatus::Counterexample);
    } else if (r.status == CheckStatus::Counterexample) {
      CHECK(r.id == "remark_eq17_printed");
    }
  }
  CHECK(suite_passed(reports));

  // Determinism: identical serialized output on a second run.
  const auto again = run_suite(ids, fns, 1000);
  CHECK(reports_to_json(reports) == reports_to_json(again));
}

TEST_CASE("run_suite edge cases") {
  CHECK(run_suite({}, {fn("mu")}, 100).empty());
  CHECK(run_suite({"main_theorem"}, {}, 100).empty());

  const auto inapplicable = run_suite({"main_theorem"}, {fn("phi")}, 100);
  REQUIRE(inapplicable.size() == 1);
  CHECK(inapplicable[0].status == CheckStatus::Inapplicable);
  CHECK(suite_passed(inapplicable));

  CHECK_THROWS_AS(run_suite({"nope"}, {fn("mu")}, 100), DomainError);
}

TEST_CASE("report serialization") {
  const auto reports =
      run_suite({"main_theorem", "remark_eq17_printed"}, {fn("big_omega")},
                200);
  const std::string json = reports_to_json(reports);
  CHECK(json.find("\"id\": \"main_theorem\"") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"erratum_candidate\": true") != std::string::npos);
  CHECK(json.find("\"counterexample\"") != std::string::npos);

  const std::string text = reports_to_text(reports);
  CHECK(text.find("main_theorem") != std::string::npos);
  CHECK(text.find("erratum-candidate") != std::string::npos);
  CHECK(text.find("0 asserted failure(s)") != std::string::npos);
}
