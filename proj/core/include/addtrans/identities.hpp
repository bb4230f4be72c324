#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addtrans/arith_fn.hpp"
#include "addtrans/value.hpp"

namespace addtrans {

enum class CheckStatus { Pass, Counterexample, Inapplicable };
std::string_view to_string(CheckStatus s);

/// First failing point of a check: a single n, or an (m, n) pair when the
/// identity quantifies over pairs. Values re-verify on re-evaluation.
struct CheckCounterexample {
  Integer n;
  std::optional<Integer> m;  // set for pair identities; (m, n) lex-smallest
  Value lhs;
  Value rhs;
};

/// Outcome of checking one named identity over a range.
///
/// `asserted` is true for statements the source text asserts as identities;
/// a counterexample on an asserted check fails a suite. Non-asserted checks
/// (erratum candidates) report counterexamples without failing anything.
struct IdentityReport {
  std::string id;
  std::string description;
  std::vector<std::string> functions;
  std::string range;
  CheckStatus status = CheckStatus::Pass;
  std::optional<CheckCounterexample> counterexample;
  std::uint64_t checked = 0;  // points compared
  std::uint64_t skipped = 0;  // points skipped by per-n applicability
  bool asserted = true;
  std::string note;
};

// ---------------------------------------------------------------------------
// Individual checks. Each one evaluates its two sides through independent
// code paths: a structure-blind divisor-sum (or recursion) route against a
// factorization formula. Scans run in ascending order, so a reported
// counterexample is the smallest failing point.
// ---------------------------------------------------------------------------

/// Phi_f by the Leibniz recursion vs the closed form, n in [1, N].
IdentityReport check_closed_form(const ArithFn& f, std::uint64_t n_max);

/// Phi_f vs the sum of partial derivatives over p | n, n in [1, N].
IdentityReport check_derivative_sum(const ArithFn& f, std::uint64_t n_max);

/// Phi_f(n)^w >= (n w)^w f(n)/n with w = omega(n), n in [2, N]; requires f
/// multiplicative; n with some f(p^a) <= 0 are skipped (AM-GM needs
/// positive terms).
IdentityReport check_amgm_bound(const ArithFn& f, std::uint64_t n_max);

/// 2 Phi_f(n) <= n f(n), n in [1, N]; requires f additive; n with some
/// f(p^a) < 0 are skipped.
IdentityReport check_upper_bound(const ArithFn& f, std::uint64_t n_max);

/// Phi_f = Phi_g for the additive companion g of f, n in [1, N].
IdentityReport check_companion_equivalence(const ArithFn& f,
                                           std::uint64_t n_max);

/// Function-level biconditional for multiplicative f, g:
/// (Phi_f = Phi_g on every prime power <= N) <=> (f = g on [1, N]).
IdentityReport check_injectivity(const ArithFn& f, const ArithFn& g,
                                 std::uint64_t n_max);

/// (f*Phi_g)(nm) = (Id*f)(n)(f*Phi_g)(m) + (Id*f)(m)(f*Phi_g)(n) over all
/// coprime pairs with m n <= N; requires f multiplicative. Both sides via
/// the convolution oracle.
IdentityReport check_convolution_leibniz(const ArithFn& f, const ArithFn& g,
                                         std::uint64_t n_max);

/// (f*Phi_g)(n) = (Id*f)(n) * sum over p^a || n of
/// (f*Phi_g)(p^a) / (Id*f)(p^a), n in [1, N]; requires f multiplicative;
/// n with a vanishing (Id*f)(p^a) denominator are skipped.
IdentityReport check_convolution_decomposition(const ArithFn& f,
                                               const ArithFn& g,
                                               std::uint64_t n_max);

/// (mu*Phi_f)(p^a) = f(p^a) - f(p^(a-1)) for a > 1, = f(p) for a = 1,
/// over p <= p_max, 1 <= a <= a_max; oracle on the left.
IdentityReport check_mobius_prime_power(const ArithFn& f, std::uint64_t p_max,
                                        int a_max);

/// (mu*Phi_f)(n) = phi(n) * sum over p^a || n of
/// (f(p^a) - f(p^(a-1))) / (p^a - p^(a-1)), n in [1, N]; requires f
/// additive (the a = 1 term then reads f(p)/(p-1)).
IdentityReport check_mobius_transform(const ArithFn& f, std::uint64_t n_max);

/// The two readings of the completely-additive remark, both checked
/// against the oracle on [1, N].
struct RemarkComparison {
  IdentityReport printed;     // sum f(p)/(p^a - p^(a-1)), no phi(n) factor
  IdentityReport phi_scaled;  // phi(n) * that sum
};
RemarkComparison check_remark_completely_additive(const ArithFn& f,
                                                  std::uint64_t n_max);

/// Phi_{Id.f}(n) = n f(n), n in [1, N]; requires f additive.
IdentityReport check_id_product_transform(const ArithFn& f,
                                          std::uint64_t n_max);

/// (mu*(f.Id))(n) = phi(n) f(n) + phi(n) * sum over p^a || n of
/// (f(p^a) - f(p^(a-1))) / (p - 1), n in [1, N]; requires f additive.
IdentityReport check_main_theorem(const ArithFn& f, std::uint64_t n_max);

/// The completely additive specialization: (mu*(Id.f))(n) =
/// phi(n) f(n) + phi(n) * sum over p^a || n of f(p)/(p - 1).
IdentityReport check_completely_additive_corollary(const ArithFn& f,
                                                   std::uint64_t n_max);

// ---------------------------------------------------------------------------
// Registry and suite driver.
// ---------------------------------------------------------------------------

/// A named, runnable identity: applicability predicate plus a runner
/// binding one selected function and a range bound.
struct IdentitySpec {
  std::string id;
  std::string description;
  std::string applicability;  // e.g. "f additive"
  bool asserted = true;
  std::function<bool(const ArithFn&)> applicable;
  std::function<IdentityReport(const ArithFn&, std::uint64_t)> run;
};

/// All identities, in the fixed order suites run them.
const std::vector<IdentitySpec>& identity_registry();
const IdentitySpec* find_identity(std::string_view id);

/// Runs every (identity, function) combination: inapplicable combinations
/// yield Inapplicable reports, applicable ones run with bound n_max.
/// Deterministic: registry order per selection order of ids, then function
/// order as given. Throws DomainError for an unknown id.
std::vector<IdentityReport> run_suite(const std::vector<std::string>& ids,
                                      const std::vector<ArithFn>& fns,
                                      std::uint64_t n_max);

/// False iff some asserted check reported a counterexample.
bool suite_passed(const std::vector<IdentityReport>& reports);

}  // namespace addtrans
