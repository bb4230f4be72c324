#pragma once

#include <string>
#include <vector>

#include "addtrans/identities.hpp"

namespace addtrans {

/// JSON array of report objects with fields
/// {id, function, range, status, counterexample?} plus erratum_candidate
/// (when the check is a non-asserted form), checked/skipped counts and an
/// optional note. Deterministic output, trailing newline.
std::string reports_to_json(const std::vector<IdentityReport>& reports);

/// Aligned text table, one row per report, with a trailing summary line.
std::string reports_to_text(const std::vector<IdentityReport>& reports);

}  // namespace addtrans
