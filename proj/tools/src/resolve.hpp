#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "addtrans/arith_fn.hpp"

namespace addtrans::cli {

/// Resolves a function spec against the catalog plus the constructor
/// prefixes, recursively:
///
///   phi_of:<spec>     the additive transform Phi_f
///   idmul:<spec>      the pointwise product Id.f
///   companion:<spec>  the additive companion of f
///   complete:<spec>   the completely additive transform seeded by f(p)
///
/// The returned function carries the spec string as its name. nullopt when
/// the spec does not resolve.
std::optional<ArithFn> resolve_fn(std::string_view spec);

}  // namespace addtrans::cli
