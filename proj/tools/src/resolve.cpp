#include "resolve.hpp"

#include "addtrans/transform.hpp"

namespace addtrans::cli {

std::optional<ArithFn> resolve_fn(std::string_view spec) {
  if (const ArithFn* f = find_in_catalog(spec)) return *f;
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view prefix = spec.substr(0, colon);
  auto inner = resolve_fn(spec.substr(colon + 1));
  if (!inner) return std::nullopt;
  if (prefix == "phi_of") {
    return TransformedFn(*inner).as_arith_fn().with_name(std::string(spec));
  }
  if (prefix == "idmul") {
    return pointwise_product(*find_in_catalog("id"), *inner)
        .with_name(std::string(spec));
  }
  if (prefix == "companion") {
    return additive_companion(*inner).with_name(std::string(spec));
  }
  if (prefix == "complete") {
    return complete_extension(*inner).with_name(std::string(spec));
  }
  return std::nullopt;
}

}  // namespace addtrans::cli
