#include "snarkdom/variant.hpp"

namespace snarkdom {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::domination: return "domination";
    case Variant::independent: return "independent";
    case Variant::two_domination: return "two_domination";
    case Variant::total: return "total";
    case Variant::connected: return "connected";
    case Variant::minimal: return "minimal";
    case Variant::upper: return "upper";
    case Variant::secure: return "secure";
    case Variant::roman: return "roman";
    case Variant::weak_roman: return "weak_roman";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : kAllVariants)
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

}  // namespace snarkdom
