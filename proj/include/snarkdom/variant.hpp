#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace snarkdom {

// The implemented domination variants.  Validators, solvers, formulas and
// certificates are all keyed by this enumeration.
enum class Variant {
  domination,
  independent,
  two_domination,
  total,
  connected,
  minimal,
  upper,
  secure,
  roman,
  weak_roman,
};

inline constexpr std::array<Variant, 10> kAllVariants = {
    Variant::domination, Variant::independent, Variant::two_domination,
    Variant::total,      Variant::connected,   Variant::minimal,
    Variant::upper,      Variant::secure,      Variant::roman,
    Variant::weak_roman,
};

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// roman / weak_roman candidates are guard functions, all others vertex sets.
constexpr bool is_guard_variant(Variant v) {
  return v == Variant::roman || v == Variant::weak_roman;
}

// Variants with a covering-style LP formulation.
constexpr bool is_covering_lp_variant(Variant v) {
  return v == Variant::domination || v == Variant::independent ||
         v == Variant::two_domination || v == Variant::total;
}

}  // namespace snarkdom
