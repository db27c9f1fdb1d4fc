#pragma once

#include <initializer_list>
#include <vector>

#include <nlohmann/json.hpp>

#include "snarkdom/graph.hpp"
#include "snarkdom/validators.hpp"
#include "snarkdom/variant.hpp"

namespace snarkdom {

// The subset of {a, b, c, d} a certificate assigns to one copy.
struct CopyConfig {
  std::uint8_t mask = 0;  // bit per Role value

  CopyConfig() = default;
  CopyConfig(std::initializer_list<Role> roles) {
    for (Role r : roles) add(r);
  }

  void add(Role r) { mask |= std::uint8_t{1} << static_cast<int>(r); }
  bool contains(Role r) const { return (mask >> static_cast<int>(r)) & 1; }
  int weight() const;

  bool operator==(const CopyConfig&) const = default;
};

// Closed-form value of the variant at n.  Keyed by the Variant enumeration;
// minimal maps to n (the smallest minimal dominating set is a minimum
// dominating set).
int formula_value(Variant v, int n);

// Recorded-only values kept for report completeness; no validator in scope.
int weakly_convex_formula(int n);  // 2n
int convex_formula(int n);         // 4n

// Copy-level certificate constructions, one per set variant.  Sizes always
// equal formula_value; validity is established by the validators.
std::vector<CopyConfig> upper_dom_copies(int n);
std::vector<CopyConfig> two_dom_copies(int n);
std::vector<CopyConfig> total_dom_copies(int n);
std::vector<CopyConfig> connected_dom_copies(int n);
std::vector<CopyConfig> secure_dom_copies(int n);  // n >= 4

VertexSet flatten_copies(const std::vector<CopyConfig>& copies);

VertexSet upper_dom_certificate(int n);
VertexSet two_dom_certificate(int n);
VertexSet total_dom_certificate(int n);
VertexSet connected_dom_certificate(int n);
VertexSet secure_dom_certificate(int n);  // rejects n = 3

// True when a constructive certificate exists for (variant, n).
bool has_certificate(Variant v, int n);

// Certificate candidate of exactly formula_value(variant, n):
//   domination / independent / minimal -> the n star centers
//   roman                              -> two guards on every star center
//   weak_roman                         -> indicator of the secure certificate
//   others                             -> the constructions above
// Throws CapacityError when no certificate exists (secure/weak_roman at n=3).
Candidate certificate(Variant v, int n);

// {"variant", "n", "size", "copies": [[roles...], ...]} with roles as
// letters; guard certificates repeat a letter once per guard.
nlohmann::json certificate_json(Variant v, int n);

}  // namespace snarkdom
