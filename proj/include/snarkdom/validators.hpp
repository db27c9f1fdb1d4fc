#pragma once

#include <span>
#include <string_view>
#include <variant>

#include "snarkdom/graph.hpp"
#include "snarkdom/guards.hpp"
#include "snarkdom/variant.hpp"
#include "snarkdom/vertex_set.hpp"

namespace snarkdom {

// Every vertex outside s has a neighbor in s.
bool is_dominating(const FlowerSnark& g, const VertexSet& s);

// Dominating and edge-free.
bool is_independent_dominating(const FlowerSnark& g, const VertexSet& s);

// Every vertex outside s has at least two neighbors in s.
bool is_2_dominating(const FlowerSnark& g, const VertexSet& s);

// Every vertex of the graph (members included) has a neighbor in s.
bool is_total_dominating(const FlowerSnark& g, const VertexSet& s);

// Dominating and inducing a connected subgraph.
bool is_connected_dominating(const FlowerSnark& g, const VertexSet& s);

// Dominating with no removable vertex.  Implemented through private
// neighbors: s \ {w} stays dominating iff no vertex depends on w alone.
bool is_minimal_dominating(const FlowerSnark& g, const VertexSet& s);

// Dominating, and every outsider v can swap in for some neighbor w in s
// while (s \ {w}) + {v} stays dominating.
bool is_secure_dominating(const FlowerSnark& g, const VertexSet& s);

// Every vertex with no guard has a neighbor holding two guards.
bool is_roman_function(const FlowerSnark& g, const GuardFunction& f);

// Vertices with no guard anywhere in their closed neighborhood.
VertexSet undefended_set(const FlowerSnark& g, const GuardFunction& f);

// Every zero vertex v admits a neighbor w with f(w) >= 1 whose guard can
// move to v without leaving any vertex undefended.  Only single-guard moves
// are considered.
bool is_weak_roman_function(const FlowerSnark& g, const GuardFunction& f);

using Candidate = std::variant<VertexSet, GuardFunction>;

// Dispatch to the predicate for the variant.  `upper` and `minimal` both
// check minimal domination.  Throws std::invalid_argument when the candidate
// kind does not match the variant.
bool validate(const FlowerSnark& g, Variant variant, const Candidate& candidate);

using SetPredicate = bool (*)(const FlowerSnark&, const VertexSet&);
using GuardPredicate = bool (*)(const FlowerSnark&, const GuardFunction&);

SetPredicate set_predicate(Variant v);     // throws for guard variants
GuardPredicate guard_predicate(Variant v); // throws for set variants

// Per-copy guard totals of f; entries sum to the weight of f.
std::vector<int> copy_weights(const FlowerSnark& g, const GuardFunction& f);

// Occurrence of a weight pattern in a weight vector, up to rotation and
// reflection when cyclic (the default).  Pattern digits are single
// characters '0'..'9'.  Rejects patterns longer than the vector.
bool has_pattern(std::span<const int> weights, std::string_view pattern, bool cyclic);
bool has_cyclic_pattern(std::span<const int> weights, std::string_view pattern);

}  // namespace snarkdom
