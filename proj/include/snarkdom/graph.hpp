#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snarkdom/vertex_set.hpp"

namespace snarkdom {

// Vertex roles within one star copy, in drawing order bottom to top.
// The numeric values fix the canonical vertex indexing forever:
// id = 4 * copy + role.
enum class Role : int { b = 0, a = 1, c = 2, d = 3 };

constexpr int vertex_id(int copy, Role role) { return 4 * copy + static_cast<int>(role); }
constexpr int copy_of(int v) { return v >> 2; }
constexpr Role role_of(int v) { return static_cast<Role>(v & 3); }

constexpr char role_letter(Role r) {
  constexpr char letters[4] = {'b', 'a', 'c', 'd'};
  return letters[static_cast<int>(r)];
}

std::optional<Role> parse_role(char letter);

// Human-readable label, 1-based copy index: vertex 0 -> "b^1".
std::string vertex_label(int v);

// The flower snark J_n: n star copies K_{1,3} with centers a^i, joined by an
// n-cycle over the b vertices and a single 2n-cycle over the c and d vertices.
// The crossing edges c^{n-1}-d^0 and d^{n-1}-c^0 sit between copy n-1 and
// copy 0.  Immutable after construction.
class FlowerSnark {
 public:
  explicit FlowerSnark(int n);

  int n() const { return n_; }
  int num_vertices() const { return 4 * n_; }
  int num_edges() const { return 6 * n_; }

  const std::array<int, 3>& neighbors(int v) const { return adjacency_[v]; }
  const VertexSet& open_neighborhood(int v) const { return open_[v]; }
  const VertexSet& closed_neighborhood(int v) const { return closed_[v]; }

  // All edges as (u, v) with u < v, in lexicographic order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<std::array<int, 3>> adjacency_;
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
  std::vector<std::pair<int, int>> edges_;
};

// Rejects n < 3.
FlowerSnark build_flower_snark(int n);

// s restricted to the four vertices of the given copy.
VertexSet copy_subset(const FlowerSnark& g, const VertexSet& s, int copy);

// Per-copy cardinalities of s; entries are in 0..4 and sum to |s|.
std::vector<int> copy_weights(const FlowerSnark& g, const VertexSet& s);

// counts[k] = number of copies with weight k in s.
std::array<int, 5> weight_histogram(const FlowerSnark& g, const VertexSet& s);

// Connectivity of the subgraph induced by s.  The empty set and singletons
// count as connected.
bool is_connected_induced(const FlowerSnark& g, const VertexSet& s);

// Length of the shortest cycle, by BFS from every vertex.
int girth(const FlowerSnark& g);

// 3 when a proper 3-edge-coloring exists, otherwise 4.  Exact backtracking
// search; intended for n <= 9.
int chromatic_index(const FlowerSnark& g);

enum class ExportFormat { dimacs, json, adjlist };

std::optional<ExportFormat> parse_export_format(std::string_view name);

// dimacs: "p edge 4n 6n" header, 1-based "e u v" lines in lexicographic
//         order.
// json:   {"n":..,"vertices":[{"id","copy","role"}..],"edges":[[u,v]..]}
//         with 0-based ids.
// adjlist: one line per vertex, "id: n1 n2 n3", 0-based.
std::string export_graph(const FlowerSnark& g, ExportFormat format);

}  // namespace snarkdom
