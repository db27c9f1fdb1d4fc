#include "snarkdom/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace snarkdom {

std::optional<Role> parse_role(char letter) {
  switch (letter) {
    case 'b': return Role::b;
    case 'a': return Role::a;
    case 'c': return Role::c;
    case 'd': return Role::d;
    default: return std::nullopt;
  }
}

std::string vertex_label(int v) {
  std::string out(1, role_letter(role_of(v)));
  out += '^';
  out += std::to_string(copy_of(v) + 1);
  return out;
}

FlowerSnark::FlowerSnark(int n) : n_(n) {
  if (n < 3) throw std::domain_error("flower snark requires n >= 3");
  const int V = 4 * n;

  const auto b = [n](int i) { return vertex_id(((i % n) + n) % n, Role::b); };
  const auto a = [](int i) { return vertex_id(i, Role::a); };
  const auto c = [](int i) { return vertex_id(i, Role::c); };
  const auto d = [](int i) { return vertex_id(i, Role::d); };

  for (int i = 0; i < n; ++i) {
    edges_.emplace_back(std::min(a(i), b(i)), std::max(a(i), b(i)));
    edges_.emplace_back(a(i), c(i));
    edges_.emplace_back(a(i), d(i));
    edges_.emplace_back(std::min(b(i), b(i + 1)), std::max(b(i), b(i + 1)));
  }
  for (int i = 0; i + 1 < n; ++i) {
    edges_.emplace_back(c(i), c(i + 1));
    edges_.emplace_back(d(i), d(i + 1));
  }
  edges_.emplace_back(std::min(c(n - 1), d(0)), std::max(c(n - 1), d(0)));
  edges_.emplace_back(std::min(d(n - 1), c(0)), std::max(d(n - 1), c(0)));
  std::sort(edges_.begin(), edges_.end());

  std::vector<std::vector<int>> adj(V);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  adjacency_.resize(V);
  open_.assign(V, VertexSet(V));
  closed_.assign(V, VertexSet(V));
  for (int v = 0; v < V; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    if (adj[v].size() != 3) throw std::logic_error("flower snark vertex degree != 3");
    std::copy(adj[v].begin(), adj[v].end(), adjacency_[v].begin());
    for (int u : adj[v]) open_[v].set(u);
    closed_[v] = open_[v];
    closed_[v].set(v);
  }
}

FlowerSnark build_flower_snark(int n) { return FlowerSnark(n); }

VertexSet copy_subset(const FlowerSnark& g, const VertexSet& s, int copy) {
  if (copy < 0 || copy >= g.n()) throw std::out_of_range("copy index out of range");
  VertexSet out(g.num_vertices());
  for (int r = 0; r < 4; ++r) {
    const int v = 4 * copy + r;
    if (s.test(v)) out.set(v);
  }
  return out;
}

std::vector<int> copy_weights(const FlowerSnark& g, const VertexSet& s) {
  std::vector<int> w(g.n(), 0);
  s.for_each([&](int v) { ++w[copy_of(v)]; });
  return w;
}

std::array<int, 5> weight_histogram(const FlowerSnark& g, const VertexSet& s) {
  std::array<int, 5> counts{};
  for (int w : copy_weights(g, s)) ++counts[w];
  return counts;
}

bool is_connected_induced(const FlowerSnark& g, const VertexSet& s) {
  if (s.count() <= 1) return true;
  VertexSet component(g.num_vertices());
  component.set(s.first());
  VertexSet frontier = component;
  while (!frontier.empty()) {
    VertexSet next(g.num_vertices());
    frontier.for_each([&](int v) { next |= g.open_neighborhood(v); });
    next &= s;
    next -= component;
    component |= next;
    frontier = next;
  }
  return component == s;
}

int girth(const FlowerSnark& g) {
  // Shortest cycle through each BFS root; the minimum over all roots is
  // exact because the estimate is tight for any root on a shortest cycle.
  const int V = g.num_vertices();
  int best = V + 1;
  std::vector<int> dist(V), parent(V);
  for (int root = 0; root < V; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (2 * dist[v] >= best) continue;
      for (int u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (u != parent[v] && v != parent[u]) {
          best = std::min(best, dist[v] + dist[u] + 1);
        }
      }
    }
    if (best == 3) break;
  }
  return best;
}

namespace {

struct EdgeColoring {
  const FlowerSnark& g;
  std::vector<std::array<int, 3>> incident;  // edge ids per vertex
  std::vector<int> color;                    // -1 = uncolored
  std::vector<std::array<bool, 3>> used;     // per vertex, colors in use

  explicit EdgeColoring(const FlowerSnark& graph) : g(graph) {
    const auto& edges = g.edges();
    incident.assign(g.num_vertices(), {-1, -1, -1});
    std::vector<int> fill(g.num_vertices(), 0);
    for (int e = 0; e < int(edges.size()); ++e) {
      auto [u, v] = edges[e];
      incident[u][fill[u]++] = e;
      incident[v][fill[v]++] = e;
    }
    color.assign(edges.size(), -1);
    used.assign(g.num_vertices(), {false, false, false});
  }

  int available_count(int e) const {
    auto [u, v] = g.edges()[e];
    int c = 0;
    for (int k = 0; k < 3; ++k) c += !used[u][k] && !used[v][k];
    return c;
  }

  bool assign(int e, int k) {
    auto [u, v] = g.edges()[e];
    if (used[u][k] || used[v][k]) return false;
    color[e] = k;
    used[u][k] = used[v][k] = true;
    return true;
  }

  void unassign(int e) {
    auto [u, v] = g.edges()[e];
    const int k = color[e];
    color[e] = -1;
    used[u][k] = used[v][k] = false;
  }

  bool search(int remaining) {
    if (remaining == 0) return true;
    // most-constrained edge first
    int pick = -1, pick_avail = 4;
    for (int e = 0; e < int(color.size()); ++e) {
      if (color[e] >= 0) continue;
      const int avail = available_count(e);
      if (avail == 0) return false;
      if (avail < pick_avail) {
        pick = e;
        pick_avail = avail;
        if (avail == 1) break;
      }
    }
    for (int k = 0; k < 3; ++k) {
      if (!assign(pick, k)) continue;
      if (search(remaining - 1)) return true;
      unassign(pick);
    }
    return false;
  }
};

}  // namespace

int chromatic_index(const FlowerSnark& g) {
  EdgeColoring state(g);
  // Pin the three edges at vertex 0 to colors 0, 1, 2: any proper
  // 3-edge-coloring can be permuted to match.
  int remaining = g.num_edges();
  for (int k = 0; k < 3; ++k) {
    state.assign(state.incident[0][k], k);
    --remaining;
  }
  return state.search(remaining) ? 3 : 4;
}

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "dimacs") return ExportFormat::dimacs;
  if (name == "json") return ExportFormat::json;
  if (name == "adjlist") return ExportFormat::adjlist;
  return std::nullopt;
}

std::string export_graph(const FlowerSnark& g, ExportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::dimacs: {
      out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
      for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
      break;
    }
    case ExportFormat::json: {
      nlohmann::json j;
      j["n"] = g.n();
      auto& vertices = j["vertices"] = nlohmann::json::array();
      for (int v = 0; v < g.num_vertices(); ++v) {
        vertices.push_back({{"id", v},
                            {"copy", copy_of(v)},
                            {"role", std::string(1, role_letter(role_of(v)))}});
      }
      auto& edges = j["edges"] = nlohmann::json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      out << j.dump() << '\n';
      break;
    }
    case ExportFormat::adjlist: {
      for (int v = 0; v < g.num_vertices(); ++v) {
        out << v << ':';
        for (int u : g.neighbors(v)) out << ' ' << u;
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace snarkdom
