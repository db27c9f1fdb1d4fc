#include "snarkdom/lp_export.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace snarkdom {

namespace {

std::string var_name(int v) {
  std::string out = "x_";
  out += role_letter(role_of(v));
  out += std::to_string(copy_of(v) + 1);
  return out;
}

}  // namespace

std::string export_lp(const FlowerSnark& g, Variant variant) {
  if (!is_covering_lp_variant(variant))
    throw std::invalid_argument("LP export covers domination, independent, two_domination and "
                                "total only");
  const int V = g.num_vertices();
  std::ostringstream out;

  out << "Minimize\n obj:";
  for (int v = 0; v < V; ++v) {
    out << (v == 0 ? " " : " + ") << var_name(v);
    if (v % 10 == 9 && v + 1 < V) out << "\n     ";
  }
  out << "\nSubject To\n";

  for (int v = 0; v < V; ++v) {
    out << " cover_" << var_name(v).substr(2) << ":";
    bool first = true;
    const auto term = [&](int u) {
      out << (first ? " " : " + ") << var_name(u);
      first = false;
    };
    switch (variant) {
      case Variant::domination:
      case Variant::independent:
        g.closed_neighborhood(v).for_each(term);
        out << " >= 1\n";
        break;
      case Variant::total:
        g.open_neighborhood(v).for_each(term);
        out << " >= 1\n";
        break;
      case Variant::two_domination:
        g.open_neighborhood(v).for_each(term);
        out << " + 2 " << var_name(v) << " >= 2\n";
        break;
      default:
        break;
    }
  }
  if (variant == Variant::independent) {
    for (auto [u, v] : g.edges()) {
      out << " edge_" << var_name(u).substr(2) << '_' << var_name(v).substr(2) << ": "
          << var_name(u) << " + " << var_name(v) << " <= 1\n";
    }
  }

  out << "Binary\n";
  for (int v = 0; v < V; ++v) out << ' ' << var_name(v) << '\n';
  out << "End\n";
  return out.str();
}

}  // namespace snarkdom
