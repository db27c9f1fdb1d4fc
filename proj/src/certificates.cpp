#include "snarkdom/certificates.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "snarkdom/errors.hpp"

namespace snarkdom {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_n(int n) {
  if (n < 3) throw std::domain_error("flower snark certificates require n >= 3");
}

using Block = std::vector<CopyConfig>;

// First n entries of the infinite repetition of `block`.
Block tile_truncate(const Block& block, int n) {
  Block out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(block[i % block.size()]);
  return out;
}

Block concat(Block head, const Block& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

int CopyConfig::weight() const { return std::popcount(mask); }

int formula_value(Variant v, int n) {
  require_n(n);
  switch (v) {
    case Variant::domination:
    case Variant::independent:
    case Variant::minimal:
      return n;
    case Variant::two_domination:
      return n % 3 == 1 ? (5 * n + 4) / 3 : ceil_div(5 * n, 3);
    case Variant::total:
      return n % 4 == 2 ? 3 * n / 2 + 1 : ceil_div(3 * n, 2);
    case Variant::connected:
    case Variant::upper:
      return n % 2 == 0 ? 2 * n : 2 * n - 1;
    case Variant::secure:
    case Variant::weak_roman:
      return ceil_div(3 * n + 1, 2);
    case Variant::roman:
      return 2 * n;
  }
  throw std::invalid_argument("unknown variant");
}

int weakly_convex_formula(int n) {
  require_n(n);
  return 2 * n;
}

int convex_formula(int n) {
  require_n(n);
  return 4 * n;
}

std::vector<CopyConfig> upper_dom_copies(int n) {
  require_n(n);
  Block out;
  out.reserve(n);
  for (int i = 0; i + 1 < n; i += 2) {
    out.push_back({Role::a});
    out.push_back({Role::b, Role::c, Role::d});
  }
  if (n % 2 == 1) out.push_back({Role::a});
  return out;
}

std::vector<CopyConfig> two_dom_copies(int n) {
  require_n(n);
  static const Block block = {{Role::b, Role::c, Role::d}, {Role::a}, {Role::a}};
  return tile_truncate(block, n);
}

std::vector<CopyConfig> total_dom_copies(int n) {
  require_n(n);
  static const Block block = {{Role::b}, {Role::c, Role::d}, {Role::c, Role::d}, {Role::b}};
  static const Block end1 = {{Role::a, Role::b}};
  static const Block end2 = {{Role::a, Role::b}, {Role::a, Role::b}};
  static const Block end3 = {{Role::b}, {Role::a, Role::c, Role::d}, {Role::b}};

  const Block* ending = nullptr;
  switch (n % 4) {
    case 0: ending = nullptr; break;
    case 1: ending = &end1; break;
    case 2: ending = &end2; break;
    case 3: ending = &end3; break;
  }
  const int ending_len = ending ? int(ending->size()) : 0;
  Block out;
  for (int i = 0; i < (n - ending_len) / 4; ++i) out = concat(std::move(out), block);
  if (ending) out = concat(std::move(out), *ending);
  return out;
}

std::vector<CopyConfig> connected_dom_copies(int n) {
  require_n(n);
  static const Block block = {{Role::d},
                              {Role::a, Role::b, Role::d},
                              {Role::d},
                              {Role::a, Role::c, Role::d}};
  Block out = tile_truncate(block, n);
  if (n % 4 == 1) out[0] = {Role::b};  // reroute the tail so copy n-1 stays dominated
  return out;
}

std::vector<CopyConfig> secure_dom_copies(int n) {
  if (n == 3)
    throw CapacityError("no constructive secure certificate at n = 3; use the exact solver");
  require_n(n);
  static const Block block = {{Role::b}, {Role::c, Role::d}, {Role::b, Role::c}, {Role::d}};
  static const Block end0 = {{Role::b}, {Role::c, Role::d}, {Role::b, Role::c}, {Role::c, Role::d}};
  static const Block end1 = {
      {Role::b}, {Role::c, Role::d}, {Role::b, Role::c}, {Role::b, Role::d}, {Role::c}};
  static const Block end2 = {{Role::b, Role::c}, {Role::c, Role::d}};
  static const Block end3 = {{Role::b},          {Role::c, Role::d}, {Role::a, Role::b}, {Role::a},
                             {Role::a, Role::c}, {Role::b, Role::d}, {Role::c}};

  const Block* ending = nullptr;
  switch (n % 4) {
    case 0: ending = &end0; break;
    case 1: ending = &end1; break;
    case 2: ending = &end2; break;
    case 3: ending = &end3; break;
  }
  Block out;
  for (int i = 0; i < (n - int(ending->size())) / 4; ++i) out = concat(std::move(out), block);
  return concat(std::move(out), *ending);
}

VertexSet flatten_copies(const std::vector<CopyConfig>& copies) {
  VertexSet s(4 * int(copies.size()));
  for (int i = 0; i < int(copies.size()); ++i)
    for (int r = 0; r < 4; ++r)
      if (copies[i].contains(static_cast<Role>(r))) s.set(4 * i + r);
  return s;
}

VertexSet upper_dom_certificate(int n) { return flatten_copies(upper_dom_copies(n)); }
VertexSet two_dom_certificate(int n) { return flatten_copies(two_dom_copies(n)); }
VertexSet total_dom_certificate(int n) { return flatten_copies(total_dom_copies(n)); }
VertexSet connected_dom_certificate(int n) { return flatten_copies(connected_dom_copies(n)); }
VertexSet secure_dom_certificate(int n) { return flatten_copies(secure_dom_copies(n)); }

bool has_certificate(Variant v, int n) {
  if (n < 3) return false;
  if (v == Variant::secure || v == Variant::weak_roman) return n >= 4;
  return true;
}

namespace {

VertexSet star_centers(int n) {
  VertexSet s(4 * n);
  for (int i = 0; i < n; ++i) s.set(vertex_id(i, Role::a));
  return s;
}

}  // namespace

Candidate certificate(Variant v, int n) {
  require_n(n);
  switch (v) {
    case Variant::domination:
    case Variant::independent:
    case Variant::minimal:
      return star_centers(n);
    case Variant::two_domination:
      return two_dom_certificate(n);
    case Variant::total:
      return total_dom_certificate(n);
    case Variant::connected:
      return connected_dom_certificate(n);
    case Variant::upper:
      return upper_dom_certificate(n);
    case Variant::secure:
      return secure_dom_certificate(n);
    case Variant::roman: {
      GuardFunction f(4 * n);
      for (int i = 0; i < n; ++i) f.set(vertex_id(i, Role::a), 2);
      return f;
    }
    case Variant::weak_roman:
      return GuardFunction::indicator(secure_dom_certificate(n));
  }
  throw std::invalid_argument("unknown variant");
}

nlohmann::json certificate_json(Variant v, int n) {
  const Candidate cand = certificate(v, n);
  nlohmann::json copies = nlohmann::json::array();
  int size = 0;

  const auto letters_for_copy = [&](int i) {
    nlohmann::json letters = nlohmann::json::array();
    for (Role r : {Role::a, Role::b, Role::c, Role::d}) {
      const int id = vertex_id(i, r);
      int guards = 0;
      if (const auto* s = std::get_if<VertexSet>(&cand)) {
        guards = s->test(id) ? 1 : 0;
      } else {
        guards = std::get<GuardFunction>(cand).at(id);
      }
      for (int k = 0; k < guards; ++k) letters.push_back(std::string(1, role_letter(r)));
      size += guards;
    }
    return letters;
  };
  for (int i = 0; i < n; ++i) copies.push_back(letters_for_copy(i));

  return nlohmann::json{
      {"variant", std::string(variant_name(v))}, {"n", n}, {"size", size}, {"copies", copies}};
}

}  // namespace snarkdom
