#include <doctest.h>

#include <vector>

#include "snarkdom/certificates.hpp"
#include "snarkdom/report.hpp"
#include "snarkdom/solvers.hpp"

using namespace snarkdom;

namespace {

int witness_size(const SolveResult& r) {
  return std::holds_alternative<VertexSet>(r.witness)
             ? std::get<VertexSet>(r.witness).count()
             : std::get<GuardFunction>(r.witness).weight();
}

void check_result_invariants(const FlowerSnark& g, const SolveResult& r) {
  CHECK(validate(g, r.variant, r.witness));
  CHECK(witness_size(r) == r.optimum);
  const int expected_bound = r.variant == Variant::upper ? r.optimum + 1 : r.optimum - 1;
  CHECK(r.proof_bound == expected_bound);
}

}  // namespace

TEST_CASE("domination and independent domination equal n") {
  for (int n : {3, 4, 5, 6}) {
    const auto g = build_flower_snark(n);
    for (Variant v : {Variant::domination, Variant::independent, Variant::minimal}) {
      const auto r = solve(g, v);
      CHECK(r.optimum == n);
      check_result_invariants(g, r);
    }
  }
}

TEST_CASE("small exact values across variants") {
  const auto g3 = build_flower_snark(3);
  const auto g4 = build_flower_snark(4);

  CHECK(solve(g3, Variant::total).optimum == 5);
  CHECK(solve(g3, Variant::connected).optimum == 5);
  CHECK(solve(g3, Variant::upper).optimum == 5);
  CHECK(solve(g3, Variant::two_domination).optimum == 5);
  CHECK(solve(g3, Variant::secure).optimum == 5);
  CHECK(solve(g3, Variant::weak_roman).optimum == 5);
  CHECK(solve(g3, Variant::roman).optimum == 6);

  CHECK(solve(g4, Variant::total).optimum == 6);
  CHECK(solve(g4, Variant::connected).optimum == 8);
  CHECK(solve(g4, Variant::two_domination).optimum == 8);
  CHECK(solve(g4, Variant::secure).optimum == 7);
  CHECK(solve(g4, Variant::weak_roman).optimum == 7);
}

TEST_CASE("solve results validate and carry replayable proofs") {
  const auto g = build_flower_snark(4);
  for (Variant v : {Variant::total, Variant::connected, Variant::upper, Variant::weak_roman}) {
    const auto r = solve(g, v);
    check_result_invariants(g, r);
    if (is_guard_variant(v)) {
      CHECK(enumerate_valid_guards(g, v, r.proof_bound, 1).empty());
    } else {
      CHECK(enumerate_valid_sets(g, v, r.proof_bound, 1).empty());
    }
  }
}

TEST_CASE("minimum connected dominating sets are total dominating") {
  for (int n : {3, 4}) {
    const auto g = build_flower_snark(n);
    const auto r = solve(g, Variant::connected);
    const auto sets = enumerate_valid_sets(g, Variant::connected, r.optimum);
    REQUIRE(!sets.empty());
    for (const auto& s : sets) {
      REQUIRE(s.count() >= 2);
      CHECK(is_total_dominating(g, s));
    }
  }
}

TEST_CASE("cross-variant value ordering at n = 4") {
  const auto g = build_flower_snark(4);
  const int gamma = solve(g, Variant::domination).optimum;
  const int indep = solve(g, Variant::independent).optimum;
  const int total = solve(g, Variant::total).optimum;
  const int two = solve(g, Variant::two_domination).optimum;
  const int connected = solve(g, Variant::connected).optimum;
  const int secure = solve(g, Variant::secure).optimum;
  const int weak = solve(g, Variant::weak_roman).optimum;
  const int roman = solve(g, Variant::roman).optimum;
  CHECK(gamma <= indep);
  CHECK(gamma <= total);
  CHECK(gamma <= two);
  CHECK(gamma <= connected);
  CHECK(weak <= secure);
  CHECK(weak <= roman);
  CHECK(secure <= roman);
}

TEST_CASE("deterministic solves are identical across worker counts") {
  const auto g = build_flower_snark(3);
  for (Variant v : kAllVariants) {
    SolveOptions opts;
    opts.deterministic = true;
    opts.threads = 1;
    const auto r1 = solve(g, v, opts);
    opts.threads = 2;
    const auto r2 = solve(g, v, opts);
    opts.threads = 8;
    const auto r8 = solve(g, v, opts);
    const auto j1 = solve_result_to_json(r1).dump();
    CHECK(j1 == solve_result_to_json(r2).dump());
    CHECK(j1 == solve_result_to_json(r8).dump());
  }
}

TEST_CASE("determinism holds when layers split into many chunks") {
  // layers at n = 5 are large enough to be partitioned across workers
  const auto g5 = build_flower_snark(5);
  for (Variant v : {Variant::connected, Variant::secure, Variant::upper, Variant::weak_roman}) {
    SolveOptions opts;
    opts.deterministic = true;
    opts.threads = 1;
    const auto r1 = solve(g5, v, opts);
    opts.threads = 3;
    const auto r3 = solve(g5, v, opts);
    opts.threads = 16;
    const auto r16 = solve(g5, v, opts);
    const auto j1 = solve_result_to_json(r1).dump();
    CHECK(j1 == solve_result_to_json(r3).dump());
    CHECK(j1 == solve_result_to_json(r16).dump());
  }
}

TEST_CASE("deterministic witness is the first valid candidate in lex order") {
  const auto g = build_flower_snark(3);
  SolveOptions opts;
  opts.deterministic = true;
  const auto r = solve(g, Variant::domination, opts);
  // {a^1, a^2, a^3} = ids {1, 5, 9}: every lex-earlier one-per-copy triple
  // fails, so this is the first dominating 3-set.
  CHECK(std::get<VertexSet>(r.witness).to_vector() == std::vector<int>{1, 5, 9});

  const auto sets = enumerate_valid_sets(g, Variant::domination, 3);
  REQUIRE(!sets.empty());
  CHECK(sets.front() == std::get<VertexSet>(r.witness));
  for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1].lex_less(sets[i]));
}

TEST_CASE("full brute force at n = 3 agrees with the prefiltered search") {
  const auto g = build_flower_snark(3);
  for (Variant v : {Variant::domination, Variant::total, Variant::upper, Variant::weak_roman}) {
    SolveOptions filtered, brute;
    brute.copy_prefilter = false;
    CHECK(solve(g, v, filtered).optimum == solve(g, v, brute).optimum);
  }
}

TEST_CASE("feasibility ranges are enforced") {
  CHECK(solver_max_n(Variant::domination, false) == 7);
  CHECK(solver_max_n(Variant::secure, false) == 6);
  CHECK(solver_max_n(Variant::upper, false) == 6);
  CHECK(solver_max_n(Variant::weak_roman, false) == 5);
  CHECK(solver_max_n(Variant::weak_roman, true) == 8);

  const auto g8 = build_flower_snark(8);
  CHECK_THROWS_AS((void)solve(g8, Variant::domination), CapacityError);
  const auto g6 = build_flower_snark(6);
  CHECK_THROWS_AS((void)solve(g6, Variant::weak_roman), CapacityError);
  const auto g7 = build_flower_snark(7);
  CHECK_THROWS_AS((void)solve(g7, Variant::secure), CapacityError);

  SolveOptions brute;
  brute.copy_prefilter = false;
  const auto g4 = build_flower_snark(4);
  CHECK_THROWS_AS((void)solve(g4, Variant::domination, brute), CapacityError);
}

TEST_CASE("enumerate_valid_sets basics at n = 3") {
  const auto g = build_flower_snark(3);

  const auto doms3 = enumerate_valid_sets(g, Variant::domination, 3);
  VertexSet centers(12);
  for (int i = 0; i < 3; ++i) centers.set(vertex_id(i, Role::a));
  CHECK(std::find(doms3.begin(), doms3.end(), centers) != doms3.end());

  CHECK(enumerate_valid_sets(g, Variant::domination, 2).empty());

  const auto total5 = enumerate_valid_sets(g, Variant::total, 5);
  CHECK(!total5.empty());
  for (const auto& s : total5) {
    const auto weights = copy_weights(g, s);
    CHECK_FALSE(has_cyclic_pattern(weights, "111"));
  }

  // three closed neighborhoods can only cover all 12 vertices by partition,
  // so the centers form the unique minimum dominating set
  CHECK(doms3.size() == 1);

  const auto doms4 = enumerate_valid_sets(g, Variant::domination, 4);
  REQUIRE(doms4.size() > 3);
  const auto limited = enumerate_valid_sets(g, Variant::domination, 4, 3);
  REQUIRE(limited.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(limited[i] == doms4[i]);
}

TEST_CASE("enumerate_valid_guards finds all optimal weak roman functions") {
  const auto g = build_flower_snark(3);
  const auto functions = enumerate_valid_guards(g, Variant::weak_roman, 5);
  CHECK(!functions.empty());
  for (const auto& f : functions) {
    CHECK(f.weight() == 5);
    CHECK(is_weak_roman_function(g, f));
  }
  for (std::size_t i = 1; i < functions.size(); ++i)
    CHECK(functions[i - 1].lex_less(functions[i]));
  CHECK(enumerate_valid_guards(g, Variant::weak_roman, 4).empty());
}
