#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "snarkdom/errors.hpp"
#include "snarkdom/graph.hpp"
#include "snarkdom/validators.hpp"
#include "snarkdom/variant.hpp"

namespace snarkdom {

struct SolveOptions {
  // Reproducible output: the witness is the first valid candidate in
  // canonical enumeration order for any worker count, and the result JSON is
  // bit-identical across worker counts.
  bool deterministic = false;
  // Widens the feasibility ranges to the opt-in long-running bounds.
  bool long_running = false;
  // Requires at least one chosen vertex (or positive guard) per copy; valid
  // for every variant here since each candidate dominates.  Disable only for
  // full brute-force audits at n = 3.
  bool copy_prefilter = true;
  // 0 = use SNARKDOM_THREADS, else the available hardware parallelism.
  int threads = 0;
};

struct SolveResult {
  Variant variant{};
  int n = 0;
  int optimum = 0;
  Candidate witness;
  // The adjacent cardinality/weight exhaustively refuted: optimum - 1 for
  // minimization, optimum + 1 for upper domination.
  int proof_bound = 0;
  std::uint64_t candidates_examined = 0;
  std::chrono::milliseconds elapsed{0};
  bool deterministic = false;
};

// Largest n accepted for the variant.  The long-running flag widens every
// range to 8.
int solver_max_n(Variant v, bool long_running);

// Minimum-cardinality search over vertex sets by ascending layer, for
// domination, independent, two_domination, total, connected, secure and
// minimal.  Each set of size optimum-1 is enumerated and refuted.
SolveResult solve_min_set(const FlowerSnark& g, Variant variant, const SolveOptions& opts = {});

// Maximum-cardinality minimal dominating set by descending layer.
SolveResult solve_upper_domination(const FlowerSnark& g, const SolveOptions& opts = {});

// Minimum-weight guard function for roman / weak_roman.  Layers ascend by
// weight k; within one layer, strata choose t two-guard vertices and k - 2t
// one-guard vertices for t = 0..k/2, lexicographically within each stratum.
SolveResult solve_min_guard(const FlowerSnark& g, Variant variant, const SolveOptions& opts = {});

// Dispatch over the three solver kinds.
SolveResult solve(const FlowerSnark& g, Variant variant, const SolveOptions& opts = {});

// All (or the first `limit` when limit > 0) valid sets of exactly the given
// size, in lexicographic order.
std::vector<VertexSet> enumerate_valid_sets(const FlowerSnark& g, Variant variant, int size,
                                            std::uint64_t limit = 0, const SolveOptions& opts = {});

// All (or the first `limit`) valid guard functions of exactly the given
// weight, in canonical enumeration order.
std::vector<GuardFunction> enumerate_valid_guards(const FlowerSnark& g, Variant variant, int weight,
                                                  std::uint64_t limit = 0,
                                                  const SolveOptions& opts = {});

}  // namespace snarkdom
