#include "snarkdom/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <thread>

namespace snarkdom {

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// combinatorics

constexpr int kMaxUniverse = 64;

const std::uint64_t* binomial_row(int v) {
  static const auto table = [] {
    auto t = std::make_unique<
        std::array<std::array<std::uint64_t, kMaxUniverse + 1>, kMaxUniverse + 1>>();
    for (int i = 0; i <= kMaxUniverse; ++i) {
      (*t)[i][0] = 1;
      for (int j = 1; j <= kMaxUniverse; ++j)
        (*t)[i][j] = j > i ? 0 : (*t)[i - 1][j - 1] + (*t)[i - 1][j];
    }
    return t;
  }();
  return (*table)[v].data();
}

std::uint64_t choose(int v, int k) {
  if (k < 0 || v < 0 || k > v) return 0;
  return binomial_row(v)[k];
}

// Combination of rank r among k-subsets of [0, V), lexicographic order.
std::vector<int> unrank_combination(std::uint64_t r, int V, int k) {
  std::vector<int> c(k);
  int v = 0;
  for (int t = 0; t < k; ++t) {
    while (choose(V - 1 - v, k - 1 - t) <= r) {
      r -= choose(V - 1 - v, k - 1 - t);
      ++v;
    }
    c[t] = v++;
  }
  return c;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SNARKDOM_THREADS")) {
    char* tail = nullptr;
    const long parsed = std::strtol(env, &tail, 10);
    if (tail && *tail == '\0' && parsed > 0) return int(parsed);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

// ---------------------------------------------------------------------------
// parallel task control

// Tasks are lexicographically ordered slices of one enumeration layer.  A
// worker that finds a valid candidate stops its own task.  Tasks ordered
// after one that already reported a find may be skipped or aborted; that
// never disturbs the earliest find, so results stay identical for any worker
// count.  Non-deterministic mode cancels everything instead.
struct ScanControl {
  explicit ScanControl(bool det) : deterministic(det) {}

  bool should_abort(std::size_t task) const {
    if (hard_cancel.load(std::memory_order_relaxed)) return true;
    return best_found.load(std::memory_order_relaxed) < task;
  }

  void record_find(std::size_t task) {
    std::size_t cur = best_found.load(std::memory_order_relaxed);
    while (task < cur && !best_found.compare_exchange_weak(cur, task)) {
    }
    if (!deterministic) hard_cancel.store(true, std::memory_order_relaxed);
  }

  const bool deterministic;
  std::atomic<std::size_t> best_found{std::numeric_limits<std::size_t>::max()};
  std::atomic<bool> hard_cancel{false};
};

struct TaskOutcome {
  std::uint64_t examined = 0;
  bool found = false;
  bool aborted = false;
};

template <typename RunTask>
void run_parallel(std::size_t num_tasks, int threads, RunTask&& run_task) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), num_tasks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < num_tasks; ++i) run_task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= num_tasks) return;
        run_task(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

struct LayerTally {
  bool found = false;
  std::size_t winner = 0;
  std::uint64_t canonical = 0;  // candidates up to the earliest find, or the full layer
  std::uint64_t actual = 0;
};

LayerTally tally_layer(const std::vector<TaskOutcome>& outcomes) {
  LayerTally t;
  std::size_t winner = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    t.actual += outcomes[i].examined;
    if (outcomes[i].found && i < winner) winner = i;
  }
  if (winner != std::numeric_limits<std::size_t>::max()) {
    t.found = true;
    t.winner = winner;
    t.canonical = 0;
    for (std::size_t i = 0; i <= winner; ++i) t.canonical += outcomes[i].examined;
  } else {
    t.canonical = t.actual;
  }
  return t;
}

std::size_t chunk_count_for(std::uint64_t total, int threads) {
  if (total < 4096) return 1;
  return std::size_t(std::min<std::uint64_t>({std::uint64_t(threads) * 4, 256, total}));
}

std::uint64_t chunk_boundary(std::uint64_t total, std::size_t chunks, std::size_t i) {
  return (total / chunks) * i + std::min<std::uint64_t>(i, total % chunks);
}

// ---------------------------------------------------------------------------
// vertex-set layer scan

// Lexicographic DFS over k-subsets of [0, V) restricted to an optional
// combination range [start, end), with the per-copy coverage prefilter.
// visit returns false to stop the scan; counting is the visitor's business.
class SetScanner {
 public:
  SetScanner(const FlowerSnark& g, int k, bool prefilter)
      : V_(g.num_vertices()),
        k_(k),
        ncopies_(g.n()),
        prefilter_(prefilter),
        cur_(V_),
        cover_(ncopies_, 0),
        uncovered_(ncopies_) {}

  template <typename Visit>
  void run(const std::vector<int>* start, const std::vector<int>* end, Visit&& visit) {
    rec(0, 0, start, end, visit);
  }

 private:
  int first_uncovered() const {
    for (int c = 0; c < ncopies_; ++c)
      if (cover_[c] == 0) return c;
    return -1;
  }

  // start/end are non-null while the current prefix still matches them.
  template <typename Visit>
  bool rec(int p, int vmin, const std::vector<int>* start, const std::vector<int>* end,
           Visit& visit) {
    if (p == k_) {
      if (end) return true;  // this is exactly the exclusive range end
      return visit(static_cast<const VertexSet&>(cur_));
    }
    int lo = start ? (*start)[p] : vmin;
    int hi = V_ - (k_ - p);
    if (end) hi = std::min(hi, (*end)[p]);
    if (prefilter_) {
      const int slots = k_ - p;
      if (slots < uncovered_) return true;
      const int u = first_uncovered();
      if (u >= 0) {
        hi = std::min(hi, 4 * u + 3);
        if (slots == uncovered_) lo = std::max(lo, 4 * u);
      }
    }
    for (int v = lo; v <= hi; ++v) {
      const auto* next_start = (start && v == (*start)[p]) ? start : nullptr;
      const auto* next_end = (end && v == (*end)[p]) ? end : nullptr;
      const int c = v >> 2;
      cur_.set(v);
      if (prefilter_ && cover_[c]++ == 0) --uncovered_;
      const bool keep_going = rec(p + 1, v + 1, next_start, next_end, visit);
      if (prefilter_ && --cover_[c] == 0) ++uncovered_;
      cur_.reset(v);
      if (!keep_going) return false;
    }
    return true;
  }

  const int V_, k_, ncopies_;
  const bool prefilter_;
  VertexSet cur_;
  std::vector<int> cover_;
  int uncovered_;
};

struct SetLayerOutcome {
  bool found = false;
  VertexSet witness;
  std::uint64_t canonical = 0;
  std::uint64_t actual = 0;
};

SetLayerOutcome scan_set_layer(const FlowerSnark& g, int k, SetPredicate pred,
                               const SolveOptions& opts, int threads) {
  SetLayerOutcome out;
  const int V = g.num_vertices();
  const std::uint64_t total = choose(V, k);
  if (total == 0) return out;

  const std::size_t chunks = chunk_count_for(total, threads);
  std::vector<std::vector<int>> starts(chunks);
  for (std::size_t i = 0; i < chunks; ++i)
    starts[i] = unrank_combination(chunk_boundary(total, chunks, i), V, k);

  ScanControl control(opts.deterministic);
  std::vector<TaskOutcome> outcomes(chunks);
  std::vector<std::optional<VertexSet>> witnesses(chunks);

  run_parallel(chunks, threads, [&](std::size_t i) {
    auto& outcome = outcomes[i];
    if (control.should_abort(i)) {
      outcome.aborted = true;
      return;
    }
    SetScanner scanner(g, k, opts.copy_prefilter);
    const std::vector<int>* end = i + 1 < chunks ? &starts[i + 1] : nullptr;
    scanner.run(&starts[i], end, [&](const VertexSet& s) {
      if (control.should_abort(i)) {
        outcome.aborted = true;
        return false;
      }
      ++outcome.examined;
      if (pred(g, s)) {
        witnesses[i] = s;
        outcome.found = true;
        control.record_find(i);
        return false;
      }
      return true;
    });
  });

  const LayerTally tally = tally_layer(outcomes);
  out.canonical = tally.canonical;
  out.actual = tally.actual;
  if (tally.found) {
    out.found = true;
    out.witness = *witnesses[tally.winner];
  }
  return out;
}

// ---------------------------------------------------------------------------
// guard-function layer scan

// One stratum of a weight layer: `twos` vertices holding two guards and
// `ones` holding one, enumerated two-guard-set-major.
struct GuardStratum {
  int twos = 0;
  int ones = 0;
  std::uint64_t t_count = 0;
  std::uint64_t o_count = 0;
  std::uint64_t total = 0;
};

std::vector<GuardStratum> strata_for_weight(int V, int weight) {
  std::vector<GuardStratum> out;
  for (int t = 0; 2 * t <= weight; ++t) {
    const int ones = weight - 2 * t;
    if (t > V || ones > V - t) continue;
    GuardStratum s;
    s.twos = t;
    s.ones = ones;
    s.t_count = choose(V, t);
    s.o_count = choose(V - t, ones);
    s.total = s.t_count * s.o_count;
    if (s.total > 0) out.push_back(s);
  }
  return out;
}

// Enumerates one stratum within the combined rank range [lo, hi), where a
// pair (T, O) has rank T_rank * o_count + O_rank.
class GuardScanner {
 public:
  GuardScanner(const FlowerSnark& g, const GuardStratum& stratum, bool prefilter)
      : V_(g.num_vertices()),
        ncopies_(g.n()),
        stratum_(stratum),
        prefilter_(prefilter),
        f_(V_),
        cover_(ncopies_, 0),
        uncovered_(ncopies_) {}

  template <typename Visit>
  void run(std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
    stop_ = false;
    const std::uint64_t t_lo = lo / stratum_.o_count;
    const std::uint64_t o_lo = lo % stratum_.o_count;
    const std::uint64_t t_hi = hi / stratum_.o_count;
    const std::uint64_t o_hi = hi % stratum_.o_count;

    if (t_hi > t_lo) {
      t_start_ = unrank_combination(t_lo, V_, stratum_.twos);
      o_start_rank_ = o_lo;
      const bool has_end = t_hi < stratum_.t_count;
      if (has_end) t_end_ = unrank_combination(t_hi, V_, stratum_.twos);
      rec_T(0, 0, &t_start_, has_end ? &t_end_ : nullptr, visit);
      if (!stop_ && o_hi > 0)
        scan_single_T(unrank_combination(t_hi, V_, stratum_.twos), 0, o_hi, visit);
    } else {
      scan_single_T(unrank_combination(t_lo, V_, stratum_.twos), o_lo, o_hi, visit);
    }
  }

 private:
  int first_uncovered() const {
    for (int c = 0; c < ncopies_; ++c)
      if (cover_[c] == 0) return c;
    return -1;
  }

  void add_two(int v) {
    f_.values()[v] = 2;
    if (prefilter_ && cover_[v >> 2]++ == 0) --uncovered_;
  }

  void remove_two(int v) {
    f_.values()[v] = 0;
    if (prefilter_ && --cover_[v >> 2] == 0) ++uncovered_;
  }

  void build_reduced_universe(const std::vector<int>& T) {
    ids_.clear();
    std::size_t ti = 0;
    for (int v = 0; v < V_; ++v) {
      if (ti < T.size() && T[ti] == v) {
        ++ti;
        continue;
      }
      ids_.push_back(v);
    }
  }

  template <typename Visit>
  void scan_single_T(const std::vector<int>& T, std::uint64_t o_lo, std::uint64_t o_hi,
                     Visit& visit) {
    if (o_lo >= o_hi) return;
    for (int v : T) add_two(v);
    if (!prefilter_ || uncovered_ <= stratum_.ones) {
      build_reduced_universe(T);
      const int R = int(ids_.size());
      std::vector<int> o_start = unrank_combination(o_lo, R, stratum_.ones);
      std::vector<int> o_end;
      const bool has_end = o_hi < stratum_.o_count;
      if (has_end) o_end = unrank_combination(o_hi, R, stratum_.ones);
      rec_O(0, 0, o_lo > 0 ? &o_start : nullptr, has_end ? &o_end : nullptr, visit);
    }
    for (int v : T) remove_two(v);
  }

  // Two-guard picks in lexicographic order over [t_start, t_end); each
  // complete T runs its O scan (the first T starts at o_start_rank_).
  template <typename Visit>
  bool rec_T(int p, int vmin, const std::vector<int>* start, const std::vector<int>* end,
             Visit& visit) {
    const int t = stratum_.twos;
    if (p == t) {
      if (end) return true;  // exclusive T range end
      if (!prefilter_ || uncovered_ <= stratum_.ones) {
        build_reduced_universe(current_T_);
        const int R = int(ids_.size());
        std::vector<int> o_start;
        const bool at_first = start != nullptr && o_start_rank_ > 0;
        if (at_first) o_start = unrank_combination(o_start_rank_, R, stratum_.ones);
        rec_O(0, 0, at_first ? &o_start : nullptr, nullptr, visit);
      }
      return !stop_;
    }
    int lo = start ? (*start)[p] : vmin;
    int hi = V_ - (t - p);
    if (end) hi = std::min(hi, (*end)[p]);
    if (prefilter_ && uncovered_ > stratum_.ones + (t - p)) return true;
    for (int v = lo; v <= hi; ++v) {
      const auto* next_start = (start && v == (*start)[p]) ? start : nullptr;
      const auto* next_end = (end && v == (*end)[p]) ? end : nullptr;
      current_T_.push_back(v);
      add_two(v);
      const bool keep_going = rec_T(p + 1, v + 1, next_start, next_end, visit);
      remove_two(v);
      current_T_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  // One-guard picks over the reduced universe; bounds live in position space.
  template <typename Visit>
  bool rec_O(int p, int posmin, const std::vector<int>* start, const std::vector<int>* end,
             Visit& visit) {
    const int ones = stratum_.ones;
    const int R = int(ids_.size());
    if (p == ones) {
      if (end) return true;  // exclusive O range end
      if (!visit(static_cast<const GuardFunction&>(f_))) {
        stop_ = true;
        return false;
      }
      return true;
    }
    int lo = start ? (*start)[p] : posmin;
    int hi = R - (ones - p);
    if (end) hi = std::min(hi, (*end)[p]);
    int boundary_vertex = V_;
    if (prefilter_) {
      const int slots = ones - p;
      if (slots < uncovered_) return true;
      const int u = first_uncovered();
      if (u >= 0) {
        boundary_vertex = 4 * u + 3;
        if (slots == uncovered_)
          while (lo <= hi && ids_[lo] < 4 * u) ++lo;
      }
    }
    for (int pos = lo; pos <= hi; ++pos) {
      const int v = ids_[pos];
      if (v > boundary_vertex) break;
      const auto* next_start = (start && pos == (*start)[p]) ? start : nullptr;
      const auto* next_end = (end && pos == (*end)[p]) ? end : nullptr;
      f_.values()[v] = 1;
      if (prefilter_ && cover_[v >> 2]++ == 0) --uncovered_;
      const bool keep_going = rec_O(p + 1, pos + 1, next_start, next_end, visit);
      if (prefilter_ && --cover_[v >> 2] == 0) ++uncovered_;
      f_.values()[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const int V_, ncopies_;
  const GuardStratum stratum_;
  const bool prefilter_;
  GuardFunction f_;
  std::vector<int> cover_;
  int uncovered_;
  std::vector<int> current_T_;
  std::vector<int> ids_;
  std::vector<int> t_start_, t_end_;
  std::uint64_t o_start_rank_ = 0;
  bool stop_ = false;
};

struct GuardTask {
  std::size_t stratum = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct GuardLayerOutcome {
  bool found = false;
  GuardFunction witness;
  std::uint64_t canonical = 0;
  std::uint64_t actual = 0;
};

GuardLayerOutcome scan_guard_layer(const FlowerSnark& g, int weight, GuardPredicate pred,
                                   const SolveOptions& opts, int threads) {
  GuardLayerOutcome out;
  const auto strata = strata_for_weight(g.num_vertices(), weight);
  if (strata.empty()) return out;

  std::vector<GuardTask> tasks;
  for (std::size_t si = 0; si < strata.size(); ++si) {
    const std::uint64_t total = strata[si].total;
    const std::size_t chunks = chunk_count_for(total, threads);
    for (std::size_t i = 0; i < chunks; ++i) {
      const GuardTask task{si, chunk_boundary(total, chunks, i),
                           chunk_boundary(total, chunks, i + 1)};
      if (task.lo < task.hi) tasks.push_back(task);
    }
  }

  ScanControl control(opts.deterministic);
  std::vector<TaskOutcome> outcomes(tasks.size());
  std::vector<std::optional<GuardFunction>> witnesses(tasks.size());

  run_parallel(tasks.size(), threads, [&](std::size_t i) {
    auto& outcome = outcomes[i];
    if (control.should_abort(i)) {
      outcome.aborted = true;
      return;
    }
    const GuardTask& task = tasks[i];
    GuardScanner scanner(g, strata[task.stratum], opts.copy_prefilter);
    scanner.run(task.lo, task.hi, [&](const GuardFunction& f) {
      if (control.should_abort(i)) {
        outcome.aborted = true;
        return false;
      }
      ++outcome.examined;
      if (pred(g, f)) {
        witnesses[i] = f;
        outcome.found = true;
        control.record_find(i);
        return false;
      }
      return true;
    });
  });

  const LayerTally tally = tally_layer(outcomes);
  out.canonical = tally.canonical;
  out.actual = tally.actual;
  if (tally.found) {
    out.found = true;
    out.witness = *witnesses[tally.winner];
  }
  return out;
}

// ---------------------------------------------------------------------------
// feasibility

void check_capacity(Variant v, int n, const SolveOptions& opts) {
  const int cap = solver_max_n(v, opts.long_running);
  if (n > cap) {
    std::string msg = "exact solve for variant '" + std::string(variant_name(v)) +
                      "' supports n <= " + std::to_string(cap);
    if (!opts.long_running) msg += " (n <= 8 with the long-running flag)";
    msg += "; requested n = " + std::to_string(n);
    throw CapacityError(msg);
  }
  if (!opts.copy_prefilter && n > 3)
    throw CapacityError("full brute-force audits without the copy prefilter support n = 3 only");
}

SolveResult finish(Variant variant, const FlowerSnark& g, int optimum, Candidate witness,
                   int proof_bound, std::uint64_t examined, Clock::time_point t0,
                   const SolveOptions& opts) {
  SolveResult r;
  r.variant = variant;
  r.n = g.n();
  r.optimum = optimum;
  r.witness = std::move(witness);
  r.proof_bound = proof_bound;
  r.candidates_examined = examined;
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  r.deterministic = opts.deterministic;
  return r;
}

}  // namespace

int solver_max_n(Variant v, bool long_running) {
  if (long_running) return 8;
  switch (v) {
    case Variant::domination:
    case Variant::independent:
    case Variant::two_domination:
    case Variant::total:
    case Variant::connected:
    case Variant::minimal:
      return 7;
    case Variant::secure:
    case Variant::upper:
      return 6;
    case Variant::roman:
    case Variant::weak_roman:
      return 5;
  }
  return 3;
}

SolveResult solve_min_set(const FlowerSnark& g, Variant variant, const SolveOptions& opts) {
  if (is_guard_variant(variant) || variant == Variant::upper)
    throw std::invalid_argument("solve_min_set handles minimized set variants only");
  check_capacity(variant, g.n(), opts);
  const auto pred = set_predicate(variant);
  const int threads = resolve_threads(opts.threads);
  const auto t0 = Clock::now();

  std::uint64_t canonical = 0, actual = 0;
  const int k0 = opts.copy_prefilter ? g.n() - 1 : 0;
  for (int k = k0; k <= g.num_vertices(); ++k) {
    auto layer = scan_set_layer(g, k, pred, opts, threads);
    canonical += layer.canonical;
    actual += layer.actual;
    if (layer.found)
      return finish(variant, g, k, std::move(layer.witness), k - 1,
                    opts.deterministic ? canonical : actual, t0, opts);
  }
  throw std::logic_error("no valid candidate up to the full vertex set");
}

SolveResult solve_upper_domination(const FlowerSnark& g, const SolveOptions& opts) {
  check_capacity(Variant::upper, g.n(), opts);
  const auto pred = set_predicate(Variant::upper);
  const int threads = resolve_threads(opts.threads);
  const auto t0 = Clock::now();

  std::uint64_t canonical = 0, actual = 0;
  const int kmin = opts.copy_prefilter ? g.n() : 0;
  for (int k = g.num_vertices(); k >= kmin; --k) {
    auto layer = scan_set_layer(g, k, pred, opts, threads);
    canonical += layer.canonical;
    actual += layer.actual;
    if (layer.found)
      return finish(Variant::upper, g, k, std::move(layer.witness), k + 1,
                    opts.deterministic ? canonical : actual, t0, opts);
  }
  throw std::logic_error("no minimal dominating set found");
}

SolveResult solve_min_guard(const FlowerSnark& g, Variant variant, const SolveOptions& opts) {
  if (!is_guard_variant(variant))
    throw std::invalid_argument("solve_min_guard handles roman / weak_roman only");
  check_capacity(variant, g.n(), opts);
  const auto pred = guard_predicate(variant);
  const int threads = resolve_threads(opts.threads);
  const auto t0 = Clock::now();

  std::uint64_t canonical = 0, actual = 0;
  const int w0 = opts.copy_prefilter ? g.n() - 1 : 0;
  for (int w = w0; w <= 2 * g.num_vertices(); ++w) {
    auto layer = scan_guard_layer(g, w, pred, opts, threads);
    canonical += layer.canonical;
    actual += layer.actual;
    if (layer.found)
      return finish(variant, g, w, std::move(layer.witness), w - 1,
                    opts.deterministic ? canonical : actual, t0, opts);
  }
  throw std::logic_error("no valid guard function up to weight 2|V|");
}

SolveResult solve(const FlowerSnark& g, Variant variant, const SolveOptions& opts) {
  if (variant == Variant::upper) return solve_upper_domination(g, opts);
  if (is_guard_variant(variant)) return solve_min_guard(g, variant, opts);
  return solve_min_set(g, variant, opts);
}

std::vector<VertexSet> enumerate_valid_sets(const FlowerSnark& g, Variant variant, int size,
                                            std::uint64_t limit, const SolveOptions& opts) {
  if (is_guard_variant(variant))
    throw std::invalid_argument("enumerate_valid_sets requires a set variant");
  check_capacity(variant, g.n(), opts);
  if (size < 0 || size > g.num_vertices())
    throw std::invalid_argument("size must lie within [0, 4n]");
  const auto pred = set_predicate(variant);

  std::vector<VertexSet> out;
  SetScanner scanner(g, size, opts.copy_prefilter);
  scanner.run(nullptr, nullptr, [&](const VertexSet& s) {
    if (pred(g, s)) {
      out.push_back(s);
      if (limit > 0 && out.size() >= limit) return false;
    }
    return true;
  });
  return out;
}

std::vector<GuardFunction> enumerate_valid_guards(const FlowerSnark& g, Variant variant,
                                                  int weight, std::uint64_t limit,
                                                  const SolveOptions& opts) {
  if (!is_guard_variant(variant))
    throw std::invalid_argument("enumerate_valid_guards requires roman / weak_roman");
  check_capacity(variant, g.n(), opts);
  if (weight < 0 || weight > 2 * g.num_vertices())
    throw std::invalid_argument("weight must lie within [0, 8n]");
  const auto pred = guard_predicate(variant);

  std::vector<GuardFunction> out;
  bool stop = false;
  for (const auto& stratum : strata_for_weight(g.num_vertices(), weight)) {
    if (stop) break;
    GuardScanner scanner(g, stratum, opts.copy_prefilter);
    scanner.run(0, stratum.total, [&](const GuardFunction& f) {
      if (pred(g, f)) {
        out.push_back(f);
        if (limit > 0 && out.size() >= limit) {
          stop = true;
          return false;
        }
      }
      return true;
    });
  }
  return out;
}

}  // namespace snarkdom
