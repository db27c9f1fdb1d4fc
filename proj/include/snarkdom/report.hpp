#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "snarkdom/solvers.hpp"
#include "snarkdom/validators.hpp"

namespace snarkdom {

nlohmann::json witness_to_json(const Candidate& candidate);

// {variant, n, optimum, witness, proof_bound, candidates_examined,
//  elapsed_ms}.  Deterministic results report elapsed_ms as 0 so the output
// is bit-identical across runs and worker counts.
nlohmann::json solve_result_to_json(const SolveResult& result);

// Verification report over n = 3..n_max for every variant plus the
// recorded-only entries.  Schema (snake_case, frozen):
//   {version, rows: [{variant, n, formula, certificate_size,
//    certificate_valid, solver_value, solver_skipped_reason, agree}],
//    elapsed_ms}
// Solver columns are filled only within the documented feasibility ranges.
nlohmann::json build_verification_report(int n_max, bool with_solver,
                                         const SolveOptions& opts = {});

bool report_all_agree(const nlohmann::json& report);

// Aligned-column rendering for human consumption.
std::string render_report_table(const nlohmann::json& report);

}  // namespace snarkdom
