#include "snarkdom/report.hpp"

#include <chrono>
#include <optional>
#include <sstream>
#include <string>

#include "snarkdom/certificates.hpp"
#include "snarkdom/version.hpp"

namespace snarkdom {

nlohmann::json witness_to_json(const Candidate& candidate) {
  nlohmann::json j;
  if (const auto* s = std::get_if<VertexSet>(&candidate)) {
    j["kind"] = "set";
    auto& vertices = j["vertices"] = nlohmann::json::array();
    s->for_each([&](int v) { vertices.push_back(vertex_label(v)); });
  } else {
    const auto& f = std::get<GuardFunction>(candidate);
    j["kind"] = "guard_function";
    auto& guards = j["guards"] = nlohmann::json::array();
    for (int v = 0; v < f.size(); ++v)
      if (f.at(v) > 0) guards.push_back({vertex_label(v), f.at(v)});
  }
  return j;
}

nlohmann::json solve_result_to_json(const SolveResult& result) {
  return nlohmann::json{
      {"variant", std::string(variant_name(result.variant))},
      {"n", result.n},
      {"optimum", result.optimum},
      {"witness", witness_to_json(result.witness)},
      {"proof_bound", result.proof_bound},
      {"candidates_examined", result.candidates_examined},
      {"elapsed_ms", result.deterministic ? 0 : result.elapsed.count()},
  };
}

namespace {

struct RowSpec {
  std::string name;
  std::optional<Variant> variant;  // empty for the recorded-only entries
  int formula = 0;
};

std::vector<RowSpec> row_specs(int n) {
  std::vector<RowSpec> rows;
  for (Variant v : kAllVariants)
    rows.push_back({std::string(variant_name(v)), v, formula_value(v, n)});
  rows.push_back({"weakly_convex", std::nullopt, weakly_convex_formula(n)});
  rows.push_back({"convex", std::nullopt, convex_formula(n)});
  return rows;
}

}  // namespace

nlohmann::json build_verification_report(int n_max, bool with_solver, const SolveOptions& opts) {
  if (n_max < 3) throw std::domain_error("verification report requires n_max >= 3");
  const auto t0 = std::chrono::steady_clock::now();

  nlohmann::json rows = nlohmann::json::array();
  for (int n = 3; n <= n_max; ++n) {
    const FlowerSnark g = build_flower_snark(n);
    for (const RowSpec& spec : row_specs(n)) {
      nlohmann::json row;
      row["variant"] = spec.name;
      row["n"] = n;
      row["formula"] = spec.formula;

      bool agree = true;
      if (spec.variant && has_certificate(*spec.variant, n)) {
        const Candidate cand = certificate(*spec.variant, n);
        const int size = std::holds_alternative<VertexSet>(cand)
                             ? std::get<VertexSet>(cand).count()
                             : std::get<GuardFunction>(cand).weight();
        const bool valid = validate(g, *spec.variant, cand);
        row["certificate_size"] = size;
        row["certificate_valid"] = valid;
        agree = agree && valid && size == spec.formula;
      } else {
        row["certificate_size"] = nullptr;
        row["certificate_valid"] = nullptr;
      }

      if (!spec.variant) {
        row["solver_value"] = nullptr;
        row["solver_skipped_reason"] = "no validator in scope";
      } else if (!with_solver) {
        row["solver_value"] = nullptr;
        row["solver_skipped_reason"] = "not requested";
      } else if (n > solver_max_n(*spec.variant, false)) {
        row["solver_value"] = nullptr;
        row["solver_skipped_reason"] = "out of range";
      } else {
        const SolveResult res = solve(g, *spec.variant, opts);
        row["solver_value"] = res.optimum;
        row["solver_skipped_reason"] = nullptr;
        agree = agree && res.optimum == spec.formula;
      }

      row["agree"] = agree;
      rows.push_back(std::move(row));
    }
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return nlohmann::json{
      {"version", kVersion}, {"rows", rows}, {"elapsed_ms", elapsed.count()}};
}

bool report_all_agree(const nlohmann::json& report) {
  for (const auto& row : report.at("rows"))
    if (!row.at("agree").get<bool>()) return false;
  return true;
}

std::string render_report_table(const nlohmann::json& report) {
  std::ostringstream out;
  const auto cell = [](const nlohmann::json& v) -> std::string {
    if (v.is_null()) return "-";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
  };
  out << "  n  variant          formula  cert  cert_valid  solver  agree\n";
  for (const auto& row : report.at("rows")) {
    char line[128];
    std::snprintf(line, sizeof(line), "%3d  %-15s  %7s  %4s  %10s  %6s  %5s\n",
                  row.at("n").get<int>(), row.at("variant").get<std::string>().c_str(),
                  cell(row.at("formula")).c_str(), cell(row.at("certificate_size")).c_str(),
                  cell(row.at("certificate_valid")).c_str(), cell(row.at("solver_value")).c_str(),
                  cell(row.at("agree")).c_str());
    out << line;
  }
  return out.str();
}

}  // namespace snarkdom
