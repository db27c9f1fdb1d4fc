#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "snarkdom/certificates.hpp"
#include "snarkdom/errors.hpp"
#include "snarkdom/graph.hpp"
#include "snarkdom/lp_export.hpp"
#include "snarkdom/report.hpp"
#include "snarkdom/solvers.hpp"
#include "snarkdom/version.hpp"

namespace {

using namespace snarkdom;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;  // a claim failed verification
constexpr int kExitUsage = 2;     // bad flags or out-of-capacity request

std::vector<std::string> variant_names() {
  std::vector<std::string> names;
  for (Variant v : kAllVariants) names.emplace_back(variant_name(v));
  return names;
}

int cmd_gen(int n, const std::string& format) {
  const auto parsed = parse_export_format(format);
  if (!parsed) throw std::invalid_argument("unknown export format: " + format);
  std::cout << export_graph(build_flower_snark(n), *parsed);
  return kExitOk;
}

int cmd_solve(int n, Variant variant, const SolveOptions& opts) {
  const FlowerSnark g = build_flower_snark(n);
  const SolveResult result = solve(g, variant, opts);

  const int witness_size = std::holds_alternative<VertexSet>(result.witness)
                               ? std::get<VertexSet>(result.witness).count()
                               : std::get<GuardFunction>(result.witness).weight();
  if (!validate(g, variant, result.witness) || witness_size != result.optimum) {
    std::cerr << "self-check failed: witness does not validate at the reported optimum\n";
    return kExitMismatch;
  }
  std::cout << solve_result_to_json(result).dump() << '\n';
  return kExitOk;
}

int cmd_certify(int n, Variant variant, bool pretty) {
  const FlowerSnark g = build_flower_snark(n);
  if (!has_certificate(variant, n))
    throw CapacityError("no constructive certificate for " + std::string(variant_name(variant)) +
                        " at n = " + std::to_string(n) + "; use the exact solver");
  nlohmann::json j = certificate_json(variant, n);
  const int formula = formula_value(variant, n);
  const bool valid = validate(g, variant, certificate(variant, n));
  j["formula"] = formula;
  j["valid"] = valid;
  if (pretty) {
    std::cout << variant_name(variant) << " certificate for n = " << n << " (size "
              << j["size"].get<int>() << ", formula " << formula << ", "
              << (valid ? "valid" : "INVALID") << ")\n";
    const auto& copies = j["copies"];
    for (int i = 0; i < n; ++i) {
      std::cout << " J^" << i + 1 << ":";
      for (const auto& letter : copies[i]) std::cout << ' ' << letter.get<std::string>();
      std::cout << '\n';
    }
  } else {
    std::cout << j.dump() << '\n';
  }
  return valid && j["size"].get<int>() == formula ? kExitOk : kExitMismatch;
}

int cmd_formulas(int n_max, bool with_solver, bool pretty, const SolveOptions& opts) {
  const nlohmann::json report = build_verification_report(n_max, with_solver, opts);
  if (pretty)
    std::cout << render_report_table(report);
  else
    std::cout << report.dump() << '\n';
  return report_all_agree(report) ? kExitOk : kExitMismatch;
}

int cmd_export_lp(int n, Variant variant, const std::string& out_path) {
  const FlowerSnark g = build_flower_snark(n);
  const std::string text = export_lp(g, variant);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
  }
  return kExitOk;
}

int cmd_patterns(int n, Variant variant, int size, std::uint64_t limit, const SolveOptions& opts) {
  const FlowerSnark g = build_flower_snark(n);
  nlohmann::json rows = nlohmann::json::array();
  for (const VertexSet& s : enumerate_valid_sets(g, variant, size, limit, opts)) {
    nlohmann::json row;
    auto& labels = row["set"] = nlohmann::json::array();
    s.for_each([&](int v) { labels.push_back(vertex_label(v)); });
    row["copy_weights"] = copy_weights(g, s);
    row["histogram"] = weight_histogram(g, s);
    rows.push_back(std::move(row));
  }
  std::cout << rows.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snarkdom: exact domination-variant toolkit for flower snarks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const auto names = variant_names();
  int n = 3, n_max = 3, size = 0;
  std::uint64_t limit = 0;
  std::string format = "dimacs", variant_str, out_path;
  bool with_solver = false, pretty = false;
  SolveOptions opts;

  auto* gen = app.add_subcommand("gen", "print a flower snark in a text format");
  gen->add_option("--n", n, "number of star copies (>= 3)")->required()->check(CLI::Range(3, 1 << 20));
  gen->add_option("--format", format, "dimacs, json or adjlist")
      ->check(CLI::IsMember({"dimacs", "json", "adjlist"}));

  auto* solve_cmd = app.add_subcommand("solve", "exact optimum with an optimality proof");
  solve_cmd->add_option("--n", n, "number of star copies (>= 3)")
      ->required()
      ->check(CLI::Range(3, 1 << 20));
  solve_cmd->add_option("--variant", variant_str, "domination variant")
      ->required()
      ->check(CLI::IsMember(names));
  solve_cmd->add_flag("--deterministic", opts.deterministic,
                      "bit-stable output for any worker count");
  solve_cmd->add_flag("--long-running", opts.long_running, "widen feasibility ranges to n <= 8");
  solve_cmd->add_flag("!--no-copy-prefilter", opts.copy_prefilter,
                      "disable the one-per-copy prefilter (full brute force, n = 3 only)");

  auto* certify = app.add_subcommand("certify", "build a certificate and check it");
  certify->add_option("--n", n, "number of star copies (>= 3)")
      ->required()
      ->check(CLI::Range(3, 1 << 20));
  certify->add_option("--variant", variant_str, "domination variant")
      ->required()
      ->check(CLI::IsMember(names));

  auto* formulas = app.add_subcommand("formulas", "verification report over n = 3..n_max");
  formulas->add_option("--n-max", n_max, "largest n (>= 3)")
      ->required()
      ->check(CLI::Range(3, 1 << 20));
  formulas->add_flag("--with-solver", with_solver, "cross-check with the exact solver in range");
  formulas->add_flag("--pretty", pretty, "aligned table instead of JSON");

  auto* export_lp_cmd = app.add_subcommand("export-lp", "write a CPLEX-LP covering formulation");
  export_lp_cmd->add_option("--n", n, "number of star copies (>= 3)")
      ->required()
      ->check(CLI::Range(3, 1 << 20));
  export_lp_cmd->add_option("--variant", variant_str, "covering-style variant")
      ->required()
      ->check(CLI::IsMember(names));
  export_lp_cmd->add_option("--out", out_path, "output path (default: stdout)");

  auto* patterns = app.add_subcommand("patterns", "valid sets of a size with copy weights");
  patterns->add_option("--n", n, "number of star copies (>= 3)")
      ->required()
      ->check(CLI::Range(3, 1 << 20));
  patterns->add_option("--variant", variant_str, "set variant")
      ->required()
      ->check(CLI::IsMember(names));
  patterns->add_option("--size", size, "candidate cardinality")->required();
  patterns->add_option("--limit", limit, "emit at most this many sets (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    const auto variant = [&] {
      const auto v = parse_variant(variant_str);
      if (!v) throw std::invalid_argument("unknown variant: " + variant_str);
      return *v;
    };
    if (gen->parsed()) return cmd_gen(n, format);
    if (solve_cmd->parsed()) return cmd_solve(n, variant(), opts);
    if (certify->parsed()) return cmd_certify(n, variant());
    if (formulas->parsed()) return cmd_formulas(n_max, with_solver, pretty, opts);
    if (export_lp_cmd->parsed()) return cmd_export_lp(n, variant(), out_path);
    if (patterns->parsed()) return cmd_patterns(n, variant(), size, limit, opts);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
