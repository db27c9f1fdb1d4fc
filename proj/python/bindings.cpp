#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "snarkdom/certificates.hpp"
#include "snarkdom/graph.hpp"
#include "snarkdom/lp_export.hpp"
#include "snarkdom/report.hpp"
#include "snarkdom/solvers.hpp"
#include "snarkdom/version.hpp"

namespace py = pybind11;
using namespace snarkdom;

namespace {

Variant variant_from_str(const std::string& name) {
  const auto v = parse_variant(name);
  if (!v) throw std::invalid_argument("unknown variant: " + name);
  return *v;
}

SolveOptions make_options(bool deterministic, bool long_running, bool copy_prefilter,
                          int threads) {
  SolveOptions opts;
  opts.deterministic = deterministic;
  opts.long_running = long_running;
  opts.copy_prefilter = copy_prefilter;
  opts.threads = threads;
  return opts;
}

py::object candidate_to_py(Candidate cand) {
  if (auto* s = std::get_if<VertexSet>(&cand)) return py::cast(std::move(*s));
  return py::cast(std::move(std::get<GuardFunction>(cand)));
}

Candidate candidate_from_py(const py::object& obj) {
  if (py::isinstance<VertexSet>(obj)) return obj.cast<VertexSet>();
  if (py::isinstance<GuardFunction>(obj)) return obj.cast<GuardFunction>();
  throw std::invalid_argument("candidate must be a VertexSet or a GuardFunction");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact domination-variant toolkit for flower snarks";
  m.attr("__version__") = kVersion;

  py::register_exception<CapacityError>(m, "CapacityError");

  py::class_<VertexSet>(m, "VertexSet")
      .def(py::init<int>(), py::arg("universe_size"))
      .def("add", &VertexSet::set, py::arg("v"))
      .def("discard", &VertexSet::reset, py::arg("v"))
      .def("__contains__", &VertexSet::test)
      .def("__len__", &VertexSet::count)
      .def("__eq__", [](const VertexSet& a, const VertexSet& b) { return a == b; })
      .def("to_list", &VertexSet::to_vector)
      .def("labels",
           [](const VertexSet& s) {
             std::vector<std::string> out;
             s.for_each([&](int v) { out.push_back(vertex_label(v)); });
             return out;
           })
      .def("__repr__", [](const VertexSet& s) {
        std::string out = "VertexSet{";
        bool first = true;
        s.for_each([&](int v) {
          if (!first) out += ", ";
          out += vertex_label(v);
          first = false;
        });
        return out + "}";
      });

  py::class_<GuardFunction>(m, "GuardFunction")
      .def(py::init<int>(), py::arg("num_vertices"))
      .def_static("indicator", &GuardFunction::indicator, py::arg("s"))
      .def("__len__", &GuardFunction::size)
      .def("__getitem__", &GuardFunction::at)
      .def("__setitem__", &GuardFunction::set)
      .def("__eq__", [](const GuardFunction& a, const GuardFunction& b) { return a == b; })
      .def_property_readonly("weight", &GuardFunction::weight)
      .def("positive_set", &GuardFunction::positive_set);

  py::class_<FlowerSnark>(m, "FlowerSnark")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &FlowerSnark::n)
      .def_property_readonly("num_vertices", &FlowerSnark::num_vertices)
      .def_property_readonly("num_edges", &FlowerSnark::num_edges)
      .def("neighbors",
           [](const FlowerSnark& g, int v) {
             const auto& nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           })
      .def("edges", &FlowerSnark::edges)
      .def("girth", [](const FlowerSnark& g) { return girth(g); })
      .def("chromatic_index", [](const FlowerSnark& g) { return chromatic_index(g); })
      .def("export_text", [](const FlowerSnark& g, const std::string& format) {
        const auto parsed = parse_export_format(format);
        if (!parsed) throw std::invalid_argument("unknown export format: " + format);
        return export_graph(g, *parsed);
      });

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("variant",
                             [](const SolveResult& r) { return std::string(variant_name(r.variant)); })
      .def_readonly("n", &SolveResult::n)
      .def_readonly("optimum", &SolveResult::optimum)
      .def_readonly("proof_bound", &SolveResult::proof_bound)
      .def_readonly("candidates_examined", &SolveResult::candidates_examined)
      .def_property_readonly("elapsed_ms", [](const SolveResult& r) { return r.elapsed.count(); })
      .def_property_readonly("witness", [](const SolveResult& r) { return candidate_to_py(r.witness); })
      .def("to_json", [](const SolveResult& r) { return solve_result_to_json(r).dump(); });

  m.def("build_flower_snark", &build_flower_snark, py::arg("n"));
  m.def("vertex_label", &vertex_label, py::arg("v"));
  m.def("vertex_id", [](int copy, const std::string& role) {
    if (role.size() != 1) throw std::invalid_argument("role must be one letter of abcd");
    const auto r = parse_role(role[0]);
    if (!r) throw std::invalid_argument("role must be one letter of abcd");
    return vertex_id(copy, *r);
  });

  m.def("copy_weights", [](const FlowerSnark& g, const VertexSet& s) { return copy_weights(g, s); });
  m.def("weight_histogram", [](const FlowerSnark& g, const VertexSet& s) {
    const auto h = weight_histogram(g, s);
    return std::vector<int>(h.begin(), h.end());
  });
  m.def("is_connected_induced", &is_connected_induced);

  m.def("is_dominating", &is_dominating);
  m.def("is_independent_dominating", &is_independent_dominating);
  m.def("is_2_dominating", &is_2_dominating);
  m.def("is_total_dominating", &is_total_dominating);
  m.def("is_connected_dominating", &is_connected_dominating);
  m.def("is_minimal_dominating", &is_minimal_dominating);
  m.def("is_secure_dominating", &is_secure_dominating);
  m.def("is_roman_function", &is_roman_function);
  m.def("is_weak_roman_function", &is_weak_roman_function);
  m.def("undefended_set", &undefended_set);

  m.def("validate", [](const FlowerSnark& g, const std::string& variant, const py::object& cand) {
    return validate(g, variant_from_str(variant), candidate_from_py(cand));
  });

  m.def(
      "has_cyclic_pattern",
      [](const std::vector<int>& weights, const std::string& pattern) {
        return has_cyclic_pattern(weights, pattern);
      },
      py::arg("weights"), py::arg("pattern"));

  m.def("formula_value",
        [](const std::string& variant, int n) { return formula_value(variant_from_str(variant), n); });
  m.def("certificate", [](const std::string& variant, int n) {
    return candidate_to_py(certificate(variant_from_str(variant), n));
  });
  m.def("certificate_json",
        [](const std::string& variant, int n) { return certificate_json(variant_from_str(variant), n).dump(); });

  m.def(
      "solve",
      [](const FlowerSnark& g, const std::string& variant, bool deterministic, bool long_running,
         bool copy_prefilter, int threads) {
        return solve(g, variant_from_str(variant),
                     make_options(deterministic, long_running, copy_prefilter, threads));
      },
      py::arg("g"), py::arg("variant"), py::arg("deterministic") = false,
      py::arg("long_running") = false, py::arg("copy_prefilter") = true, py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "enumerate_valid_sets",
      [](const FlowerSnark& g, const std::string& variant, int size, std::uint64_t limit) {
        return enumerate_valid_sets(g, variant_from_str(variant), size, limit);
      },
      py::arg("g"), py::arg("variant"), py::arg("size"), py::arg("limit") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def("export_lp", [](const FlowerSnark& g, const std::string& variant) {
    return export_lp(g, variant_from_str(variant));
  });

  m.def(
      "verification_report_json",
      [](int n_max, bool with_solver) {
        return build_verification_report(n_max, with_solver).dump();
      },
      py::arg("n_max"), py::arg("with_solver") = false,
      py::call_guard<py::gil_scoped_release>());
}
