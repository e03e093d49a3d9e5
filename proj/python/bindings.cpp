#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aeap/cascade.hpp"
#include "aeap/errors.hpp"
#include "aeap/harness.hpp"
#include "aeap/ilp.hpp"
#include "aeap/json_io.hpp"
#include "aeap/network.hpp"
#include "aeap/solvers.hpp"
#include "aeap/vulnerability.hpp"

namespace py = pybind11;

namespace {

aeap::EntitySet entity_set(const std::vector<std::string>& names) {
  aeap::EntitySet out;
  for (const auto& n : names) out.insert(aeap::parse_entity(n));
  return out;
}

py::object to_python(const aeap::Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

py::object to_fraction(const aeap::HitValue& v) {
  return py::module_::import("fractions").attr("Fraction")(v.numerator(), v.denominator());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cascading failures and auxiliary entity allocation in interdependent networks";

  // Translators run newest first, so the subclass is registered last.
  const auto& error = py::register_exception<aeap::Error>(m, "AeapError", PyExc_ValueError);
  py::register_exception<aeap::CapExceededError>(m, "CapExceededError", error.ptr());

  py::class_<aeap::Network>(m, "Network")
      .def_property_readonly("entities",
                             [](const aeap::Network& n) {
                               std::vector<std::string> out;
                               for (const auto& e : n.entities()) out.push_back(aeap::to_string(e));
                               return out;
                             })
      .def_property_readonly("idr_count", &aeap::Network::idr_count)
      .def("target_of", [](const aeap::Network& n, int label) { return aeap::to_string(n.idr(label).target); })
      .def("label_of", [](const aeap::Network& n, const std::string& e) { return n.label_of(aeap::parse_entity(e)); })
      .def("__eq__", [](const aeap::Network& a, const aeap::Network& b) { return a == b; })
      .def("__str__", &aeap::format_network)
      .def("__len__", &aeap::Network::size);

  m.def("parse_network", [](const std::string& text) { return aeap::parse_network(text); }, py::arg("text"));
  m.def("format_network", &aeap::format_network, py::arg("net"));
  m.def(
      "apply_modification",
      [](const aeap::Network& net, int label, const std::string& auxiliary) {
        const auto aux = auxiliary == "ALWAYS-ALIVE" ? aeap::EntityId::always_alive() : aeap::parse_entity(auxiliary);
        return aeap::apply_modification(net, {label, aux});
      },
      py::arg("net"), py::arg("idr_label"), py::arg("auxiliary") = "ALWAYS-ALIVE");

  m.def(
      "simulate_cascade",
      [](const aeap::Network& net, const std::vector<std::string>& initial) {
        return to_python(aeap::to_json(aeap::simulate_cascade(net, entity_set(initial))));
      },
      py::arg("net"), py::arg("initial"));
  m.def(
      "trace_csv",
      [](const aeap::Network& net, const std::vector<std::string>& initial) {
        return aeap::trace_to_csv(aeap::simulate_cascade(net, entity_set(initial)));
      },
      py::arg("net"), py::arg("initial"));

  m.def(
      "k_most_vulnerable",
      [](const aeap::Network& net, int k, const std::string& method, std::uint64_t cap) {
        if (method == "greedy") return to_python(aeap::to_json(aeap::k_most_vulnerable_greedy(net, k)));
        if (method != "exact") throw aeap::ValidationError("unknown method '" + method + "'");
        return to_python(aeap::to_json(aeap::k_most_vulnerable_exact(net, k, cap)));
      },
      py::arg("net"), py::arg("k"), py::arg("method") = "exact", py::arg("cap") = aeap::kDefaultEvaluationCap);

  m.def(
      "solve",
      [](const aeap::Network& net, const std::vector<std::string>& attacked, int s, const std::string& method,
         std::uint64_t cap) {
        const auto att = entity_set(attacked);
        aeap::AllocationSolution sol;
        switch (aeap::parse_solver_method(method)) {
          case aeap::SolverMethod::Exact: sol = aeap::solve_exact(net, att, s, cap); break;
          case aeap::SolverMethod::Heuristic: sol = aeap::solve_heuristic(net, att, s); break;
          case aeap::SolverMethod::Alg1: sol = aeap::solve_alg1_special_case(net, att, s); break;
        }
        return to_python(aeap::to_json(sol, net));
      },
      py::arg("net"), py::arg("attacked"), py::arg("s"), py::arg("method") = "heuristic",
      py::arg("cap") = aeap::kDefaultEvaluationCap);

  m.def(
      "protection_set",
      [](const aeap::Network& net, int label, const std::string& auxiliary, const std::vector<std::string>& attacked) {
        const auto aux = auxiliary == "ALWAYS-ALIVE" ? aeap::EntityId::always_alive() : aeap::parse_entity(auxiliary);
        return aeap::to_strings(aeap::auxiliary_protection_set(net, label, aux, entity_set(attacked)).protected_entities);
      },
      py::arg("net"), py::arg("idr_label"), py::arg("auxiliary"), py::arg("attacked"));
  m.def(
      "afmhv", [](const aeap::Network& net, int label) { return to_fraction(aeap::afmhv(net, label)); },
      py::arg("net"), py::arg("idr_label"));
  m.def(
      "acfmhv",
      [](const aeap::Network& net, int label, const std::vector<std::string>& attacked) {
        return to_fraction(aeap::acfmhv(net, label, entity_set(attacked)));
      },
      py::arg("net"), py::arg("idr_label"), py::arg("attacked"));

  m.def(
      "export_lp",
      [](const aeap::Network& net, const std::vector<std::string>& attacked, int s) {
        const auto model = aeap::build_ilp(net, entity_set(attacked), s);
        return py::make_tuple(aeap::write_lp(model), aeap::write_sidecar(model));
      },
      py::arg("net"), py::arg("attacked"), py::arg("s"));

  m.def(
      "reduce_setcover",
      [](int universe_size, const std::vector<std::vector<int>>& subsets, int x) {
        auto red = aeap::reduce_setcover(universe_size, subsets, x);
        return py::make_tuple(red.network, aeap::to_strings(red.attacked), red.s, red.p_f_target);
      },
      py::arg("universe_size"), py::arg("subsets"), py::arg("x"));

  m.def(
      "gen_network",
      [](int n_a, int n_b, int max_minterms, int max_minterm_size, double idr_probability, std::uint64_t seed) {
        return aeap::gen_network({n_a, n_b, max_minterms, max_minterm_size, idr_probability, seed});
      },
      py::arg("n_a") = 14, py::arg("n_b") = 14, py::arg("max_minterms") = 2, py::arg("max_minterm_size") = 2,
      py::arg("idr_probability") = 0.7, py::arg("seed") = 1);
}
