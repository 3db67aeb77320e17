#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbaf/aggregators.hpp"
#include "qbaf/bench.hpp"
#include "qbaf/engine.hpp"
#include "qbaf/graph.hpp"
#include "qbaf/postulates.hpp"
#include "qbaf/principles.hpp"

namespace py = pybind11;
using namespace qbaf;

PYBIND11_MODULE(pyqbaf, m) {
    m.doc() = "acceptability degrees on weighted bipolar argumentation graphs";

    py::class_<Argument>(m, "Argument")
        .def(py::init([](std::string id, double weight) {
                 return Argument{std::move(id), weight};
             }),
             py::arg("id"), py::arg("weight"))
        .def_readwrite("id", &Argument::id)
        .def_readwrite("weight", &Argument::weight)
        .def("__repr__", [](const Argument& a) {
            return "Argument('" + a.id + "', " + std::to_string(a.weight) + ")";
        });

    py::class_<Edge>(m, "Edge")
        .def(py::init([](std::string from, std::string to, std::optional<int> order) {
                 return Edge{std::move(from), std::move(to), order};
             }),
             py::arg("from_id"), py::arg("to_id"), py::arg("order") = std::nullopt)
        .def_readwrite("from_id", &Edge::from)
        .def_readwrite("to_id", &Edge::to)
        .def_readwrite("order", &Edge::order)
        .def("__repr__", [](const Edge& e) { return "Edge('" + e.from + "', '" + e.to + "')"; });

    py::class_<Qbaf>(m, "Qbaf")
        .def(py::init<std::vector<Argument>, std::vector<Edge>, std::vector<Edge>>(),
             py::arg("arguments"), py::arg("attacks"), py::arg("supports"))
        .def_property_readonly("argument_ids", &Qbaf::arguments)
        .def_property_readonly("attacks", &Qbaf::attacks)
        .def_property_readonly("supports", &Qbaf::supports)
        .def_property_readonly("warnings", &Qbaf::warnings)
        .def("has_argument", &Qbaf::has_argument, py::arg("id"))
        .def("weight", &Qbaf::weight, py::arg("id"))
        .def("attackers", &Qbaf::attackers, py::arg("id"))
        .def("supporters", &Qbaf::supporters, py::arg("id"))
        .def(py::self == py::self)
        .def("__repr__", [](const Qbaf& g) {
            return "Qbaf(" + std::to_string(g.arguments().size()) + " arguments, " +
                   std::to_string(g.attacks().size()) + " attacks, " +
                   std::to_string(g.supports().size()) + " supports)";
        });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("violations", &ValidationReport::violations)
        .def_readonly("warnings", &ValidationReport::warnings)
        .def("ok", &ValidationReport::ok);

    py::class_<ArgumentScores>(m, "ArgumentScores")
        .def_readonly("degree", &ArgumentScores::degree)
        .def_readonly("pi_r", &ArgumentScores::pi_r)
        .def_readonly("pi_s", &ArgumentScores::pi_s)
        .def("__repr__", [](const ArgumentScores& s) {
            return "ArgumentScores(degree=" + std::to_string(s.degree) + ")";
        });

    m.def("parse", &parse_qbaf, py::arg("document"), "parse a graph from its json form");
    m.def("serialize", &serialize_qbaf, py::arg("graph"), "serialize a graph to its json form");
    m.def("validate", &validate, py::arg("graph"));
    m.def("topological_order", &topological_order, py::arg("graph"));

    m.def(
        "evaluate",
        [](const Qbaf& g, const std::string& phi_r, const std::string& phi_s,
           const std::string& phi_f) { return evaluate(g, make_semantics(phi_r, phi_s, phi_f)); },
        py::arg("graph"), py::arg("phi_r"), py::arg("phi_s"), py::arg("phi_f"),
        "evaluate under the three-stage semantics named by its aggregators");
    m.def(
        "evaluate_semantics",
        [](const Qbaf& g, const std::string& name) { return evaluate(g, as_aggregative(name)); },
        py::arg("graph"), py::arg("name"),
        "evaluate under a literature semantics: dfquad, ebs or qe");
    m.def("scores_csv", &scores_csv, py::arg("scores"),
          py::arg("round_decimals") = std::optional<int>{});

    m.def(
        "aggregate",
        [](const std::string& name, const std::vector<double>& values, bool ordered_input) {
            return aggregate(find_aggregator(name), values, ordered_input);
        },
        py::arg("name"), py::arg("values"), py::arg("ordered_input") = false);
    m.def(
        "combine",
        [](const std::string& name, double x, double y, double z) {
            return find_combiner(name).eval(x, y, z);
        },
        py::arg("name"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("aggregator_names", [] {
        std::vector<std::string> names;
        for (const Aggregator& a : catalog()) names.push_back(a.name);
        return names;
    });

    m.def(
        "postulate_matrix_csv",
        [](const std::vector<std::string>& agg_names, unsigned long long seed) {
            PostulateConfig cfg;
            cfg.seed = seed;
            std::vector<Aggregator> aggs;
            if (agg_names.empty())
                aggs = classical_aggregators();
            else
                for (const std::string& n : agg_names) aggs.push_back(find_aggregator(n));
            return postulate_matrix_csv(aggs, cfg);
        },
        py::arg("aggregators") = std::vector<std::string>{}, py::arg("seed") = 1ULL);

    m.def("principle_names", [] {
        std::vector<std::string> names;
        for (Principle p : all_principles()) names.push_back(to_string(p));
        return names;
    });
    m.def(
        "check_principle_json",
        [](const std::string& phi_r, const std::string& phi_s, const std::string& phi_f,
           const std::string& principle, unsigned long long seed, int trials) {
            GeneratorConfig cfg;
            cfg.seed = seed;
            cfg.trials = trials;
            return to_json(check_principle(make_semantics(phi_r, phi_s, phi_f),
                                           principle_from_string(principle), cfg));
        },
        py::arg("phi_r"), py::arg("phi_s"), py::arg("phi_f"), py::arg("principle"),
        py::arg("seed") = 1ULL, py::arg("trials") = 200,
        "sample one principle for one semantics; returns the verdict as json");

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("phi_r", &SweepRow::phi_r)
        .def_readonly("phi_s", &SweepRow::phi_s)
        .def_readonly("phi_f", &SweepRow::phi_f)
        .def_readonly("deg_i", &SweepRow::deg_i)
        .def_readonly("deg_e", &SweepRow::deg_e)
        .def_readonly("pi_r_a", &SweepRow::pi_r_a)
        .def_readonly("pi_s_a", &SweepRow::pi_s_a)
        .def_readonly("deg_a", &SweepRow::deg_a)
        .def("__repr__", [](const SweepRow& r) {
            return "SweepRow(" + r.phi_r + ", " + r.phi_s + ", " + r.phi_f +
                   ", deg_a=" + std::to_string(r.deg_a) + ")";
        });

    py::class_<ExampleCheck>(m, "ExampleCheck")
        .def_readonly("name", &ExampleCheck::name)
        .def_readonly("detail", &ExampleCheck::detail)
        .def_readonly("computed", &ExampleCheck::computed)
        .def_readonly("expected", &ExampleCheck::expected)
        .def_readonly("decimals", &ExampleCheck::decimals)
        .def_readonly("matches", &ExampleCheck::matches)
        .def_readonly("flagged", &ExampleCheck::flagged)
        .def("__repr__", [](const ExampleCheck& c) { return "ExampleCheck(" + c.name + ")"; });

    m.def("reference_graph_names", [] {
        std::vector<std::string> names;
        for (ReferenceGraphId id : reference_graph_ids()) names.push_back(to_string(id));
        return names;
    });
    m.def(
        "reference_graph",
        [](const std::string& name) { return reference_graph(reference_graph_from_string(name)); },
        py::arg("name"), "one of the built-in reference graphs, e.g. fig1 or fig6_final");
    m.def("sweep_fig6", &sweep_fig6,
          "all 515 semantics combinations evaluated on the fig6_final graph");
    m.def("histogram_counts", [] {
        Histogram h = degree_histogram(sweep_fig6());
        return std::vector<int>(h.counts.begin(), h.counts.end());
    });
    m.def("table4_all_pass", [] { return table4_report().all_rows_pass; });
    m.def("table4_csv", [] { return table4_csv(table4_report()); });
    m.def("example_checks", &example_checks);
}
