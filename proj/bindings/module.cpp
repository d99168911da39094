#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kclique/count.hpp"
#include "kclique/generate.hpp"
#include "kclique/ingest.hpp"
#include "kclique/metrics.hpp"
#include "kclique/oracle.hpp"
#include "kclique/ordering.hpp"

namespace py = pybind11;
using namespace kclique;

namespace {

OrderingKind parse_ordering(const std::string& s) {
  if (s == "core") return OrderingKind::Core;
  if (s == "degree") return OrderingKind::Degree;
  throw std::invalid_argument("ordering must be 'core' or 'degree', got '" + s + "'");
}

Strategy parse_strategy(const std::string& s) {
  if (s == "baseline") return Strategy::Baseline;
  if (s == "citron") return Strategy::Citron;
  throw std::invalid_argument("strategy must be 'baseline' or 'citron', got '" + s + "'");
}

PruneMode parse_prune(const std::string& s) {
  if (s == "on") return PruneMode::On;
  if (s == "off") return PruneMode::Off;
  if (s == "paper") return PruneMode::Paper;
  throw std::invalid_argument("prune must be 'on', 'off', or 'paper', got '" + s + "'");
}

py::dict result_to_dict(const CountResult& r) {
  py::dict d;
  d["cliques"] = r.cliques;
  d["ordering_seconds"] = r.stats.ordering_seconds;
  d["counting_seconds"] = r.stats.counting_seconds;
  d["total_seconds"] = r.stats.total_seconds;
  d["max_out_degree"] = r.stats.max_out_degree;
  d["work_model"] = r.stats.work_model;
  d["array_accesses"] = r.stats.array_accesses;
  d["max_subgraph_bytes"] = r.stats.max_subgraph_bytes;
  d["per_worker_iterations"] = r.stats.per_worker_iterations;
  d["load_imbalance"] = load_imbalance(r.stats);
  return d;
}

CountConfig make_config(int k, const std::string& ordering, const std::string& strategy,
                        int workers, const std::string& schedule, const std::string& prune,
                        bool instrument) {
  CountConfig cfg;
  cfg.k = k;
  cfg.ordering = parse_ordering(ordering);
  cfg.strategy = parse_strategy(strategy);
  cfg.workers = workers;
  if (!parse_schedule(schedule, cfg.schedule))
    throw std::invalid_argument("schedule must be 'static', 'cyclic', or 'dynamic[:N]', got '" +
                                schedule + "'");
  cfg.prune = parse_prune(prune);
  cfg.instrument = instrument;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact k-clique counting over degree- or core-ordered DAGs";

  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "CacheFormatError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "CountOverflowError", PyExc_OverflowError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_ValueError);

  py::class_<UndirectedGraph>(m, "Graph")
      .def_property_readonly("num_vertices", &UndirectedGraph::num_vertices)
      .def_property_readonly("num_edges", &UndirectedGraph::num_edges)
      .def("degree", &UndirectedGraph::degree, py::arg("u"))
      .def(
          "neighbors",
          [](const UndirectedGraph& g, VertexId u) {
            auto s = g.neighbors(u);
            return std::vector<VertexId>(s.begin(), s.end());
          },
          py::arg("u"))
      .def("__eq__", [](const UndirectedGraph& a, const UndirectedGraph& b) { return a == b; })
      .def("__repr__", [](const UndirectedGraph& g) {
        return "Graph(vertices=" + std::to_string(g.num_vertices()) +
               ", edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def(
      "from_edges",
      [](const std::vector<std::pair<uint64_t, uint64_t>>& pairs) {
        EdgeList e;
        e.pairs = pairs;
        return build_undirected(e);
      },
      py::arg("pairs"),
      "Build a graph from (u, v) pairs; ids are densified, self-loops and duplicates dropped");

  m.def("load_graph", [](const std::string& path) { return load_graph_file(path); },
        py::arg("path"), "Load a text edge list or a .csrbin cache");
  m.def("save_cache", [](const UndirectedGraph& g, const std::string& path) { save_csr(g, path); },
        py::arg("graph"), py::arg("path"));

  m.def("er_graph", &er_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("powerlaw_graph", &powerlaw_graph, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("complete_graph", &complete_graph, py::arg("n"));

  m.def(
      "validate",
      [](const UndirectedGraph& g) {
        std::vector<std::string> out;
        for (const Violation& v : validate(g)) out.push_back(v.invariant + ": " + v.detail);
        return out;
      },
      py::arg("graph"), "Structural invariant violations (empty when the graph is well formed)");

  m.def(
      "count_cliques",
      [](const UndirectedGraph& g, int k, const std::string& ordering, const std::string& strategy,
         int workers, const std::string& schedule, const std::string& prune, bool instrument) {
        CountConfig cfg = make_config(k, ordering, strategy, workers, schedule, prune, instrument);
        CountResult r;
        {
          py::gil_scoped_release release;
          r = count_cliques(g, cfg);
        }
        return result_to_dict(r);
      },
      py::arg("graph"), py::arg("k"), py::arg("ordering") = "core",
      py::arg("strategy") = "citron", py::arg("workers") = 1,
      py::arg("schedule") = "dynamic:64", py::arg("prune") = "on",
      py::arg("instrument") = false,
      "Exact k-clique count plus run statistics as a dict");

  m.def("brute_force_count", &brute_force_count, py::arg("graph"), py::arg("k"),
        "Reference counter for small graphs (guarded against oversized inputs)");

  m.def(
      "work_model",
      [](const UndirectedGraph& g, const std::string& ordering) {
        return work_model(directionalize(g, parse_ordering(ordering)));
      },
      py::arg("graph"), py::arg("ordering") = "core",
      "Traversal work estimate of the oriented graph");

  m.def(
      "max_out_degree",
      [](const UndirectedGraph& g, const std::string& ordering) {
        return max_out_degree(directionalize(g, parse_ordering(ordering)));
      },
      py::arg("graph"), py::arg("ordering") = "core",
      "Maximum out-degree after orienting along the given ordering");
}
