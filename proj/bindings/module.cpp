#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "megset/approx.hpp"
#include "megset/generators.hpp"
#include "megset/interval.hpp"
#include "megset/io.hpp"
#include "megset/monitor.hpp"
#include "megset/reductions.hpp"

namespace py = pybind11;

namespace {

py::object witness_list(const meg::WitnessMap& w) {
  py::list out;
  for (const auto& entry : w.by_edge) {
    if (entry)
      out.append(py::make_tuple(entry->first, entry->second));
    else
      out.append(py::none());
  }
  return out;
}

void check_vertex(const meg::Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw meg::invalid_input("vertex id out of range: " + std::to_string(v));
}

meg::MonitorMethod method_from_name(const std::string& name) {
  if (name == "bridge") return meg::MonitorMethod::bridge;
  if (name == "removal") return meg::MonitorMethod::removal;
  throw meg::invalid_input("unknown monitor method: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "minimum monitoring edge-geodetic sets";
  m.attr("__version__") = "0.1.0";

  auto& base = py::register_exception<meg::error>(m, "Error");
  py::register_exception<meg::parse_error>(m, "ParseError", base.ptr());
  py::register_exception<meg::invalid_input>(m, "InvalidInput", base.ptr());
  py::register_exception<meg::guard_error>(m, "GuardError", base.ptr());

  py::class_<meg::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return meg::Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def("vertex_count", &meg::Graph::vertex_count)
      .def("edge_count", &meg::Graph::edge_count)
      .def("edges", [](const meg::Graph& g) { return g.edges(); })
      .def(
          "edge",
          [](const meg::Graph& g, int e) {
            if (e < 0 || e >= g.edge_count())
              throw meg::invalid_input("edge id out of range: " + std::to_string(e));
            return g.edge(e);
          },
          py::arg("e"))
      .def(
          "neighbors",
          [](const meg::Graph& g, int v) {
            check_vertex(g, v);
            std::vector<int> out;
            for (const auto& nb : g.neighbors(v)) out.push_back(nb.vertex);
            return out;
          },
          py::arg("v"))
      .def(
          "degree",
          [](const meg::Graph& g, int v) {
            check_vertex(g, v);
            return g.degree(v);
          },
          py::arg("v"))
      .def(
          "edge_id",
          [](const meg::Graph& g, int u, int v) {
            check_vertex(g, u);
            check_vertex(g, v);
            return g.edge_id(u, v);
          },
          py::arg("u"), py::arg("v"))
      .def(
          "adjacent",
          [](const meg::Graph& g, int u, int v) {
            check_vertex(g, u);
            check_vertex(g, v);
            return g.adjacent(u, v);
          },
          py::arg("u"), py::arg("v"))
      .def("__repr__", [](const meg::Graph& g) {
        return "<megset.Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<meg::MEGResult>(m, "MEGResult")
      .def_readonly("meg", &meg::MEGResult::meg)
      .def_readonly("size", &meg::MEGResult::size)
      .def_readonly("optimal", &meg::MEGResult::optimal)
      .def_property_readonly("method",
                             [](const meg::MEGResult& r) {
                               return std::string(meg::solve_method_name(r.method));
                             })
      .def_property_readonly(
          "witnesses", [](const meg::MEGResult& r) { return witness_list(r.witnesses); })
      .def("__repr__", [](const meg::MEGResult& r) {
        return "<megset.MEGResult size=" + std::to_string(r.size) +
               " method=" + meg::solve_method_name(r.method) + ">";
      });

  py::class_<meg::MegCheck>(m, "MegCheck")
      .def_readonly("ok", &meg::MegCheck::ok)
      .def_property_readonly(
          "witnesses", [](const meg::MegCheck& c) { return witness_list(c.witnesses); })
      .def("__bool__", [](const meg::MegCheck& c) { return c.ok; });

  py::class_<meg::IntervalModel>(m, "IntervalModel")
      .def(py::init([](std::vector<std::pair<long long, long long>> intervals) {
             meg::IntervalModel model;
             model.intervals = std::move(intervals);
             return model;
           }),
           py::arg("intervals"))
      .def_readonly("intervals", &meg::IntervalModel::intervals)
      .def("__len__", &meg::IntervalModel::size);

  py::class_<meg::GadgetMap>(m, "GadgetMap")
      .def_readonly("ghat", &meg::GadgetMap::ghat)
      .def_property_readonly("roles",
                             [](const meg::GadgetMap& g) {
                               std::vector<std::string> out;
                               out.reserve(g.roles.size());
                               for (meg::GadgetRole r : g.roles)
                                 out.emplace_back(meg::role_name(r));
                               return out;
                             })
      .def_readonly("back_map", &meg::GadgetMap::back_map);

  // Graph basics.
  m.def("is_connected", &meg::is_connected, py::arg("g"));
  m.def(
      "bfs_distances",
      [](const meg::Graph& g, int source) {
        check_vertex(g, source);
        return meg::bfs_distances(g, source).dist;
      },
      py::arg("g"), py::arg("source"),
      "Distances from the source; -1 marks unreachable vertices.");
  m.def(
      "shortest_path_edge_union",
      [](const meg::Graph& g, int u, int v) {
        return meg::shortest_path_edge_union(g, u, v).to_vector();
      },
      py::arg("g"), py::arg("u"), py::arg("v"),
      "Edge ids lying on at least one shortest u-v path.");
  m.def("degeneracy", &meg::degeneracy, py::arg("g"));

  // Monitoring and solvers.
  m.def(
      "monitored_edges",
      [](const meg::Graph& g, int u, int v, const std::string& method) {
        return meg::monitored_edges(g, u, v, method_from_name(method)).to_vector();
      },
      py::arg("g"), py::arg("u"), py::arg("v"), py::arg("method") = "bridge",
      "Edge ids monitored by the pair (u, v); method is 'bridge' or 'removal'.");
  m.def("is_meg_set", &meg::is_meg_set, py::arg("g"), py::arg("set"));
  m.def("mandatory_vertices", &meg::mandatory_vertices, py::arg("g"));
  m.def("mandatory_oracle", &meg::mandatory_oracle, py::arg("g"));
  m.def(
      "min_meg_exact",
      [](const meg::Graph& g, int max_vertices) {
        return meg::min_meg_exact(g, max_vertices);
      },
      py::arg("g"), py::arg("max_vertices") = meg::kExactSolveGuard);
  m.def("meg_decision", &meg::meg_decision, py::arg("g"), py::arg("budget"));
  m.def(
      "enumerate_min_meg",
      [](const meg::Graph& g, int max_vertices) {
        return meg::enumerate_min_meg(g, max_vertices);
      },
      py::arg("g"), py::arg("max_vertices") = meg::kEnumerateGuard);

  // Interval graphs.
  m.def("graph_of_model", &meg::graph_of_model, py::arg("model"));
  m.def("set_diameter", &meg::set_diameter, py::arg("g"), py::arg("set"));
  m.def("is_mandatory_interval", &meg::is_mandatory_interval, py::arg("g"),
        py::arg("v"));
  m.def(
      "interval_min_meg", [](const meg::Graph& g) { return meg::interval_min_meg(g); },
      py::arg("g"));
  m.def(
      "interval_min_meg",
      [](const meg::Graph& g, const meg::IntervalModel& model) {
        return meg::interval_min_meg(g, model);
      },
      py::arg("g"), py::arg("model"));

  // Greedy approximation.
  m.def("approx_meg", &meg::approx_meg, py::arg("g"));
  m.def(
      "greedy_cover_pairs",
      [](const meg::Graph& g) {
        return meg::greedy_set_cover(meg::build_cover_instance(g)).chosen;
      },
      py::arg("g"), "The greedy cover's chosen pairs, in pick order.");
  m.def("greedy_ratio_alpha", &meg::greedy_ratio_alpha, py::arg("m"));
  m.def("approx_ratio_bound", &meg::approx_ratio_bound, py::arg("n"), py::arg("m"),
        py::arg("opt"));
  m.def("certified_factor", &meg::certified_factor, py::arg("n"), py::arg("m"));

  // Reductions.
  m.def("vc_gadget", &meg::vc_gadget, py::arg("g"));
  m.def("min_vertex_cover_exact", &meg::min_vertex_cover_exact, py::arg("g"),
        py::arg("max_vertices") = 20);
  m.def("vc_from_meg", &meg::vc_from_meg, py::arg("map"), py::arg("set"));
  m.def("cubic_vc_lower_bound", &meg::cubic_vc_lower_bound, py::arg("g"));

  // Generators and text formats.
  m.def(
      "generate",
      [](const std::string& family, std::vector<int> params, std::uint64_t seed) {
        meg::GenSpec spec;
        spec.family = meg::family_from_name(family);
        spec.params = std::move(params);
        spec.seed = seed;
        return meg::generate(spec);
      },
      py::arg("family"), py::arg("params"), py::arg("seed") = 0);
  m.def("random_interval_model", &meg::random_interval_model, py::arg("n"),
        py::arg("span"), py::arg("seed"));
  m.def("read_edge_list_file", &meg::read_edge_list_file, py::arg("path"));
  m.def(
      "parse_edge_list",
      [](const std::string& text) {
        std::istringstream in(text);
        return meg::read_edge_list(in);
      },
      py::arg("text"));
  m.def("edge_list_string", &meg::edge_list_string, py::arg("g"));
  m.def("read_interval_model_file", &meg::read_interval_model_file, py::arg("path"));
  m.def("interval_model_string", &meg::interval_model_string, py::arg("model"));
}
