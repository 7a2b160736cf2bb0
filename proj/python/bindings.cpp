#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covernum/covers.hpp"
#include "covernum/error.hpp"
#include "covernum/generators.hpp"
#include "covernum/io.hpp"
#include "covernum/recognizers.hpp"
#include "covernum/serialize.hpp"
#include "covernum/solver.hpp"
#include "covernum/verify.hpp"

namespace py = pybind11;
using namespace covernum;

namespace {

Graph graph_of(const std::string& text, const std::optional<std::string>& format) {
  std::optional<GraphFormat> fmt;
  if (format) {
    fmt = format_from_name(*format);
    if (!fmt) throw InvalidArgument("unknown format '" + *format + "'");
  }
  return read_graph(text, fmt);
}

std::string recognize(const Graph& g, const std::string& cls) {
  const ClassSpec spec = ClassSpec::parse(cls);
  Json out;
  out["class"] = spec.to_string();
  const auto witness = in_class(g, spec);
  out["member"] = witness.has_value();
  out["witness"] = witness ? to_json(*witness) : Json(nullptr);
  if (!witness && spec.kind() == ClassSpec::Kind::perfect) {
    if (const auto hole = is_perfect(g).obstruction) out["witness"] = to_json(*hole);
  }
  return out.dump();
}

std::string cover(const Graph& g, const std::string& cls) {
  const ClassSpec spec = ClassSpec::parse(cls);
  CoverCertificate cert;
  switch (spec.kind()) {
    case ClassSpec::Kind::bipartite:
      cert = bipartite_cover(g);
      break;
    case ClassSpec::Kind::chi_le:
      cert = chi_le_k_cover(g, spec.k());
      break;
    case ClassSpec::Kind::chi_le_f:
      cert = chibound_cover(g, spec.f());
      break;
    default:
      throw UnsupportedClass("no constructive cover for class '" + spec.to_string() + "'");
  }
  Json out = to_json(cert);
  out["valid"] = check_certificate(g, cert);
  return out.dump();
}

std::string solve(const Graph& g, const std::string& cls, std::size_t max_edges,
                  std::optional<std::size_t> decision) {
  const ClassSpec spec = ClassSpec::parse(cls);
  SolveBudget budget;
  budget.max_edges = max_edges;
  if (!decision) return to_json(exact_cover_number(g, spec, budget)).dump();
  const auto cert = decide_cover(g, spec, *decision, budget);
  Json out;
  out["class"] = spec.to_string();
  out["k"] = *decision;
  out["present"] = cert.has_value();
  out["certificate"] = cert ? to_json(*cert) : Json(nullptr);
  return out.dump();
}

std::string verify(const std::string& suite, std::size_t n_max, std::size_t samples,
                   std::vector<std::size_t> sample_sizes, std::uint64_t seed) {
  VerifyOptions options;
  options.corpus.exhaustive_max_n = n_max;
  options.corpus.samples = samples;
  options.corpus.sample_sizes = std::move(sample_sizes);
  options.corpus.seed = seed;
  return to_json(run_suite(suite, options)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  const auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<UnsupportedClass>(m, "UnsupportedClass", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> list;
             for (auto [u, v] : edges) list.push_back({u, v});
             return Graph::from_edges(n, list);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("parse", &graph_of, py::arg("text"), py::arg("format") = std::nullopt)
      .def_static("generate", [](const std::string& family) { return generate(family); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("graph6", &emit_graph6)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g).chi; });
  m.def("clique_number", [](const Graph& g) { return clique_number(g).size; });
  m.def("is_member", [](const Graph& g, const std::string& cls) { return is_member(g, ClassSpec::parse(cls)); });
  m.def("_recognize", &recognize);
  m.def("_cover", &cover);
  m.def("_solve", &solve, py::arg("g"), py::arg("cls"), py::arg("max_edges"), py::arg("decision"));
  m.def("_verify", &verify);
  m.def("suite_names", &suite_names);
}
