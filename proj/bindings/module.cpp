#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "chromakac/chromatic.hpp"
#include "chromakac/errors.hpp"
#include "chromakac/graph.hpp"
#include "chromakac/json_io.hpp"
#include "chromakac/multiplicity.hpp"
#include "chromakac/report.hpp"

namespace py = pybind11;
using namespace chromakac;

namespace {

// Arbitrary-precision values cross into Python losslessly as ints.
py::int_ to_py_int(const mpz_class& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py_coeffs(const Polynomial& p) {
  py::list out;
  for (const mpz_class& c : p.coeffs()) out.append(to_py_int(c));
  return out;
}

VertexSet set_from_list(const Graph& g, const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    s = s.with(v);
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chromatic polynomials through the bond lattice and Kac-Moody root "
            "multiplicities, cross-checked with exact arithmetic";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<size_limit_error>(m, "SizeLimitError", PyExc_RuntimeError);

  py::class_<Limits>(m, "Limits")
      .def(py::init<>())
      .def_readwrite("max_vertices", &Limits::max_vertices)
      .def_readwrite("max_lattice_elements", &Limits::max_lattice_elements)
      .def_readwrite("max_coloring_colors", &Limits::max_coloring_colors)
      .def_readwrite("max_coloring_vertices", &Limits::max_coloring_vertices)
      .def_readwrite("max_orientation_edges", &Limits::max_orientation_edges);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("vertex_count"),
           py::arg("edges"))
      .def_static(
          "parse",
          [](const std::string& text, const Limits& limits) {
            return Graph::parse(text, limits);
          },
          py::arg("text"), py::arg("limits") = Limits())
      .def_static(
          "generate",
          [](const std::string& family, int n, std::optional<std::uint64_t> seed,
             std::optional<double> p, const Limits& limits) {
            return Graph::generate(parse_family(family), n, seed, p, limits);
          },
          py::arg("family"), py::arg("n"), py::arg("seed") = std::nullopt,
          py::arg("p") = std::nullopt, py::arg("limits") = Limits())
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edges",
                             [](const Graph& g) { return g.edges(); })
      .def(
          "edge_count",
          [](const Graph& g, std::optional<std::vector<int>> vertices) {
            return vertices ? g.edge_count(set_from_list(g, *vertices)) : g.edge_count();
          },
          py::arg("vertices") = std::nullopt)
      .def("cross_edge_count",
           [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
             return g.cross_edge_count(set_from_list(g, a), set_from_list(g, b));
           })
      .def(
          "is_connected",
          [](const Graph& g, std::optional<std::vector<int>> vertices) {
            return vertices ? g.is_connected(set_from_list(g, *vertices)) : g.is_connected();
          },
          py::arg("vertices") = std::nullopt)
      .def("induced",
           [](const Graph& g, const std::vector<int>& vertices) {
             return g.induced(set_from_list(g, vertices));
           })
      .def("to_edge_list", &Graph::to_edge_list)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  m.def("methods", [] { return chromatic_method_names(); },
        "Names of the chromatic-polynomial routes");

  m.def(
      "chromatic",
      [](const Graph& g, const std::string& method, const Limits& limits) {
        return to_py_coeffs(compute_method(g, method, limits));
      },
      py::arg("graph"), py::arg("method") = "bond-lattice", py::arg("limits") = Limits(),
      "Chromatic polynomial coefficients, ascending degree");

  m.def(
      "chromatic_all",
      [](const Graph& g, const Limits& limits) {
        py::dict out;
        for (const std::string& name : chromatic_method_names())
          out[py::str(name)] = to_py_coeffs(compute_method(g, name, limits));
        return out;
      },
      py::arg("graph"), py::arg("limits") = Limits(),
      "Every route's coefficients, keyed by method name");

  m.def(
      "q_kostant",
      [](const Graph& g, const Limits& limits) {
        return to_py_coeffs(q_kostant_at_beta(g, limits));
      },
      py::arg("graph"), py::arg("limits") = Limits());

  m.def(
      "coloring_count",
      [](const Graph& g, int colors, const Limits& limits) {
        return to_py_int(coloring_count(g, colors, limits));
      },
      py::arg("graph"), py::arg("colors"), py::arg("limits") = Limits());

  m.def(
      "acyclic_orientation_count",
      [](const Graph& g, const Limits& limits) {
        return to_py_int(acyclic_orientation_count(g, limits));
      },
      py::arg("graph"), py::arg("limits") = Limits());

  m.def(
      "coxeter_class_count",
      [](const Graph& g) { return to_py_int(coxeter_class_count(g)); }, py::arg("graph"));

  m.def(
      "root_multiplicity",
      [](const Graph& g, const std::vector<int>& vertices) {
        MultTable table(g);
        return to_py_int(table.root_multiplicity(set_from_list(g, vertices)));
      },
      py::arg("graph"), py::arg("vertices"));

  m.def(
      "lattice_size",
      [](const Graph& g, const Limits& limits) {
        return BondLattice::enumerate(g, limits).size();
      },
      py::arg("graph"), py::arg("limits") = Limits());

  m.def(
      "lattice_json",
      [](const Graph& g, const Limits& limits) {
        return lattice_to_json(BondLattice::enumerate(g, limits)).dump(2);
      },
      py::arg("graph"), py::arg("limits") = Limits());

  m.def(
      "mult_json",
      [](const Graph& g) { return mult_table_to_json(g).dump(2); }, py::arg("graph"));

  m.def(
      "verify_json",
      [](const Graph& g, bool timings, const Limits& limits) {
        return report_to_json(run_verify(g, limits), timings).dump(2);
      },
      py::arg("graph"), py::arg("timings") = false, py::arg("limits") = Limits());

  m.def(
      "verify_ok",
      [](const Graph& g, const Limits& limits) { return run_verify(g, limits).all_ok(); },
      py::arg("graph"), py::arg("limits") = Limits());
}
