#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cwhom/canonical.hpp"
#include "cwhom/cw.hpp"
#include "cwhom/lattice.hpp"
#include "cwhom/oracle.hpp"

namespace py = pybind11;
using namespace cwhom;

namespace {

py::dict bundle_dict(const InvariantBundle& b) {
    py::dict d;
    d["n"] = b.n;
    d["depth"] = b.depth;
    d["reg"] = b.reg;
    d["dim"] = b.dim;
    d["degh"] = b.degh;
    d["field"] = b.field.name();
    return d;
}

// Points go out as tuples so the result is a real Python set.
py::set set_points(const LatticePointSet& s) {
    py::set out;
    for (const Point& p : s.points) out.add(py::tuple(py::cast(p)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_cwhom, m) {
    m.doc() = "Homological invariants of edge ideals and Cameron-Walker lattice-point sets";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>())
        .def_property_readonly("n", &Graph::n)
        .def("add_edge", &Graph::add_edge)
        .def("edges", &Graph::edges)
        .def("connected", &Graph::connected)
        .def("graph6", [](const Graph& g) { return emit_graph6(g); })
        .def("__repr__", [](const Graph& g) { return "Graph(" + emit_graph6(g) + ")"; });

    m.def("parse_graph6", &parse_graph6);
    m.def("parse_edge_list", &parse_edge_list);
    m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g)); });
    m.def("connected_graphs", &connected_graphs);

    m.def(
        "invariants",
        [](const Graph& g, const std::string& field) {
            return bundle_dict(oracle_invariants(g, parse_field(field)));
        },
        py::arg("graph"), py::arg("field") = "gf2");
    m.def("cw_invariants", [](const std::string& shape) {
        return bundle_dict(cw_invariants(parse_shape_literal(shape)));
    });
    m.def("recognize", [](const Graph& g) -> py::object {
        auto rec = recognize_cw(g);
        if (!rec) return py::none();
        return py::str(shape_literal(*rec));
    });
    m.def("build_shape", [](const std::string& shape) {
        return build_cw(parse_shape_literal(shape));
    });
    m.def("construct_family", &construct_family);
    m.def("independence_domination", &independence_domination);

    m.def("closed_form_set", [](const std::string& kind, int n) {
        return set_points(closed_form_set(parse_set_kind(kind), n));
    });
    m.def(
        "enumerate_graph_pair_set",
        [](int n, const std::string& source, const std::string& field, const std::string& cache,
           int threads) {
            return set_points(
                enumerate_graph_pair_set(n, source, parse_field(field), cache, threads));
        },
        py::arg("n"), py::arg("source") = "builtin", py::arg("field") = "gf2",
        py::arg("cache") = "", py::arg("threads") = 1);
    m.def("enumerate_cw_sets", [](int n) {
        CwSets s = enumerate_cw_sets(n);
        return py::make_tuple(set_points(s.pairs), set_points(s.tuples));
    });
    m.def("witness_for_point",
          [](const std::string& theorem, int n, const std::vector<int>& point) {
              return witness_for_point(parse_witness_theorem(theorem), n, point);
          });
    m.def("is_convex", [](const py::iterable& points) {
        LatticePointSet s;
        s.arity = 2;
        for (py::handle p : points) s.points.insert(p.cast<std::vector<int>>());
        return is_convex(s).convex;
    });
}
