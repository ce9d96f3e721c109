// Python bindings. Exact distances cross the boundary as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "pnspan/construct.hpp"
#include "pnspan/counterexample.hpp"
#include "pnspan/navigate.hpp"
#include "pnspan/report.hpp"
#include "pnspan/spanner.hpp"

namespace py = pybind11;
using namespace pnspan;

namespace {

// Cached module attributes are intentionally leaked so no destructor runs
// after interpreter shutdown.
const py::object& fraction_type() {
  static const auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
  return *cls;
}

py::object fraction(const Rational& r) { return fraction_type()(to_fraction_string(r)); }

py::object to_py(double v) { return py::float_(v); }
py::object to_py(const Rational& v) { return fraction(v); }

// Accepts int, Fraction, str "p/q" or float (taken at its exact binary value).
Rational to_rational(const py::handle& obj) {
  return parse_rational(py::str(fraction_type()(obj)).cast<std::string>());
}

py::object from_json(const json& j) {
  static const auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

FamilyIndex family_index(const py::object& k) {
  return k.is_none() ? FamilyIndex::infinity() : FamilyIndex::finite(k.cast<std::uint32_t>());
}

template <class T>
void bind_graph(py::module_& m, const char* name) {
  using G = MetricGraph<T>;
  py::class_<G>(m, name)
      .def(py::init([](std::size_t n, bool directed) {
             return G(n, directed ? Directedness::Directed : Directedness::Undirected);
           }),
           py::arg("n"), py::arg("directed") = false)
      .def("__len__", &G::size)
      .def_property_readonly("directed", &G::directed)
      .def("edge_count", &G::edge_count)
      .def("has_edge", &G::has_edge)
      .def("add_edge", [](G& g, PointId u, PointId v, const py::object& w) {
        if constexpr (ScalarTraits<T>::exact) {
          g.add_edge(u, v, to_rational(w));
        } else {
          g.add_edge(u, v, w.cast<double>());
        }
      })
      .def("neighbors",
           [](const G& g, PointId u) {
             py::list out;
             for (const auto& e : g.neighbors(u)) out.append(py::make_tuple(e.to, to_py(e.weight)));
             return out;
           })
      .def("edges",
           [](const G& g) {
             py::list out;
             for (const auto& [u, v] : g.edges()) {
               for (const auto& e : g.neighbors(u)) {
                 if (e.to == v) out.append(py::make_tuple(u, v, to_py(e.weight)));
               }
             }
             return out;
           })
      .def("to_text",
           [](const G& g) {
             std::ostringstream out;
             write_graph(out, g);
             return out.str();
           })
      .def(py::self == py::self);
}

py::object verdict(const PairVerdict& v) {
  if (v.witness) return py::make_tuple(v.holds, py::make_tuple(v.witness->first, v.witness->second));
  return py::make_tuple(v.holds, py::none());
}

template <class S>
void bind_space_ops(py::module_& m) {
  using T = distance_t<S>;
  using G = MetricGraph<T>;
  m.def("build_complete", [](const S& s) { return build_complete(s); });
  m.def(
      "build_hsp",
      [](const S& s, bool trace) -> py::object {
        auto result = build_hsp(s);
        if (!trace) return py::cast(std::move(result.graph));
        return py::make_tuple(std::move(result.graph), from_json(to_json(result.traces)));
      },
      py::arg("space"), py::arg("trace") = false);
  m.def("is_pn_graph", [](const G& g, const S& s) { return verdict(is_pn_graph(g, s)); });
  m.def("check_lune", [](const G& g, const S& s) { return verdict(check_lune(g, s)); });
  m.def("proximity_path", [](const G& g, const S& s, PointId u, PointId v) {
    const auto route = proximity_path(g, s, u, v);
    py::dict out;
    out["path"] = route.path;
    py::list hops;
    for (const auto& h : route.hop_lengths) hops.append(to_py(h));
    out["hop_lengths"] = hops;
    out["total_length"] = to_py(route.total_length);
    out["reached"] = route.reached();
    return out;
  });
  m.def(
      "stretch",
      [](const G& g, const S& s, bool greedy) {
        const auto report = greedy ? greedy_stretch(g, s) : stretch(g, s);
        py::dict out;
        out["stretch"] = to_py(report.stretch);
        out["argmax"] = py::make_tuple(report.argmax.first, report.argmax.second);
        out["pair_count"] = report.pair_count;
        return out;
      },
      py::arg("graph"), py::arg("space"), py::arg("greedy") = false);
  m.def("is_t_spanner", [](const G& g, const S& s, const py::object& t) {
    if constexpr (ScalarTraits<T>::exact) {
      return is_t_spanner(g, s, to_rational(t)).holds;
    } else {
      return is_t_spanner(g, s, t.cast<double>()).holds;
    }
  });
  m.def("check_metric_axioms", [](const S& s) { return from_json(to_json(check_metric_axioms(s))); });
}

}  // namespace

PYBIND11_MODULE(pnspanner, m) {
  m.doc() = "Proximal-navigation graphs, HSP, Delaunay and spanner checks";

  py::register_exception<Error>(m, "PnError", PyExc_ValueError);

  py::class_<EuclideanSpace>(m, "EuclideanSpace")
      .def(py::init(&EuclideanSpace::from_rows), py::arg("points"))
      .def("__len__", &EuclideanSpace::size)
      .def_property_readonly("dim", &EuclideanSpace::dim)
      .def("distance", [](const EuclideanSpace& s, PointId u, PointId v) { return dist(s, u, v); });
  py::class_<HammingSpace>(m, "HammingSpace")
      .def(py::init<const std::vector<std::string>&>(), py::arg("rows"))
      .def("__len__", &HammingSpace::size)
      .def_property_readonly("bits", &HammingSpace::bits)
      .def("distance", [](const HammingSpace& s, PointId u, PointId v) { return dist(s, u, v); });
  py::class_<TableSpace>(m, "TableSpace")
      .def(py::init<std::vector<std::vector<double>>>(), py::arg("matrix"))
      .def("__len__", &TableSpace::size)
      .def("distance", [](const TableSpace& s, PointId u, PointId v) { return dist(s, u, v); });
  py::class_<CounterexampleSpace>(m, "CounterexampleSpace")
      .def(py::init([](std::uint32_t i, const py::object& eps) {
             return CounterexampleSpace(i, eps.is_none() ? default_epsilon(i) : to_rational(eps));
           }),
           py::arg("i"), py::arg("eps") = py::none())
      .def("__len__", &CounterexampleSpace::size)
      .def_property_readonly("index", &CounterexampleSpace::index)
      .def_property_readonly("epsilon", [](const CounterexampleSpace& s) { return fraction(s.epsilon()); })
      .def_property_readonly("infinity_id", &CounterexampleSpace::infinity_id)
      .def("distance", [](const CounterexampleSpace& s, PointId u, PointId v) { return fraction(dist(s, u, v)); });

  bind_graph<double>(m, "FloatGraph");
  bind_graph<Rational>(m, "ExactGraph");

  bind_space_ops<EuclideanSpace>(m);
  bind_space_ops<HammingSpace>(m);
  bind_space_ops<TableSpace>(m);
  bind_space_ops<CounterexampleSpace>(m);

  m.def("build_delaunay", &build_delaunay, py::arg("space"));
  m.def("symmetrize", [](const FloatGraph& g) { return symmetrize(g); });
  m.def("symmetrize", [](const ExactGraph& g) { return symmetrize(g); });
  m.def(
      "build_counterexample_graph",
      [](std::uint32_t i, const py::object& eps) {
        auto inst = eps.is_none() ? build_counterexample_graph(i) : build_counterexample_graph(i, to_rational(eps));
        return py::make_tuple(std::move(inst.graph), std::move(inst.space));
      },
      py::arg("i"), py::arg("eps") = py::none());
  m.def("read_graph", [](const std::string& text) -> py::object {
    std::istringstream in(text);
    return std::visit([](auto&& g) { return py::cast(std::move(g)); }, read_graph(in));
  });

  m.def("default_epsilon", [](std::uint32_t i) { return fraction(default_epsilon(i)); });
  m.def("harmonic", [](std::uint32_t k) { return fraction(harmonic(k)); });
  m.def(
      "dx_closed_form",
      [](const py::object& a, const py::object& b, const py::object& eps) {
        return fraction(dx_closed_form(family_index(a), family_index(b), to_rational(eps)));
      },
      py::arg("a"), py::arg("b"), py::arg("eps"), "Distance between f_a and f_b; pass None for f_inf.");
  m.def("min_counterexample_index", [](const py::object& t) { return min_counterexample_index(to_rational(t)); });
  m.def(
      "verify_family",
      [](std::uint32_t i_max, const py::object& eps) {
        return from_json(to_json(verify_family(i_max, eps.is_none() ? default_epsilon(i_max) : to_rational(eps))));
      },
      py::arg("i_max"), py::arg("eps") = py::none());
}
