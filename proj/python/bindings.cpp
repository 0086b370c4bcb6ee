#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>

#include "gradlpa/algebra.hpp"
#include "gradlpa/corner.hpp"
#include "gradlpa/error.hpp"
#include "gradlpa/graph.hpp"
#include "gradlpa/realization.hpp"
#include "gradlpa/representation.hpp"
#include "gradlpa/text.hpp"

namespace py = pybind11;
using namespace gradlpa;

namespace {

GradedBase base_from_period(Shift period) {
  return period == 0 ? GradedBase::trivial() : GradedBase::laurent(period);
}

py::dict form_dict(const CanonicalForm& f) {
  py::dict d;
  py::list levels;
  if (const auto* t = std::get_if<TrivialForm>(&f)) {
    for (const auto& l : t->levels) levels.append(py::make_tuple(l.offset, l.count));
    d["kind"] = "trivial";
    d["k"] = t->top;
  } else {
    const auto& c = std::get<CyclicForm>(f);
    for (const auto& l : c.levels) levels.append(py::make_tuple(l.offset, l.count));
    d["kind"] = "cyclic";
    d["m"] = c.period;
  }
  d["levels"] = levels;
  d["text"] = to_string(f);
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::list failures;
  for (const auto& f : v.failures) {
    py::dict e;
    e["summand"] = f.summand;
    e["index"] = f.index;
    e["multiplicity"] = f.multiplicity;
    e["reason"] = f.reason;
    failures.append(e);
  }
  py::dict d;
  d["realizable"] = v.realizable;
  d["failures"] = failures;
  return d;
}

DirectSumAlgebra as_sum(const std::vector<ShiftedMatrixAlgebra>& summands) {
  return DirectSumAlgebra(summands);
}

}  // namespace

PYBIND11_MODULE(_gradlpa, m) {
  m.doc() = "Graded matrix algebras and Leavitt path algebras of no-exit graphs";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<DirectedGraph>(m, "Graph")
      .def(py::init([](std::vector<VertexId> vertices,
                       std::vector<std::tuple<EdgeId, VertexId, VertexId>> edges) {
             std::vector<Edge> es;
             for (auto& [id, s, r] : edges) es.push_back({id, s, r});
             return DirectedGraph(std::move(vertices), std::move(es));
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_property_readonly("vertices", &DirectedGraph::vertices)
      .def_property_readonly("edges",
                             [](const DirectedGraph& g) {
                               std::vector<std::tuple<EdgeId, VertexId, VertexId>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.id, e.source, e.range);
                               return out;
                             })
      .def("to_dot", [](const DirectedGraph& g) { return to_dot(g); })
      .def("__str__", [](const DirectedGraph& g) { return print_graph(g); })
      .def("__eq__", [](const DirectedGraph& a, const DirectedGraph& b) { return a == b; });

  py::class_<ShiftedMatrixAlgebra>(m, "Algebra")
      .def(py::init([](Shift period, std::vector<Shift> shifts) {
             return ShiftedMatrixAlgebra(base_from_period(period), std::move(shifts));
           }),
           py::arg("period"), py::arg("shifts"),
           "period 0 is the trivially graded field K, period m >= 1 is K[x^m, x^-m]")
      .def_static("parse", [](const std::string& text) { return parse_matrix_algebra(text); })
      .def_property_readonly("period", [](const ShiftedMatrixAlgebra& a) { return a.base.period(); })
      .def_property_readonly("shifts", [](const ShiftedMatrixAlgebra& a) { return a.shifts; })
      .def("__len__", &ShiftedMatrixAlgebra::size)
      .def("__repr__", [](const ShiftedMatrixAlgebra& a) { return to_string(a); });

  m.def("parse_algebra", [](const std::string& text) { return parse_algebra(text).summands; },
        "Summands of a direct-sum expression");
  m.def("canonical_form", [](const ShiftedMatrixAlgebra& a) { return form_dict(canonical_form(a)); });
  m.def("is_graded_isomorphic", &is_graded_isomorphic);
  m.def("direct_sum_iso",
        [](const std::vector<ShiftedMatrixAlgebra>& r, const std::vector<ShiftedMatrixAlgebra>& s) {
          return direct_sum_iso(as_sum(r), as_sum(s));
        });
  m.def("iso_certificate",
        [](const ShiftedMatrixAlgebra& a,
           const ShiftedMatrixAlgebra& b) -> std::optional<std::string> {
          const auto cert = iso_certificate(a, b);
          if (!cert) return std::nullopt;
          return print_certificate(*cert);
        },
        "Certificate text (one step per line, 1-based) or None");
  m.def("apply_certificate",
        [](const ShiftedMatrixAlgebra& a, const std::string& text) {
          return ShiftedMatrixAlgebra(a.base, apply_certificate(a.shifts, parse_certificate(text), a.base));
        });
  m.def("oracle_iso", &oracle_iso, py::arg("a"), py::arg("b"), py::arg("bound") = 8);

  m.def("classify", [](const DirectedGraph& g) {
    const auto c = classify(g);
    py::list cycles;
    for (const auto& cy : c.cycles) cycles.append(cy.vertices);
    py::dict d;
    d["acyclic"] = c.acyclic;
    d["no_exit"] = c.no_exit;
    d["all_comets"] = c.all_comets;
    d["sinks"] = c.sinks;
    d["regular"] = c.regular;
    d["cycles"] = cycles;
    return d;
  });
  m.def("represent",
        [](const DirectedGraph& g, const std::map<VertexId, VertexId>& base) {
          return represent_at(g, base).sum.summands;
        },
        py::arg("graph"), py::arg("base") = std::map<VertexId, VertexId>{});
  m.def("is_realizable", [](const std::vector<ShiftedMatrixAlgebra>& r) {
    return verdict_dict(is_realizable_sum(as_sum(r)));
  });
  m.def("synthesize", [](const std::vector<ShiftedMatrixAlgebra>& r) {
    return r.size() == 1 ? synthesize(r.front()) : synthesize_sum(as_sum(r));
  });
  m.def("corner_by_indices", &corner_by_indices, py::arg("algebra"), py::arg("indices"),
        "Indices are 0-based");
  m.def("corner_by_vertices", [](const DirectedGraph& g, const std::set<VertexId>& vs) {
    return corner_by_vertices(g, vs).summands;
  });
}
