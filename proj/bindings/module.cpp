// cubecomb: python bindings for the main operations.
//
// SPDX-License-Identifier: MIT
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cubecomb/action.hpp"
#include "cubecomb/cocycle.hpp"
#include "cubecomb/cube_complex.hpp"
#include "cubecomb/document.hpp"
#include "cubecomb/errors.hpp"
#include "cubecomb/generators.hpp"
#include "cubecomb/measure.hpp"
#include "cubecomb/pocset.hpp"
#include "cubecomb/verify.hpp"

namespace py = pybind11;
using namespace cubecomb;

namespace {

std::vector<std::string> diag_strings(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  out.reserve(ds.size());
  for (const auto& d : ds)
    out.push_back(std::string(errc_name(d.code)) + ": " + d.witness);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "combinatorics of finite cube complexes given as pocsets";

  py::register_exception<Error>(m, "CubecombError");

  py::class_<Pocset>(m, "Pocset")
      .def_property_readonly("pairs", &Pocset::pairs)
      .def_property_readonly("halfspaces", &Pocset::halfspaces)
      .def("less", &Pocset::less)
      .def("relation",
           [](const Pocset& p, HalfspaceId a, HalfspaceId b) {
             return std::string(relation_name(p.relation(a, b)));
           })
      .def("validate",
           [](const Pocset& p) { return diag_strings(p.validate()); })
      .def("dimension", &Pocset::dimension);

  py::class_<CubeComplex>(m, "CubeComplex")
      .def_property_readonly("vertex_count", &CubeComplex::vertex_count)
      .def_property_readonly("edge_count", &CubeComplex::edge_count)
      .def("distance", &CubeComplex::distance)
      .def("median", &CubeComplex::median)
      .def("separation", [](const CubeComplex& c, VertexId u, VertexId v) {
        std::vector<HalfspaceId> out;
        Bits s = c.separating(u, v);
        for (std::size_t h = s.find_first(); h != Bits::npos;
             h = s.find_next(h))
          out.push_back(static_cast<HalfspaceId>(h));
        return out;
      });

  m.def("generate", &generate, py::arg("kind_expr"),
        "parse a kind expression (cube(3), tripod(2), ...) into a pocset");
  m.def(
      "build",
      [](const Pocset& p) { return CubeComplex::build(p); },
      py::arg("pocset"), "dual cube complex of a valid pocset");
  m.def(
      "cocycle_norms",
      [](const CubeComplex& c, VertexId u1, VertexId u2, VertexId u3,
         unsigned n, unsigned p) {
        SeqTable t = SeqTable::build(c.pocset(), n);
        NormReport r = norms(median_cocycle(c, t, u1, u2, u3), p);
        py::dict d;
        d["support"] = r.support;
        d["l1"] = r.l1;
        d["linf"] = r.linf;
        d["lp_pow"] = r.lp_pow;
        return d;
      },
      py::arg("complex"), py::arg("u1"), py::arg("u2"), py::arg("u3"),
      py::arg("n") = 2, py::arg("p") = 1,
      "support and norm data of the median cocycle at a vertex triple");
  m.def(
      "parse_document",
      [](const std::string& text) {
        Document doc = parse_document(text);
        py::dict d;
        d["has_pocset"] = doc.pocset.has_value();
        d["has_graph"] = doc.graph.has_value();
        d["automorphisms"] = doc.automorphisms.size();
        if (doc.pocset) d["pocset"] = *doc.pocset;
        return d;
      },
      py::arg("text"), "parse a cubecomb document, returning a summary dict");
  m.def(
      "verify",
      [](std::uint64_t seed, unsigned complexes, unsigned tuples) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.complexes = complexes;
        opt.tuples = tuples;
        auto results = verify_document(Document{}, opt);
        std::vector<py::dict> out;
        for (const auto& r : results) {
          py::dict d;
          d["name"] = r.name;
          d["ok"] = r.ok;
          d["witness"] = r.witness;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("seed") = 42, py::arg("complexes") = 5, py::arg("tuples") = 50,
      "run the random invariant campaigns, returning one dict per check");
}
