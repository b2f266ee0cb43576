#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric/bott.hpp"
#include "toric/bundle.hpp"
#include "toric/error.hpp"
#include "toric/hilbert_ehrhart.hpp"
#include "toric/hodge.hpp"
#include "toric/identities.hpp"
#include "toric/lattice_count.hpp"
#include "toric/shapes.hpp"
#include "toric/weighted_log.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

// Integers cross the boundary as Python ints via their decimal strings.
py::int_ to_py(const BigInt& z) { return py::int_(py::str(z.str())); }

BigInt from_py(const py::handle& h) { return BigInt(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::object to_py(const Rational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(q)), to_py(denominator(q)));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const UniPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

LatticeVector vector_from(const py::sequence& s) {
  LatticeVector v;
  for (const auto& x : s) v.push_back(from_py(x));
  return v;
}

Polytope make_polytope(const py::sequence& points, std::optional<std::size_t> dim) {
  std::vector<LatticeVector> pts;
  for (const auto& p : points) pts.push_back(vector_from(p.cast<py::sequence>()));
  if (dim) return Polytope::from_vertices(*dim, pts);
  return Polytope::from_vertices(pts);
}

py::dict report(const IdentityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["params"] = r.params;
  d["left"] = to_py(r.left);
  d["right"] = to_py(r.right);
  d["holds"] = r.holds;
  return d;
}

py::list table_to_py(const CohomologyTable& t) {
  py::list rows;
  for (const auto& row : t.entries) rows.append(to_py(row));
  return rows;
}

BundleData make_bundle(const std::vector<Polytope>& summands) { return BundleData::make(summands); }

}  // namespace

PYBIND11_MODULE(toric_bott, m) {
  m.doc() = "Lattice polytopes, generalized Bott formulas and Hilbert-Ehrhart polynomials.";

  static py::exception<ToricError> toric_error(m, "ToricError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ToricError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(toric_error.ptr())(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(toric_error.ptr(), exc.ptr());
    }
  });

  py::class_<Polytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("vertices"), py::arg("dim") = py::none(),
           "Convex hull of integer points; dim defaults to the length of the first point.")
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("vertices",
                             [](const Polytope& p) {
                               py::list out;
                               for (const auto& v : p.vertices()) out.append(to_py(v));
                               return out;
                             })
      .def_property_readonly("facets",
                             [](const Polytope& p) {
                               py::list out;
                               for (const auto& h : p.facets()) out.append(py::make_tuple(to_py(h.normal), to_py(h.offset)));
                               return out;
                             },
                             "(normal, offset) pairs with <normal, x> >= offset inside.")
      .def_property_readonly("f_vector", [](const Polytope& p) { return to_py(p.faces().f_vector()); })
      .def_property_readonly("faces",
                             [](const Polytope& p) {
                               py::list out;
                               for (const auto& f : p.faces().faces()) {
                                 py::dict d;
                                 d["dim"] = f.dim;
                                 d["vertex_ids"] = f.vertex_ids;
                                 d["tight_facets"] = f.tight_facets;
                                 out.append(d);
                               }
                               return out;
                             })
      .def("is_simple", [](const Polytope& p) { return is_simple(p); })
      .def("contains", [](const Polytope& p, const py::sequence& x) { return p.contains(vector_from(x)); })
      .def("dilate", [](const Polytope& p, const py::int_& k) { return dilate(p, from_py(k)); })
      .def("__add__", [](const Polytope& a, const Polytope& b) { return minkowski_sum(a, b); })
      .def("__repr__", [](const Polytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + " vertices=" + std::to_string(p.vertices().size()) + ">";
      });

  auto shapes = m.def_submodule("shapes", "Built-in polytopes.");
  shapes.def("simplex", &shapes::simplex);
  shapes.def("cube", &shapes::cube);
  shapes.def("ex5", &shapes::ex5, "conv{(0,0,0), (1,0,0), (0,1,0), (1,1,m)}");
  shapes.def("octahedron", &shapes::octahedron);
  shapes.def("product", &shapes::product);
  shapes.def("point", &shapes::point);

  m.def("count_table", [](const Polytope& p, unsigned threads) {
    const auto t = count_table(p, ScanOptions{threads});
    py::list faces;
    for (const auto& c : t.per_face) faces.append(py::make_tuple(to_py(c.l), to_py(c.l_star)));
    py::dict d;
    d["faces"] = faces;
    d["closed_by_codim"] = to_py(t.closed_by_codim);
    d["interior_by_dim"] = to_py(t.interior_by_dim);
    return d;
  }, py::arg("poly"), py::arg("threads") = 1, "Per-face (l, l*) plus the aggregate sums.");
  m.def("count_points", [](const Polytope& p) { return to_py(count_points(p)); });
  m.def("volume", [](const Polytope& p) { return to_py(volume(p)); });

  m.def("bott1_untwisted", [](const Polytope& p) { return table_to_py(bott1_untwisted(p)); },
        "h^q(Omega^p) as rows indexed by p.");
  m.def("bott2_untwisted", [](const Polytope& p) { return table_to_py(bott2_untwisted(p)); });
  m.def("bott1_twisted", [](const Polytope& p, long q) { return to_py(bott1_twisted(p, q)); });
  m.def("bott2_twisted", [](const Polytope& p, long q) { return to_py(bott2_twisted(p, q)); });
  m.def("generating_polys", [](const Polytope& p) {
    const auto g = generating_polys(p);
    return py::make_tuple(to_py(g.untwisted), to_py(g.twisted));
  }, "(untwisted, twisted) coefficient lists, lowest power first.");
  m.def("pn_oracle", [](long n, long p, long q, long k) { return to_py(pn_oracle(n, p, q, k)); });

  m.def("hilbert_ehrhart", [](const Polytope& poly, long p) { return to_py(hilbert_ehrhart(poly, p)); },
        "Coefficients of L_p, lowest power first, as Fractions.");
  m.def("hilbert_ehrhart_all", [](const Polytope& poly) {
    py::list out;
    for (const auto& L : hilbert_ehrhart_all(poly)) out.append(to_py(L));
    return out;
  });
  m.def("reciprocity_check", [](const Polytope& poly, long p, long k) {
    const auto w = reciprocity_check(poly, p, k);
    return py::make_tuple(w.holds, to_py(w.lhs), to_py(w.rhs));
  });
  m.def("leading_coefficient_check", [](const Polytope& poly, long p) {
    const auto w = leading_coefficient_check(poly, p);
    return py::make_tuple(w.holds, to_py(w.coefficient), to_py(w.expected));
  });

  m.def("identity_window", [](long nmax, long kmax) {
    py::list out;
    for (const auto& r : identity_window(nmax, kmax)) out.append(report(r));
    return out;
  });
  m.def("dehn_sommerville", [](const Polytope& p, long q) { return report(dehn_sommerville(p, q)); });
  m.def("face_duality", [](const Polytope& p, long q) { return report(face_duality(p, q)); });

  m.def("phi", [](const Polytope& p, std::size_t face, long i) { return to_py(phi(p, face, i)); });
  m.def("euler_ep", [](const Polytope& p, long q) { return to_py(euler_ep(p, q)); });
  m.def("chi_log", [](const Polytope& p, long q) { return to_py(chi_log(p, q)); });
  m.def("primitive_hodge", [](const Polytope& p) { return to_py(primitive_hodge(p).values); });

  m.def("h0_weighted", [](const Polytope& p, long q, long k) { return to_py(h0_weighted(p, q, k)); });

  m.def("cayley_count", [](const std::vector<Polytope>& summands, const std::vector<std::size_t>& subset, long k) {
    return to_py(cayley_count(make_bundle(summands), subset, k));
  });
  m.def("h0_relative", [](const std::vector<Polytope>& summands, long p, long k) {
    return to_py(h0_relative(make_bundle(summands), p, k));
  });
  m.def("nabla_lattice_points", [](const std::vector<Polytope>& summands, long k, const std::vector<long>& lower) {
    return to_py(nabla(make_bundle(summands), k, lower).lattice_points());
  });
}
