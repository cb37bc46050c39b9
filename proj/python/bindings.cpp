#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppav/checks.hpp"
#include "ppav/serialization.hpp"

namespace py = pybind11;
using namespace ppav;

namespace {

py::object to_py(const Integer& x) { return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10)); }

Integer from_py(const py::handle& h) { return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(to_py(m(i, j)));
    rows.append(r);
  }
  return rows;
}

IntMatrix matrix_from_py(const py::sequence& rows) {
  const std::size_t n = rows.size();
  const std::size_t c = n == 0 ? 0 : py::len(rows[0]);
  IntMatrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    const py::sequence r = rows[i];
    if (r.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(r[j]);
  }
  return m;
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

QuadOrder order_from_name(const std::string& name) { return QuadOrder(order_kind_from_string(name)); }

}  // namespace

PYBIND11_MODULE(_ppav, m) {
  m.doc() = "Exact lattice computations for polarized abelian varieties with group actions.";

  // owned by the module; the translator only borrows it
  static PyObject* error_type = PyErr_NewException("ppav._ppav.PpavError", PyExc_RuntimeError, nullptr);
  m.add_object("PpavError", py::reinterpret_borrow<py::object>(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def("snf", [](const py::sequence& a) {
    const SmithForm f = snf(matrix_from_py(a));
    return py::make_tuple(to_py(f.U), to_py(f.D), to_py(f.V));
  }, "Smith form (U, D, V) with U A V = D.");
  m.def("column_hnf", [](const py::sequence& a) { return to_py(column_hnf(matrix_from_py(a))); });
  m.def("determinant", [](const py::sequence& a) { return to_py(determinant(matrix_from_py(a))); });
  m.def("pfaffian", [](const py::sequence& a) { return to_py(pfaffian(matrix_from_py(a))); });
  m.def("alternating_type", [](const py::sequence& a) { return to_py(alternating_type(matrix_from_py(a))); });

  py::class_<PolarizedTorus>(m, "PolarizedTorus")
      .def(py::init([](const std::string& order, std::size_t g, const py::sequence& form) {
             return PolarizedTorus(Torus(order_from_name(order), g), matrix_from_py(form));
           }),
           py::arg("order"), py::arg("g"), py::arg("form"))
      .def_property_readonly("g", &PolarizedTorus::dim)
      .def_property_readonly("order", [](const PolarizedTorus& p) { return std::string(to_string(p.order().kind())); })
      .def_property_readonly("form", [](const PolarizedTorus& p) { return to_py(p.form()); })
      .def("type", [](const PolarizedTorus& p) { return to_py(polarization_type(p)); })
      .def("kernel_orders", [](const PolarizedTorus& p) { return to_py(kernel_group(p).orders()); })
      .def("kernel_order", [](const PolarizedTorus& p) { return to_py(kernel_group(p).order()); })
      .def("self_intersection", [](const PolarizedTorus& p) { return to_py(self_intersection(p)); })
      .def("scale", [](const PolarizedTorus& p, const py::int_& k) { return scale(p, from_py(k)); })
      .def("box", &box_product)
      .def("to_json", [](const PolarizedTorus& p) { return to_py(to_json(p)); })
      .def("__eq__", [](const PolarizedTorus& a, const PolarizedTorus& b) { return a == b; })
      .def("__repr__", [](const PolarizedTorus& p) { return "PolarizedTorus(" + to_json(p).dump() + ")"; });

  m.def("theta", [](std::size_t g, const std::string& order) { return theta_g(g, order_from_name(order)); },
        py::arg("g"), py::arg("order") = "Z");
  m.def("xi", &xi_g, py::arg("g"));
  m.def("from_symmetric_block", [](const py::sequence& b) { return from_symmetric_block(matrix_from_py(b)); });

  py::class_<MatrixGroup>(m, "MatrixGroup")
      .def_property_readonly("order", &MatrixGroup::order)
      .def_property_readonly("g", [](const MatrixGroup& g) { return g.torus().g; })
      .def("pseudoreflection_generated", [](const MatrixGroup& g) {
        const ReflectionSummary s = pseudoreflection_generated(g);
        return py::make_tuple(s.generated, s.pseudoreflections);
      })
      .def("fixed_dim", &fixed_dim)
      .def("ns_rank", [](const MatrixGroup& g) { return ns_fixed(g).rank; })
      .def("preserves", [](const MatrixGroup& g, const PolarizedTorus& p) { return invariant_form(g, p); })
      .def("fixes_kernel", [](const MatrixGroup& g, const PolarizedTorus& p) {
        return action_on_kernel(g, kernel_group(p));
      })
      .def("to_json", [](const MatrixGroup& g) { return to_py(to_json(g)); });

  auto pair = [](const GroupWithPolarization& gp) { return py::make_tuple(gp.group, gp.polarization); };
  m.def("example_a", [pair](std::size_t g, int order) { return pair(example_a(g, order)); }, py::arg("g"),
        py::arg("m"));
  m.def("example_b", [pair](std::size_t g) { return pair(example_b(g)); }, py::arg("g"));
  m.def("example_c", [pair] { return pair(example_c()); });

  py::class_<GluedPPAV>(m, "GluedPPAV")
      .def_property_readonly("form", [](const GluedPPAV& a) { return to_py(a.form); })
      .def_property_readonly("divisors", [](const GluedPPAV& a) { return to_py(a.divisors); })
      .def_property_readonly("dim", [](const GluedPPAV& a) { return a.x_dim + a.y_dim; })
      .def("verify", [](const GluedPPAV& a) { return to_py(to_json(verify_glued(a))); })
      .def("decompose", [](const GluedPPAV& a) { return to_py(to_json(decompose_glued(a))); })
      .def("to_json", [](const GluedPPAV& a) { return to_py(to_json(a)); });
  m.def("build_standard", &build_standard, py::arg("factors"), py::arg("y_dim"));

  m.def("rh_residual", [](long g, long gp, long n) { return rh_residual(g, gp, n).value; });
  m.def("jacobian_cases", [] { return to_py(to_json(jacobian_cases())); });
  m.def("genus_bound", [] { return to_py(to_json(pseudoreflection_genus_bound())); });

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : check_catalog()) ids.push_back(c.id);
    return ids;
  });
  m.def(
      "run_check",
      [](const std::string& id, std::size_t gmax, std::vector<std::size_t> factors, std::optional<std::size_t> ydim,
         std::uint64_t seed) {
        CheckOptions o;
        o.gmax = gmax;
        o.factors = std::move(factors);
        o.ydim = ydim;
        o.seed = seed;
        CheckResult r;
        {
          py::gil_scoped_release release;
          r = run_check(id, o);
        }
        return to_py(to_json(r));
      },
      py::arg("check_id"), py::arg("gmax") = 6, py::arg("factors") = std::vector<std::size_t>{2, 3},
      py::arg("ydim") = py::none(), py::arg("seed") = 0);
}
