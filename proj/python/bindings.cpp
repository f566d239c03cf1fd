#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strongfact/basis.hpp"
#include "strongfact/certifier.hpp"
#include "strongfact/error.hpp"
#include "strongfact/factorization.hpp"
#include "strongfact/seq_norms.hpp"
#include "strongfact/suites.hpp"

namespace py = pybind11;
using namespace strongfact;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

TruncatedSeq to_seq(const Array& a, bool zsym = false) {
  if (a.ndim() != 1) throw Error(ErrorCode::InvalidArgument, "expected a 1-d array");
  return TruncatedSeq(std::vector<double>(a.data(), a.data() + a.size()), zsym ? IndexDomain::ZSym : IndexDomain::Nat1);
}

Array to_array(const TruncatedSeq& s) { return Array(static_cast<py::ssize_t>(s.size()), s.vec().data()); }

MatrixOp to_matrix(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw Error(ErrorCode::SizeMismatch, "expected a square 2-d array");
  return MatrixOp(static_cast<std::size_t>(a.shape(0)), std::vector<double>(a.data(), a.data() + a.size()));
}

Array to_array(const MatrixOp& A) {
  const auto n = static_cast<py::ssize_t>(A.size());
  Array out({n, n});
  std::copy(A.data().begin(), A.data().end(), out.mutable_data());
  return out;
}

Exponent ex(const py::object& o) {
  if (py::isinstance<Exponent>(o)) return o.cast<Exponent>();
  if (py::isinstance<py::str>(o)) return Exponent::parse(o.cast<std::string>());
  if (py::isinstance<py::int_>(o)) return Exponent::rational(o.cast<std::int64_t>());
  const double v = o.cast<double>();
  return std::isinf(v) ? Exponent::infinity() : Exponent::parse(py::str(o).cast<std::string>());
}

py::dict certify_dict(const InequalityResult& r) {
  py::dict d;
  d["c_hat"] = r.c_hat;
  d["vertex_c_hat"] = r.vertex_c_hat;
  d["refuted"] = r.refuted;
  d["exhaustive"] = r.exhaustive;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["evaluated"] = r.evaluated;
  d["verdict"] = std::string(to_string(verdict_from(r)));
  Array pat({static_cast<py::ssize_t>(r.pattern.rows), static_cast<py::ssize_t>(r.pattern.cols)});
  std::copy(r.pattern.values.begin(), r.pattern.values.end(), pat.mutable_data());
  d["pattern"] = pat;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strong factorization checks through the Fourier and Cesaro operators";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Exponent>(m, "Exponent")
      .def(py::init([](const py::object& o) { return ex(o); }))
      .def_static("infinity", &Exponent::infinity)
      .def_property_readonly("value", &Exponent::value)
      .def_property_readonly("is_infinite", &Exponent::is_infinite)
      .def("__str__", &Exponent::to_string)
      .def("__repr__", [](const Exponent& e) { return "Exponent('" + e.to_string() + "')"; })
      .def("__eq__", [](const Exponent& a, const Exponent& b) { return a == b; });

  m.def("conjugate", [](const py::object& p) { return conjugate(ex(p)); });
  m.def("multiplier_exponent", [](const py::object& p, const py::object& q) { return multiplier_exponent(ex(p), ex(q)); });

  m.def("lp_norm", [](const Array& x, const py::object& p) { return lp_norm(to_seq(x), ex(p)); });
  m.def("weighted_lp_norm",
        [](const Array& x, const py::object& p, const Array& w) { return weighted_lp_norm(to_seq(x), ex(p), to_seq(w)); });
  m.def("kellogg_norm", [](const Array& lam, const py::object& p, const py::object& q) {
    return kellogg_norm(to_seq(lam, true), ex(p), ex(q));
  }, "Mixed norm of a sequence indexed -M..M (odd length).");
  m.def("dual_norm", [](const Array& c, const py::object& s) {
    const auto r = dual_norm(to_seq(c), ex(s));
    return py::make_tuple(r.value, to_array(r.extremizer));
  });

  m.def("cesaro_matrix", [](std::size_t n) { return to_array(cesaro_matrix(n)); });
  m.def("diagonal_sandwich", [](const Array& g, const Array& S, const Array& h) {
    return to_array(diagonal_sandwich(to_seq(g), to_matrix(S), to_seq(h)));
  });
  m.def("operator_norm_estimate", [](const Array& T, std::size_t trials, std::uint64_t seed) {
    return operator_norm_estimate(to_matrix(T), trials, seed);
  }, py::arg("T"), py::arg("trials") = 16, py::arg("seed") = 0);

  m.def("cesaro_factor_check_json", [](const Array& A, const Array& h, const py::object& p, const py::object& q,
                                       const py::object& r, double tol) {
    return to_json(cesaro_factor_check(to_matrix(A), to_seq(h), ex(p), ex(q), ex(r), tol));
  }, py::arg("A"), py::arg("h"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("tol") = kShapeTolerance);
  m.def("cesaro_factor_check_j0_json", [](const Array& A, const Array& h, const py::object& p, const py::object& q,
                                          const py::object& r, double tol) {
    return to_json(cesaro_factor_check_j0(to_matrix(A), to_seq(h), ex(p), ex(q), ex(r), tol));
  }, py::arg("A"), py::arg("h"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("tol") = kShapeTolerance);
  m.def("fourier_factor_check_json", [](const Array& T, const py::object& r, const py::object& p, const py::object& q,
                                        double tol) {
    return to_json(fourier_factor_check(to_matrix(T), ex(r), ex(p), ex(q), tol));
  }, py::arg("Tphi"), py::arg("r"), py::arg("p"), py::arg("q"), py::arg("tol") = kShapeTolerance);
  m.def("matrix_factor_check_json", [](const Array& A, const Array& B, const Array& h, double tol) {
    return to_json(matrix_factor_check(to_matrix(A), to_matrix(B), to_seq(h), tol));
  }, py::arg("A"), py::arg("B"), py::arg("h"), py::arg("tol") = kShapeTolerance);

  m.def("certify_inequality_cesaro", [](const Array& A, const Array& h, const py::object& s, std::size_t patterns,
                                        std::uint64_t seed, std::size_t n, std::size_t mm) {
    return certify_dict(certify_inequality_cesaro(to_matrix(A), to_seq(h), ex(s), patterns, seed, n, mm));
  }, py::arg("A"), py::arg("h"), py::arg("s_rq"), py::arg("patterns") = 64, py::arg("seed") = 0, py::arg("n") = 0,
     py::arg("m") = 0);
  m.def("certify_inequality_fourier", [](const Array& T, const py::object& s, std::size_t patterns, std::uint64_t seed,
                                         std::size_t n, std::size_t mm) {
    return certify_dict(certify_inequality_fourier(to_matrix(T), ex(s), patterns, seed, n, mm));
  }, py::arg("Tphi"), py::arg("s"), py::arg("patterns") = 64, py::arg("seed") = 0, py::arg("n") = 0, py::arg("m") = 0);

  m.def("eval_basis", [](const std::string& family, std::size_t count, std::size_t n, double x) {
    return eval_basis(BasisSpec(parse_basis_family(family), count), n, x);
  });
  m.def("fourier_coeffs", [](const std::function<double(double)>& f, const std::string& family, std::size_t N) {
    const BasisSpec spec(parse_basis_family(family), N);
    return to_array(fourier_coeffs(GridFunction::sample(spec.default_grid(), f), spec, N));
  }, "Coefficients of f sampled on the family's default quadrature grid.");

  m.def("run_suite_json", [](const std::string& name, std::uint64_t seed) { return to_json(run_suite(name, seed)); },
        py::arg("name"), py::arg("seed") = 0);
}
