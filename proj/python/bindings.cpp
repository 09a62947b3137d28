#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qschur/cache.hpp"
#include "qschur/verify.hpp"

namespace py = pybind11;
using namespace qschur;

// everything crosses the boundary as JSON text; the Python wrapper decodes it
namespace {

std::string product_json(int n, int r, const std::string& x, const std::string& a, const std::string& engine) {
  auto e = parse_engine(engine);
  if (!e) throw InvalidArgument("unknown engine: " + engine);
  SuperMatrix xm = super_matrix_from_json(parse_json(x), n), am = super_matrix_from_json(parse_json(a), n);
  if (xm.total() != r || am.total() != r) throw InvalidArgument("both matrices must have |M| = r");
  return to_json(product(xm, am, *e)).dump();
}

std::string general_product_json(int n, int r, const std::string& x, const std::string& y, const std::string& engine) {
  auto e = parse_engine(engine);
  if (!e) throw InvalidArgument("unknown engine: " + engine);
  return to_json(general_product(qelement_from_json(parse_json(x), n, r), qelement_from_json(parse_json(y), n, r), *e))
      .dump();
}

std::string basis_json(int n, int r) {
  json out = json::array();
  for (const auto& m : super_matrices(n, r)) out.push_back(to_json(m));
  return out.dump();
}

std::string sergeev_multiply_json(int r, const std::string& a, const std::string& b) {
  return to_json(sergeev_from_json(parse_json(a), r) * sergeev_from_json(parse_json(b), r)).dump();
}

std::vector<int> d_matrix(const std::string& m) {
  NatMatrix nm = super_matrix_from_json(parse_json(m)).abs();
  return d_of_matrix(nm).images();
}

std::string gen_mul_json(const std::string& gen, int h, const std::string& matrix, const std::vector<int>& j) {
  auto g = parse_gen_tag(gen);
  if (!g) throw InvalidArgument("unknown generator: " + gen);
  return to_json(gen_mul(*g, h, ASpec(super_matrix_from_json(parse_json(matrix)), j))).dump();
}

std::string realize_json(const std::string& matrix, const std::vector<int>& j, int rmax) {
  return to_json(TruncatedFamily::of(ASpec(super_matrix_from_json(parse_json(matrix)), j), rmax)).dump();
}

std::string triangular_json(const std::string& matrix, int R) {
  SuperMatrix a = super_matrix_from_json(parse_json(matrix));
  return to_json(triangular_product(a, R > 0 ? R : a.total())).dump();
}

std::string verify_json(const std::string& suite, int n, int rmax, int amax, int chain_rmax, const std::string& name) {
  SuiteOptions o;
  o.n = n;
  o.rmax = rmax;
  o.amax = amax;
  o.chain_rmax = chain_rmax;
  o.name = name;
  SuiteResult res;
  {
    py::gil_scoped_release release;
    res = run_suite(suite, o);
  }
  return res.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic for the Sergeev superalgebra and the queer Schur superalgebra";
  m.attr("__version__") = kLibraryVersion;

  // translators run most-recent first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DegreeMismatch>(m, "DegreeMismatch", PyExc_ValueError);

  m.def("product", &product_json, py::arg("n"), py::arg("r"), py::arg("x"), py::arg("a"), py::arg("engine") = "auto");
  m.def("general_product", &general_product_json, py::arg("n"), py::arg("r"), py::arg("x"), py::arg("y"),
        py::arg("engine") = "oracle");
  m.def("basis", &basis_json, py::arg("n"), py::arg("r"));
  m.def("dimension", &count_super_matrices, py::arg("n"), py::arg("r"));
  m.def("sergeev_multiply", &sergeev_multiply_json, py::arg("r"), py::arg("a"), py::arg("b"));
  m.def("d_matrix", &d_matrix, py::arg("matrix"));
  m.def("gen_mul", &gen_mul_json, py::arg("gen"), py::arg("h"), py::arg("matrix"), py::arg("j"));
  m.def("realize", &realize_json, py::arg("matrix"), py::arg("j"), py::arg("rmax"));
  m.def("triangular", &triangular_json, py::arg("matrix"), py::arg("R") = 0);
  m.def("verify", &verify_json, py::arg("suite"), py::arg("n") = 2, py::arg("rmax") = 3, py::arg("amax") = -1,
        py::arg("chain_rmax") = 0, py::arg("name") = "");
  m.def("suite_names", &suite_names);
}
