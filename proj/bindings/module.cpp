#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "sqck/ckalgebra.hpp"
#include "sqck/cohomology.hpp"
#include "sqck/realization.hpp"

namespace py = pybind11;
using namespace sqck;

namespace {

OmegaPattern pattern_from(int n, const std::vector<std::string>& omega) {
  std::vector<Rational> vals;
  for (const auto& s : omega) {
    auto q = parse_rational(s);
    if (!q) throw py::value_error("bad rational '" + s + "'");
    vals.push_back(*q);
  }
  return OmegaPattern(n, std::move(vals));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact structure constants and second cohomology of the quaternionic "
            "quasi-unitary Cayley-Klein family";

  m.def("dimension", [](int n) { return (n + 1) * (2 * n + 3); },
        "Dimension of sq_omega(N+1)", py::arg("n"));

  m.def(
      "algebra_json",
      [](int n, const std::vector<std::string>& omega, const std::string& family) {
        OmegaPattern p = pattern_from(n, omega);
        return to_json(build_family(p, parse_family(family))).dump();
      },
      "Bracket table of the requested family as a JSON string", py::arg("n"),
      py::arg("omega"), py::arg("family") = "sq");

  m.def(
      "omega_ab",
      [](int n, const std::vector<std::string>& omega, int a, int b) {
        return to_string(pattern_from(n, omega).omega_ab(a, b));
      },
      py::arg("n"), py::arg("omega"), py::arg("a"), py::arg("b"));

  m.def(
      "jacobi_ok",
      [](int n, const std::vector<std::string>& omega, const std::string& family) {
        OmegaPattern p = pattern_from(n, omega);
        return verify_jacobi(build_family(p, parse_family(family))).empty();
      },
      py::arg("n"), py::arg("omega"), py::arg("family") = "sq");

  m.def(
      "realization_ok",
      [](int n, const std::vector<std::string>& omega) {
        OmegaPattern p = pattern_from(n, omega);
        if (!realization_consistency(p).empty()) return false;
        for (const auto& g : sq_basis(n))
          if (!antihermiticity_check(p, realize_generator(p, g))) return false;
        return true;
      },
      py::arg("n"), py::arg("omega"));

  m.def(
      "h2_json",
      [](int n, const std::vector<std::string>& omega, const std::string& family) {
        OmegaPattern p = pattern_from(n, omega);
        return to_json(h2(build_family(p, parse_family(family)))).dump();
      },
      "Cohomology report (dim Z2/B2/H2 and representatives) as a JSON string",
      py::arg("n"), py::arg("omega"), py::arg("family") = "sq");

  m.def(
      "h2_dim",
      [](int n, const std::vector<std::string>& omega, const std::string& family) {
        OmegaPattern p = pattern_from(n, omega);
        return h2(build_family(p, parse_family(family))).dim_h2;
      },
      py::arg("n"), py::arg("omega"), py::arg("family") = "sq");

  m.def(
      "type3_count",
      [](int n, const std::vector<std::string>& omega) {
        return unitary_type3_count(pattern_from(n, omega));
      },
      py::arg("n"), py::arg("omega"));
}
