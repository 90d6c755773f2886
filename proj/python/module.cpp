// Python bindings for the main operations: spectra, radial and momentum
// wavefunctions, harmonic bases, and the verification entry points.
// Exact scalars cross the boundary as their canonical strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cartfact/momentum.hpp"
#include "cartfact/radial.hpp"
#include "cartfact/spectrum.hpp"
#include "cartfact/verify.hpp"

namespace py = pybind11;
using namespace cartfact;

namespace {

std::vector<std::string> coeff_strings(const Poly1& p) {
  std::vector<std::string> out;
  for (const ExactScalar& c : p.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_cartfact, m) {
  m.doc() = "Exact hydrogen bound states via Cartesian operator "
            "factorization";

  m.def("energy", [](unsigned n) { return spectrum::energy(n).to_double(); },
        py::arg("n"), "Bound-state energy -1/(2 n^2) in hartree");
  m.def("energy_exact",
        [](unsigned n) { return spectrum::energy(n).str(); }, py::arg("n"));

  m.def("multiplet_table", [](unsigned max_n) {
    py::list rows;
    for (const auto& row : spectrum::multiplet_table(max_n)) {
      py::dict d;
      d["n"] = row.n;
      d["energy_hartree"] = row.energy_hartree.to_double();
      d["energy_exact"] = row.energy_hartree.str();
      d["l_list"] = row.l_list;
      d["degeneracy"] = row.degeneracy;
      rows.append(d);
    }
    return rows;
  }, py::arg("max_n"));

  py::class_<RadialState>(m, "RadialState")
      .def_readonly("n", &RadialState::n)
      .def_readonly("l", &RadialState::l)
      .def("eval", &RadialState::eval, py::arg("r"))
      .def("coefficients",
           [](const RadialState& s) { return coeff_strings(s.poly); },
           "Coefficients of the rho = 2r/n polynomial factor");

  m.def("radial", &radial::closed_form_radial, py::arg("n"), py::arg("l"),
        "Normalized radial wavefunction R_nl");
  m.def("radial_routes_agree", [](unsigned n, unsigned l) {
    return radial::rodrigues_radial(n, l).poly ==
               radial::chain_radial(n, l).poly &&
           spectrum::norm_constant(n, l) * radial::chain_radial(n, l).poly ==
               radial::closed_form_radial(n, l).poly;
  }, py::arg("n"), py::arg("l"));

  py::class_<MomentumRadial>(m, "MomentumRadial")
      .def_readonly("n", &MomentumRadial::n)
      .def_readonly("l", &MomentumRadial::l)
      .def_readonly("denom_power", &MomentumRadial::denom_power)
      .def("eval", &MomentumRadial::eval, py::arg("p"))
      .def("prefactor",
           [](const MomentumRadial& s) { return s.prefactor.str(); })
      .def("numerator",
           [](const MomentumRadial& s) { return coeff_strings(s.numerator); });

  m.def("momentum", &momentum::momentum_radial_closed, py::arg("n"),
        py::arg("l"), "Radial factor of the momentum-space wavefunction");
  m.def("momentum_routes_agree", [](unsigned n, unsigned l) {
    return momentum::momentum_radial_pipeline(n, l) ==
           momentum::momentum_radial_closed(n, l);
  }, py::arg("n"), py::arg("l"));

  m.def("harmonic_basis", [](unsigned l) {
    py::list basis;
    for (const HarmonicPoly& h : harmonic::basis(l)) {
      py::list terms;
      for (const auto& [e, c] : h.poly.terms())
        terms.append(py::make_tuple(e[0], e[1], e[2], c.str()));
      basis.append(terms);
    }
    return basis;
  }, py::arg("l"), "2l+1 orthonormal harmonic polynomials as term lists");

  m.def("verify_eigen_zero", [](unsigned n, unsigned l, unsigned m_) {
    return spectrum::verify_eigen(n, l, m_).is_zero();
  }, py::arg("n"), py::arg("l"), py::arg("harmonic_index"));
  m.def("ode_residual_zero", [](unsigned n, unsigned l) {
    return verify::ode_residual(n, l).is_zero();
  }, py::arg("n"), py::arg("l"));
  m.def("fourier_check", &verify::fourier_check, py::arg("n"), py::arg("l"),
        py::arg("p_samples"));

  py::register_exception<DomainError>(m, "DomainError");
}
