#pragma once

// Momentum-space pipeline: moment matrix elements relative to the
// auxiliary ground state, the reverse-Bessel matrix-element identity,
// the momentum-space ground state, and the radial factor of psi_nl(p)
// assembled two independent ways (reverse-Bessel expansion pushed through
// the moment identity, and the normalized Gegenbauer closed form).
//
// Profiles are stored as prefactor * xi^l * numerator(xi^2) / (1+xi^2)^k
// with xi = n p in Hartree units, keeping all arithmetic exact in xi^2;
// the parity of the profile is carried by l. The global phase
// (-i)^{n-l-1} / i^l accumulated along the operator route is dropped once
// per (n, l); both routes use the same convention, so stored profiles are
// real with a positive prefactor.

#include "cartfact/harmonic.hpp"
#include "cartfact/specialpoly.hpp"

namespace cartfact {

// An internal two-route consistency check failed; always a pipeline bug.
struct CrossCheckFailure : std::logic_error {
  explicit CrossCheckFailure(const std::string& what)
      : std::logic_error(what) {}
};

// prefactor * xi^l * numerator(xi^2) / (1+xi^2)^denom_power, xi = n p.
// Construction cancels common (1+xi^2) factors and enforces
// numerator degree <= denom_power (decay as p -> infinity).
struct MomentumRadial {
  unsigned n;
  unsigned l;
  Poly1 numerator;  // polynomial in xi^2
  unsigned denom_power;
  ExactScalar prefactor;

  MomentumRadial(unsigned n, unsigned l, Poly1 numerator,
                 unsigned denom_power, ExactScalar prefactor);

  double eval(double p) const;
};

// Equality as rational functions of xi^2 (cross-multiplied), exact.
bool operator==(const MomentumRadial& a, const MomentumRadial& b);
inline bool operator!=(const MomentumRadial& a, const MomentumRadial& b) {
  return !(a == b);
}

namespace momentum {

// <p|r^m|phi_n> relative to <p|phi_n>: Q_m(xi^2) n^m / (1+xi^2)^m.
MomentumRadial moment(unsigned m, unsigned n);

// <p|theta_m(r/n)|phi_n> relative to <p|phi_n>: (m+1)! 2^m / (1+xi^2)^m.
// Internally cross-checked against the expansion of theta_m through
// moment(s, n); a mismatch throws CrossCheckFailure.
MomentumRadial theta_me(unsigned m, unsigned n);

// <0|phi_n> = 4 sqrt(2) n^{3/2} / sqrt(pi).
ExactScalar zero_norm(unsigned n);

// phi_n(p) = zero_norm(n) / (1+xi^2)^2.
MomentumRadial phi_momentum(unsigned n);

// Radial factor of psi_nl(p) via the operator route: the Laguerre factor
// expanded in reverse Bessel polynomials, the harmonic polynomial
// extracted (theta_k P_h^l -> theta_{k+l} with a 2^l xi^l bookkeeping
// factor), and each theta matrix element collapsed by theta_me.
MomentumRadial momentum_radial_pipeline(unsigned n, unsigned l);

// The conventional closed form: sqrt(2 (n-l-1)!/(pi (n+l)!)) n^2 xi^l
// C_{n-l-1}^{l+1}((xi^2-1)/(xi^2+1)) 2^{2l+2} l! / (1+xi^2)^{l+2}.
MomentumRadial momentum_radial_closed(unsigned n, unsigned l);

// Evaluates the harmonic polynomial at the momentum components; the full
// wavefunction is this factor / p^l times the radial profile. Throws
// DegreeMismatch unless P is homogeneous harmonic of degree l.
ExactScalar harmonic_momentum_factor(unsigned l, const HarmonicPoly& P,
                                     const ExactScalar& px,
                                     const ExactScalar& py,
                                     const ExactScalar& pz);
double harmonic_momentum_factor(unsigned l, const HarmonicPoly& P, double px,
                                double py, double pz);

}  // namespace momentum

}  // namespace cartfact
