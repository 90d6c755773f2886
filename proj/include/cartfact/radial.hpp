#pragma once

// Coordinate-space radial wavefunctions R_nl computed three independent
// ways: the raising-chain coefficient recurrence, the operator Rodrigues
// formula, and the normalized Laguerre closed form. All three agree
// exactly (the first two up to the closed form's normalization constant).

#include <cmath>

#include "cartfact/specialpoly.hpp"

namespace cartfact {

// Polynomial factor in rho = 2r/n with an implicit e^{-rho/2}; the full
// radial function is poly(rho) e^{-rho/2}.
struct RadialState {
  unsigned n;
  unsigned l;
  Poly1 poly;

  double eval(double r) const {
    double rho = 2.0 * r / n;
    return poly.eval_double(rho) * std::exp(-rho / 2);
  }
};

namespace radial {

// (2/n)^{n+1/2} / sqrt((2n)!), the value of the auxiliary ground-state
// wavefunction at the origin; satisfies the n=l-max normalization
// integral exactly.
ExactScalar coord_norm_const(unsigned n);

// Applies the B^dag action on r-power coefficients, lambda = n-2 down to
// l: new a_mu = (1/sqrt2)[(1/n + 1/(lambda+1)) a_mu - (mu+lambda+3)
// a_{mu+1}] (the i and (-i)^{n-l-1} phases cancel), scaled by
// coord_norm_const(n). Sign fixed so the rho^l coefficient is positive.
RadialState chain_radial(unsigned n, unsigned l);

// Same object through the operator Rodrigues identity: the prefactor
// (2n-1)! l! / (2^{n-l-1} (n+l)! (n-1)!) (1/sqrt2)^{n-l-1} times
// r^{-l-1} (d/dr - 2/n)^{n-l-1} r^{n+l}, carried out on the polynomial
// factor, scaled by coord_norm_const(n). Same sign convention.
RadialState rodrigues_radial(unsigned n, unsigned l);

// sqrt((2/n)^3 (n-l-1)!/(2n (n+l)!)) rho^l L_{n-l-1}^{2l+1}(rho), the
// fully normalized textbook form.
RadialState closed_form_radial(unsigned n, unsigned l);

// Exact integral of R_nl R_n'l r^2 dr over [0, inf) for the normalized
// closed forms; delta_{nn'} for eigenstates.
ExactScalar radial_overlap(unsigned n, unsigned nprime, unsigned l);

// Partial sum sum_{k<terms} (-r)^k / k!, converging to e^{-r}; the
// algebraic power-series route to the ground state.
double ground_state_series(double r, unsigned terms);

}  // namespace radial

}  // namespace cartfact
