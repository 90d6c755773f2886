#pragma once

// Bound-state construction through the radial raising chain
//   |psi_nl> = B_r^dag(l) ... B_r^dag(n-2) r^{n-l-1} P_h^l |phi_n>
// with symbolic eigen-verification against H(1), energies, degeneracies
// and the closed-form normalization constants.

#include "cartfact/opalgebra.hpp"
#include "cartfact/specialpoly.hpp"

namespace cartfact {

struct EigenState {
  unsigned n;
  unsigned l;
  unsigned harmonic_index;  // index into harmonic::basis(l)
  MultOp reduced;           // M with |psi_nl> = M |phi_n>
};

namespace spectrum {

// Throws DomainError unless 1 <= n, l <= n-1 and the harmonic index is
// valid. The symbolic chain is intended for n <= 5; larger n go through
// the radial coefficient recurrence instead.
EigenState build_state(unsigned n, unsigned l, unsigned harmonic_index);

// reduce_on_phi(H(1) M, n) - E(n) M; the zero MultOp iff the chain state
// is an exact eigenstate.
MultOp verify_eigen(unsigned n, unsigned l, unsigned harmonic_index);

// Residual of the same construction with arbitrary chain parameters nu
// (in place of l, l+1, ..., n-2) and auxiliary lambda (in place of n).
// Nonzero whenever the parameters deviate from the forced integers.
MultOp perturbed_residual(unsigned n, unsigned l, unsigned harmonic_index,
                          const std::vector<Rational>& nu,
                          const Rational& lambda);

// E(n) = -1/(2 n^2) hartree
ExactScalar energy(unsigned n);

// sqrt(2^{n-l-1} / prod_{j=l+1}^{n-1} (1/j^2 - 1/n^2))
ExactScalar norm_constant(unsigned n, unsigned l);

struct MultipletRow {
  unsigned n;
  ExactScalar energy_hartree;
  std::vector<unsigned> l_list;
  unsigned degeneracy;  // n^2
};

std::vector<MultipletRow> multiplet_table(unsigned max_n);

}  // namespace spectrum

}  // namespace cartfact
