#include "cartfact/spectrum.hpp"

#include "cartfact/harmonic.hpp"

namespace cartfact::spectrum {

namespace {

MultOp chain_state(unsigned n, unsigned l, unsigned harmonic_index,
                   const std::vector<Rational>& nu, const Rational& lambda) {
  auto hb = harmonic::basis(l);
  if (harmonic_index >= hb.size())
    throw DomainError("build_state: harmonic index out of range");
  OpExpr expr = OpExpr::scalar(ExactScalar(rat(1)));
  for (const Rational& v : nu) expr *= b_dag(v);
  expr *= OpExpr::r_pow(int(n - l - 1)) * from_poly(hb[harmonic_index].poly);
  return reduce_on_phi(expr, lambda);
}

std::vector<Rational> consecutive_nu(unsigned n, unsigned l) {
  std::vector<Rational> nu;
  for (unsigned j = l; j + 2 <= n; ++j) nu.push_back(rat(j));
  return nu;
}

}  // namespace

EigenState build_state(unsigned n, unsigned l, unsigned harmonic_index) {
  if (n < 1 || l >= n) throw DomainError("build_state: need 0 <= l <= n-1");
  return {n, l, harmonic_index,
          chain_state(n, l, harmonic_index, consecutive_nu(n, l), rat(n))};
}

MultOp verify_eigen(unsigned n, unsigned l, unsigned harmonic_index) {
  EigenState st = build_state(n, l, harmonic_index);
  MultOp lhs = reduce_on_phi(hamiltonian(rat(1)) * st.reduced.to_expr(),
                             rat(n));
  return lhs - energy(n) * st.reduced;
}

MultOp perturbed_residual(unsigned n, unsigned l, unsigned harmonic_index,
                          const std::vector<Rational>& nu,
                          const Rational& lambda) {
  if (n < 1 || l >= n)
    throw DomainError("perturbed_residual: need 0 <= l <= n-1");
  MultOp st = chain_state(n, l, harmonic_index, nu, lambda);
  MultOp lhs = reduce_on_phi(hamiltonian(rat(1)) * st.to_expr(), lambda);
  return lhs - energy(n) * st;
}

ExactScalar energy(unsigned n) {
  return ExactScalar(rat(-1, 2 * long(n) * long(n)));
}

ExactScalar norm_constant(unsigned n, unsigned l) {
  if (l >= n) throw DomainError("norm_constant: need 0 <= l <= n-1");
  Rational prod(1);
  for (unsigned j = l + 1; j < n; ++j)
    prod *= rat(1, long(j) * j) - rat(1, long(n) * n);
  Rational arg = pow_rat(rat(2), long(n - l - 1)) / prod;
  return ExactScalar::sqrt_of(arg);
}

std::vector<MultipletRow> multiplet_table(unsigned max_n) {
  if (max_n < 1) throw DomainError("multiplet_table: need max_n >= 1");
  std::vector<MultipletRow> rows;
  for (unsigned n = 1; n <= max_n; ++n) {
    MultipletRow row{n, energy(n), {}, 0};
    for (unsigned l = 0; l < n; ++l) {
      row.l_list.push_back(l);
      row.degeneracy += 2 * l + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cartfact::spectrum
