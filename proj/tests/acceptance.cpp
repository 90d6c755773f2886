// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime budgets are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "cartfact/momentum.hpp"
#include "cartfact/opalgebra.hpp"
#include "cartfact/radial.hpp"
#include "cartfact/spectrum.hpp"
#include "cartfact/verify.hpp"

using namespace cartfact;

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kFourierTol = 1e-8;
constexpr double kSeriesTol = 1e-12;

int failures = 0;

void criterion(int number, const char* what, double budget_s,
               const std::function<bool()>& check) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = check();
  } catch (const std::exception& e) {
    std::printf("criterion %2d: FAIL (%s: exception %s)\n", number, what,
                e.what());
    ++failures;
    return;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed > budget_s) ok = false;
  std::printf("criterion %2d: %s (%s, %.2fs)\n", number, ok ? "PASS" : "FAIL",
              what, elapsed);
  if (!ok) ++failures;
}

bool energies_exact() {
  auto rows = spectrum::multiplet_table(5);
  const long dens[] = {2, 8, 18, 32, 50};
  for (unsigned n = 1; n <= 5; ++n)
    if (rows[n - 1].energy_hartree != ExactScalar(rat(-1, dens[n - 1])))
      return false;
  return true;
}

bool operator_identities() {
  const ExactScalar I = ExactScalar::i();
  const OpExpr shift = OpExpr::scalar(I * ExactScalar::sqrt_of(rat(2))) *
                       OpExpr::r_pow(-1);
  auto tshift = [&](const Rational& c) {
    return tperp() -
           OpExpr::scalar(ExactScalar(Rational(c / 2))) * OpExpr::r_pow(-2);
  };

  for (const Rational& lam : {rat(1), rat(2), rat(1, 2)}) {
    OpExpr sum;
    for (unsigned a = 0; a < 3; ++a) sum += a_dag(lam, a) * a_op(lam, a);
    if (!check_identity(sum, hamiltonian(lam) - energy_shift(lam)))
      return false;
  }
  if (commutator(OpExpr::r_pow(1), pr()) != OpExpr::scalar(I)) return false;
  if (!commutator(tperp(), OpExpr::r_pow(1)).is_zero()) return false;
  if (!check_identity(commutator(pr(), tperp()),
                      OpExpr::scalar(ExactScalar(rat(2)) * I) *
                          (OpExpr::r_pow(-1) * tperp())))
    return false;

  for (const Rational& lam : {rat(0), rat(1), rat(2)}) {
    OpExpr bd = b_dag(lam);
    OpExpr b = bd.adjoint();
    OpExpr lower = OpExpr::scalar(ExactScalar(Rational(lam * (lam + 1) / 2))) *
                   OpExpr::r_pow(-2);
    OpExpr upper =
        OpExpr::scalar(ExactScalar(Rational((lam + 1) * (lam + 2) / 2))) *
        OpExpr::r_pow(-2);
    if (!check_identity(hamiltonian(rat(1)),
                        bd * b + tperp() - lower + energy_shift(lam + 1)))
      return false;
    if (!check_identity(hamiltonian(rat(1)),
                        b * bd + tperp() - upper + energy_shift(lam + 1)))
      return false;
    OpExpr rhs =
        b_dag(lam) * (hamiltonian(rat(1)) +
                      OpExpr::scalar(ExactScalar(Rational(lam + 1))) *
                          OpExpr::r_pow(-2)) -
        shift * tshift(lam * (lam + 1));
    if (!check_identity(hamiltonian(rat(1)) * b_dag(lam), rhs)) return false;
  }

  struct NL {
    unsigned n, l;
  };
  for (const NL& c : {NL{3, 1}, NL{4, 2}, NL{4, 1}}) {
    OpExpr chain = OpExpr::scalar(ExactScalar(rat(1)));
    OpExpr shifted_chain = chain;
    for (unsigned j = c.l; j + 2 <= c.n; ++j) {
      chain *= b_dag(rat(j));
      shifted_chain *= b_dag(rat(j)) - shift;
    }
    Rational s(0);
    for (unsigned j = 1; j <= c.n - c.l - 1; ++j) s += c.n - j;
    OpExpr rhs =
        chain * (hamiltonian(rat(1)) +
                 OpExpr::scalar(ExactScalar(s)) * OpExpr::r_pow(-2)) +
        (shifted_chain - chain) * tshift(rat(c.l * (c.l + 1)));
    if (!check_identity(hamiltonian(rat(1)) * chain, rhs)) return false;
  }
  return true;
}

bool eigen_verification() {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned l = 0; l < n; ++l)
      for (unsigned m = 0; m < 2 * l + 1; ++m)
        if (!spectrum::verify_eigen(n, l, m).is_zero()) return false;
  return !spectrum::perturbed_residual(3, 0, 0, {rat(1), rat(1)}, rat(3))
              .is_zero();
}

bool radial_three_routes() {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned l = 0; l < n; ++l) {
      if (radial::rodrigues_radial(n, l).poly !=
          radial::chain_radial(n, l).poly)
        return false;
      if (spectrum::norm_constant(n, l) * radial::chain_radial(n, l).poly !=
          radial::closed_form_radial(n, l).poly)
        return false;
    }
  // explicit low members
  if (radial::closed_form_radial(1, 0).poly !=
      Poly1::constant(ExactScalar(rat(2))))
    return false;
  if (radial::closed_form_radial(2, 1).poly !=
      Poly1::monomial(1, ExactScalar::sqrt_of(rat(1, 24))))
    return false;
  return true;
}

bool exact_orthonormality() {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned np = 1; np <= 8; ++np)
      for (unsigned l = 0; l < std::min(n, np); ++l)
        if (radial::radial_overlap(n, np, l) !=
            (n == np ? ExactScalar(rat(1)) : ExactScalar()))
          return false;
  return true;
}

bool momentum_polynomials() {
  for (unsigned m = 0; m <= 30; ++m)
    if (q_recurrence(m) != q_closed(m)) return false;
  for (unsigned j = 0; j <= 20; ++j)
    if (reverse_bessel_derivative_recurrence(j) != reverse_bessel(j))
      return false;
  for (unsigned m = 0; m <= 15; ++m) {
    // theta_me cross-checks the moment expansion internally and throws
    MomentumRadial t = momentum::theta_me(m, 3);
    Rational expect(factorial(m + 1) * pow_rat(rat(2), long(m)).get_num());
    if (t != MomentumRadial(3, 0, Poly1::constant(ExactScalar(rat(1))), m,
                            ExactScalar(expect)))
      return false;
  }
  return true;
}

bool momentum_two_routes() {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned l = 0; l < n; ++l)
      if (momentum::momentum_radial_pipeline(n, l) !=
          momentum::momentum_radial_closed(n, l))
        return false;
  return true;
}

bool numeric_cross_checks() {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned l = 0; l < n; ++l)
      if (verify::fourier_check(n, l, {0.3, 0.9, 1.7}) > kFourierTol)
        return false;
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned l = 0; l < n; ++l) {
      if (verify::coordinate_norm_deviation(n, l) > kNormTol) return false;
      if (verify::momentum_norm_deviation(n, l) > kNormTol) return false;
    }
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned l = 0; l < n; ++l)
      if (!verify::ode_residual(n, l).is_zero()) return false;
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned l = 0; l < n; ++l)
      if (!verify::frobenius(rat(n), l, 100).terminated) return false;
  return !verify::frobenius(rat(5, 2), 0, 50).terminated &&
         !verify::frobenius(rat(1, 3), 2, 80).terminated;
}

bool ground_state_series() {
  double got = radial::ground_state_series(10.0, 100);
  return std::abs(got - std::exp(-10.0)) / std::exp(-10.0) < kSeriesTol;
}

bool harmonic_suite() {
  for (unsigned l = 0; l <= 6; ++l) {
    auto basis = harmonic::basis(l);
    if (basis.size() != 2 * l + 1) return false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!harmonic::laplacian(basis[i].poly).is_zero()) return false;
      if (l > 0 && harmonic::euler_degree(basis[i].poly) != l) return false;
      for (std::size_t j = 0; j <= i; ++j) {
        ExactScalar ip = ExactScalar(rat(4)) * ExactScalar::pi_pow_half(2) *
                         harmonic::sphere_average_exact(basis[i].poly,
                                                        basis[j].poly);
        if (ip != (i == j ? ExactScalar(rat(1)) : ExactScalar()))
          return false;
      }
    }
  }
  // l <= 2: the listed spans (z, x, y and the five standard quadratics)
  auto in_span = [](unsigned l, const XPoly& p) {
    XPoly projected;
    for (const HarmonicPoly& h : harmonic::basis(l)) {
      ExactScalar ip = ExactScalar(rat(4)) * ExactScalar::pi_pow_half(2) *
                       harmonic::sphere_average_exact(p, h.poly);
      projected += ip * h.poly;
    }
    return projected == p;
  };
  const ExactScalar one(rat(1));
  for (unsigned a = 0; a < 3; ++a) {
    Exponents e{0, 0, 0};
    e[a] = 1;
    if (!in_span(1, XPoly::monomial(e, one))) return false;
  }
  std::vector<XPoly> quads;
  quads.push_back(ExactScalar(rat(2)) * XPoly::monomial({0, 0, 2}, one) -
                  XPoly::monomial({2, 0, 0}, one) -
                  XPoly::monomial({0, 2, 0}, one));
  quads.push_back(XPoly::monomial({2, 0, 0}, one) -
                  XPoly::monomial({0, 2, 0}, one));
  quads.push_back(XPoly::monomial({1, 1, 0}, one));
  quads.push_back(XPoly::monomial({1, 0, 1}, one));
  quads.push_back(XPoly::monomial({0, 1, 1}, one));
  for (const XPoly& q : quads)
    if (!in_span(2, q)) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "bound-state energies exact through n = 5", 1.0,
            energies_exact);
  criterion(2, "operator identity suite exact", 30.0, operator_identities);
  criterion(3, "symbolic eigen-verification, 30 states plus negative test",
            120.0, eigen_verification);
  criterion(4, "radial three-route agreement through n = 10", 10.0,
            radial_three_routes);
  criterion(5, "exact radial orthonormality through n = 8", 5.0,
            exact_orthonormality);
  criterion(6, "momentum polynomial identities", 10.0, momentum_polynomials);
  criterion(7, "momentum pipeline equals closed form through n = 10", 20.0,
            momentum_two_routes);
  criterion(8, "numeric cross-representation checks", 60.0,
            numeric_cross_checks);
  criterion(9, "ground-state power series reproduces the exponential", 1.0,
            ground_state_series);
  criterion(10, "harmonic polynomial suite through l = 6", 30.0,
            harmonic_suite);
  std::printf("%s\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return failures == 0 ? 0 : 1;
}
