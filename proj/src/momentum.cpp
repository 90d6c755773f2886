#include "cartfact/momentum.hpp"

#include <cmath>

namespace cartfact {

namespace {

Poly1 one_plus_v_pow(unsigned k) {
  std::vector<ExactScalar> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) c[j] = ExactScalar(Rational(binomial(k, j)));
  return Poly1(std::move(c));
}

void check_nl(unsigned n, unsigned l, const char* who) {
  if (n < 1 || l >= n)
    throw DomainError(std::string(who) + ": need 0 <= l <= n-1");
}

}  // namespace

MomentumRadial::MomentumRadial(unsigned n_, unsigned l_, Poly1 num,
                               unsigned k, ExactScalar pref)
    : n(n_), l(l_), numerator(std::move(num)), denom_power(k),
      prefactor(std::move(pref)) {
  if (n < 1) throw DomainError("MomentumRadial: need n >= 1");
  // cancel common (1+xi^2) factors by synthetic division
  const ExactScalar minus_one(rat(-1));
  while (denom_power > 0 && !numerator.is_zero() &&
         numerator.eval_exact(minus_one).is_zero()) {
    std::vector<ExactScalar> q(numerator.degree());
    ExactScalar carry = numerator.coeff(numerator.degree());
    for (int j = numerator.degree() - 1; j >= 0; --j) {
      q[j] = carry;
      carry = numerator.coeff(j) - carry;
    }
    numerator = Poly1(std::move(q));
    --denom_power;
  }
  if (numerator.degree() > int(denom_power))
    throw DomainError("MomentumRadial: numerator degree exceeds denom power");
}

double MomentumRadial::eval(double p) const {
  double xi = n * p;
  double v = xi * xi;
  return prefactor.to_double() * std::pow(xi, double(l)) *
         numerator.eval_double(v) / std::pow(1 + v, double(denom_power));
}

bool operator==(const MomentumRadial& a, const MomentumRadial& b) {
  if (a.n != b.n || a.l != b.l) return false;
  return a.prefactor * (a.numerator * one_plus_v_pow(b.denom_power)) ==
         b.prefactor * (b.numerator * one_plus_v_pow(a.denom_power));
}

namespace momentum {

MomentumRadial moment(unsigned m, unsigned n) {
  if (n < 1) throw DomainError("moment: need n >= 1");
  return MomentumRadial(n, 0, q_closed(m), m,
                        ExactScalar(pow_rat(rat(long(n)), long(m))));
}

MomentumRadial theta_me(unsigned m, unsigned n) {
  if (n < 1) throw DomainError("theta_me: need n >= 1");
  Rational pref(factorial(m + 1) * pow_rat(rat(2), long(m)).get_num());
  MomentumRadial closed(n, 0, Poly1::constant(ExactScalar(rat(1))), m,
                        ExactScalar(pref));
  // independent route: expand theta_m in powers of r/n, each power
  // collapsing to Q_s(xi^2)/(1+xi^2)^s relative to <p|phi_n>
  Poly1 th = reverse_bessel(m);
  Poly1 num;
  for (unsigned s = 0; s <= unsigned(th.degree()); ++s)
    num += th.coeff(s) * (q_closed(s) * one_plus_v_pow(m - s));
  MomentumRadial expanded(n, 0, num, m, ExactScalar(rat(1)));
  if (!(closed == expanded))
    throw CrossCheckFailure("theta_me: moment expansion disagrees with the "
                            "closed form");
  return closed;
}

ExactScalar zero_norm(unsigned n) {
  if (n < 1) throw DomainError("zero_norm: need n >= 1");
  Rational arg(Int(32) * Int(n) * Int(n) * Int(n));
  return ExactScalar::sqrt_of(arg) * ExactScalar::pi_pow_half(-1);
}

MomentumRadial phi_momentum(unsigned n) {
  return MomentumRadial(n, 0, Poly1::constant(ExactScalar(rat(1))), 2,
                        zero_norm(n));
}

MomentumRadial momentum_radial_pipeline(unsigned n, unsigned l) {
  check_nl(n, l, "momentum_radial_pipeline");
  BesselExpansion ex = bessel_expansion_coeffs(n, l);
  Poly1 num;
  for (unsigned k = 0; k < ex.coeffs.size(); ++k) {
    MomentumRadial t = theta_me(k + l, n);
    num += (ex.coeffs[k] * t.prefactor) *
           (t.numerator * one_plus_v_pow((n - 1) - (k + l)));
  }
  Rational arg = Rational(factorial(n - l - 1)) /
                 Rational(Int(n) * factorial(n + l) * factorial(n + l) *
                          factorial(n + l));
  arg.canonicalize();
  ExactScalar pref = ExactScalar::sqrt_of(arg) *
                     ExactScalar(pow_rat(rat(2), long(l))) * zero_norm(n);
  return MomentumRadial(n, l, std::move(num), n + 1, pref);
}

MomentumRadial momentum_radial_closed(unsigned n, unsigned l) {
  check_nl(n, l, "momentum_radial_closed");
  Poly1 g = gegenbauer_series_u(n - l - 1, l);
  Poly1 num;
  for (unsigned j = 0; j <= unsigned(g.degree()); ++j)
    num += g.coeff(j) * one_plus_v_pow((n - l - 1) - j);
  Rational arg = rat(2) * Rational(factorial(n - l - 1)) /
                 Rational(factorial(n + l));
  arg.canonicalize();
  Rational scale(pow_rat(rat(2), 2 * long(l) + 2).get_num() * factorial(l) *
                 Int(n) * Int(n));
  ExactScalar pref = ExactScalar::sqrt_of(arg) * ExactScalar::pi_pow_half(-1) *
                     ExactScalar(scale);
  return MomentumRadial(n, l, std::move(num), n + 1, pref);
}

namespace {

void check_harmonic(unsigned l, const HarmonicPoly& P) {
  if (P.poly.is_zero() || !P.poly.is_homogeneous() ||
      P.poly.total_degree() != l || P.degree != l ||
      !harmonic::laplacian(P.poly).is_zero())
    throw DegreeMismatch(
        "harmonic_momentum_factor: need homogeneous harmonic of degree l");
}

}  // namespace

ExactScalar harmonic_momentum_factor(unsigned l, const HarmonicPoly& P,
                                     const ExactScalar& px,
                                     const ExactScalar& py,
                                     const ExactScalar& pz) {
  check_harmonic(l, P);
  return P.poly.eval_exact(px, py, pz);
}

double harmonic_momentum_factor(unsigned l, const HarmonicPoly& P, double px,
                                double py, double pz) {
  check_harmonic(l, P);
  return P.poly.eval(px, py, pz);
}

}  // namespace momentum

}  // namespace cartfact
