#include "cartfact/radial.hpp"

namespace cartfact::radial {

namespace {

void check_nl(unsigned n, unsigned l, const char* who) {
  if (n < 1 || l >= n)
    throw DomainError(std::string(who) + ": need 0 <= l <= n-1");
}

// Re-expresses an r-coefficient list (with a common scalar prefactor) in
// rho = 2r/n and fixes the sign so the rho^l coefficient is positive.
RadialState finish(unsigned n, unsigned l, const std::vector<Rational>& a,
                   ExactScalar scale) {
  std::vector<ExactScalar> c(a.size());
  if (a[l] < 0) scale = -scale;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Rational v = a[j] * pow_rat(rat(n, 2), long(j));
    v.canonicalize();
    c[j] = scale * ExactScalar(v);
  }
  return {n, l, Poly1(std::move(c))};
}

}  // namespace

ExactScalar coord_norm_const(unsigned n) {
  if (n < 1) throw DomainError("coord_norm_const: need n >= 1");
  Rational arg = pow_rat(rat(2, long(n)), 2 * long(n) + 1) /
                 Rational(factorial(2 * n));
  arg.canonicalize();
  return ExactScalar::sqrt_of(arg);
}

RadialState chain_radial(unsigned n, unsigned l) {
  check_nl(n, l, "chain_radial");
  std::vector<Rational> a(n, Rational(0));
  a[n - 1] = 1;
  for (unsigned lam = n - 1; lam-- > l;) {
    std::vector<Rational> b(n, Rational(0));
    for (unsigned mu = 0; mu < n; ++mu) {
      Rational v = (rat(1, n) + rat(1, lam + 1)) * a[mu];
      if (mu + 1 < n) v -= Rational(mu + lam + 3) * a[mu + 1];
      v.canonicalize();
      b[mu] = v;
    }
    a = std::move(b);
  }
  ExactScalar scale =
      ExactScalar::sqrt_of(pow_rat(rat(1, 2), long(n - l - 1))) *
      coord_norm_const(n);
  return finish(n, l, a, scale);
}

RadialState rodrigues_radial(unsigned n, unsigned l) {
  check_nl(n, l, "rodrigues_radial");
  const unsigned k = n - l - 1;
  // (d/dr - 2/n)^k applied to r^{n+l}, then divided by r^{l+1}
  Poly1 g = Poly1::monomial(n + l, ExactScalar(rat(1)));
  const ExactScalar rate(rat(2, n));
  for (unsigned step = 0; step < k; ++step)
    g = g.derivative() - rate * g;
  g = g.shifted_down(l + 1);

  Rational pref(factorial(2 * n - 1) * factorial(l),
                pow_rat(rat(2), k).get_num() * factorial(n + l) *
                    factorial(n - 1));
  pref.canonicalize();
  ExactScalar scale = ExactScalar(pref) *
                      ExactScalar::sqrt_of(pow_rat(rat(1, 2), long(k))) *
                      coord_norm_const(n);

  std::vector<Rational> a(n, Rational(0));
  for (unsigned j = 0; j < n; ++j)
    if (int(j) <= g.degree()) a[j] = g.coeff(j).to_rational();
  // the (i)^k phase against (-i)^k from the nested commutators gives
  // (-1)^k, absorbed by the sign convention in finish()
  return finish(n, l, a, scale);
}

RadialState closed_form_radial(unsigned n, unsigned l) {
  check_nl(n, l, "closed_form_radial");
  Rational arg = pow_rat(rat(2, n), 3) *
                 Rational(factorial(n - l - 1), 2 * long(n) * factorial(n + l));
  arg.canonicalize();
  ExactScalar pref = ExactScalar::sqrt_of(arg);
  Poly1 poly = pref * laguerre(n - l - 1, 2 * l + 1).shifted_up(l);
  return {n, l, std::move(poly)};
}

ExactScalar radial_overlap(unsigned n, unsigned nprime, unsigned l) {
  if (l >= n || l >= nprime)
    throw DomainError("radial_overlap: need l < min(n, n')");
  // express both in r: p(rho) with rho = 2r/n
  auto in_r = [](const RadialState& s) {
    return s.poly.compose_linear(ExactScalar(rat(2, s.n)), ExactScalar());
  };
  Poly1 integrand = in_r(closed_form_radial(n, l)) *
                    in_r(closed_form_radial(nprime, l)) *
                    Poly1::monomial(2, ExactScalar(rat(1)));
  Rational a = rat(1, n) + rat(1, nprime);
  a.canonicalize();
  return exp_weighted_integral(integrand, a);
}

double ground_state_series(double r, unsigned terms) {
  // exact rational accumulation: the alternating series cancels to
  // e^{-r}, far below the size of its leading terms, so summing in
  // doubles would lose the result to roundoff
  Rational x(r);  // binary-exact conversion
  Rational sum(0), term(1);
  for (unsigned k = 0; k < terms; ++k) {
    sum += term;
    term *= -x / Rational(k + 1);
    term.canonicalize();
  }
  sum.canonicalize();
  return sum.get_d();
}

}  // namespace cartfact::radial
