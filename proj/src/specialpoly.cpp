#include "cartfact/specialpoly.hpp"

#include <random>

namespace cartfact {

Poly1 laguerre(unsigned k, unsigned alpha) {
  std::vector<ExactScalar> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    Rational v(binomial(k + alpha, k - j), factorial(j));
    v.canonicalize();
    if (j % 2) v = -v;
    c[j] = ExactScalar(v);
  }
  return Poly1(std::move(c));
}

Poly1 laguerre_rodrigues(unsigned k, unsigned alpha) {
  // Represent x^{k+alpha} e^{-x}; d/dx maps the polynomial factor g to
  // g' - g. After k derivatives, multiply by e^x (cancels), divide by
  // x^alpha and k!.
  Poly1 g = Poly1::monomial(k + alpha, ExactScalar(rat(1)));
  for (unsigned step = 0; step < k; ++step) g = g.derivative() - g;
  g = g.shifted_down(alpha);
  Rational inv_kfac(1, factorial(k));
  inv_kfac.canonicalize();
  return ExactScalar(inv_kfac) * g;
}

Poly1 q_recurrence(unsigned m) {
  Poly1 qm2 = Poly1::constant(ExactScalar(rat(1)));  // Q_0
  if (m == 0) return qm2;
  Poly1 qm1({ExactScalar(rat(3)), ExactScalar(rat(-1))});  // Q_1 = 3 - xi^2
  if (m == 1) return qm1;
  Poly1 one_plus({ExactScalar(rat(1)), ExactScalar(rat(1))});  // 1 + xi^2
  for (unsigned j = 2; j <= m; ++j) {
    long lj = static_cast<long>(j);
    Poly1 q = ExactScalar(rat(2 * (lj + 1))) * qm1 -
              ExactScalar(rat(lj * (lj + 1))) * (one_plus * qm2);
    qm2 = qm1;
    qm1 = q;
  }
  return qm1;
}

Poly1 q_closed(unsigned m) {
  std::vector<ExactScalar> c((m + 1) / 2 + 1);
  Rational pref(factorial(m + 2), 2);
  pref.canonicalize();
  for (unsigned j = 0; 2 * j <= m + 1; ++j) {
    Rational v(factorial(m + 1),
               factorial(m + 1 - 2 * j) * factorial(2 * j + 1));
    v.canonicalize();
    v *= pref;
    if (j % 2) v = -v;
    c[j] = ExactScalar(v);
  }
  return Poly1(std::move(c));
}

Poly1 reverse_bessel(unsigned j) {
  std::vector<ExactScalar> c(j + 1);
  for (unsigned m = 0; m <= j; ++m) {
    Rational v(factorial(j + m),
               factorial(j - m) * factorial(m) * pow_rat(rat(2), m).get_num());
    v.canonicalize();
    c[j - m] = ExactScalar(v);
  }
  return Poly1(std::move(c));
}

Poly1 reverse_bessel_derivative_recurrence(unsigned j) {
  Poly1 theta = Poly1::constant(ExactScalar(rat(1)));  // theta_0
  for (unsigned step = 1; step <= j; ++step) {
    Poly1 base = theta.shifted_up(1);  // x * theta_{step-1}
    Poly1 next;
    Poly1 d = base;
    for (unsigned k = 0; k <= step; ++k) {
      next += d;
      d = d.derivative();
      if (d.is_zero()) break;
    }
    theta = next;
  }
  return theta;
}

Poly1 gegenbauer_series_u(unsigned k, unsigned l) {
  std::vector<ExactScalar> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    Rational v(factorial(k + 2 * l + 1 + j) * factorial(j + l + 1) *
                   pow_rat(rat(2), 2 * j + 1).get_num(),
               factorial(l) * factorial(j) * factorial(k - j) *
                   factorial(2 * l + 2 * j + 2));
    v.canonicalize();
    if (j % 2) v = -v;
    c[j] = ExactScalar(v);
  }
  return Poly1(std::move(c));
}

Poly1 gegenbauer_recurrence(unsigned k, unsigned alpha) {
  Poly1 cm2 = Poly1::constant(ExactScalar(rat(1)));
  if (k == 0) return cm2;
  Poly1 cm1 = Poly1::monomial(1, ExactScalar(rat(2 * (long)alpha)));
  if (k == 1) return cm1;
  for (unsigned j = 2; j <= k; ++j) {
    long lj = j, la = alpha;
    Poly1 t2 = Poly1::monomial(1, ExactScalar(rat(2 * (lj + la - 1), lj)));
    Poly1 c = t2 * cm1 -
              ExactScalar(rat(lj + 2 * la - 2, lj)) * cm2;
    cm2 = cm1;
    cm1 = c;
  }
  return cm1;
}

BesselExpansion bessel_expansion_coeffs(unsigned n, unsigned l) {
  if (l + 1 > n) throw DomainError("bessel_expansion_coeffs: need l <= n-1");
  const unsigned deg = n - l - 1;
  // f(x) = (n+l)! L_{n-l-1}^{2l+1}(2x)
  Poly1 f = ExactScalar(Rational(factorial(n + l))) *
            laguerre(deg, 2 * l + 1)
                .compose_linear(ExactScalar(rat(2)), ExactScalar());
  auto fk = [&](unsigned k) -> Rational {
    if (static_cast<int>(k) > f.degree()) return Rational(0);
    return f.coeff(k).to_rational();
  };
  BesselExpansion out{n, l, std::vector<ExactScalar>(deg + 1)};
  for (unsigned k = 0; k <= deg; ++k) {
    Rational ck(0);
    for (unsigned j = 0; j <= k; ++j) {
      Rational term(factorial(k + j),
                    factorial(j) * factorial(k - j) *
                        pow_rat(rat(2), j).get_num());
      term.canonicalize();
      term *= fk(k + j) - Rational(k + j + 1) * fk(k + j + 1);
      if (j % 2) term = -term;
      ck += term;
    }
    ck.canonicalize();
    out.coeffs[k] = ExactScalar(ck);
  }
  return out;
}

ExactScalar bessel_expansion_closed(unsigned n, unsigned l, unsigned k) {
  if (l + k + 1 > n) throw DomainError("bessel_expansion_closed: k too large");
  Rational v(Int(2) * n * factorial(n + l) * factorial(n + l + k) *
                 pow_rat(rat(2), k).get_num(),
             factorial(k) * factorial(n - l - k - 1) *
                 factorial(2 * l + 2 * k + 2));
  v.canonicalize();
  if (k % 2) v = -v;
  return ExactScalar(v);
}

bool vandermonde_check(unsigned trials, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<unsigned> pick(0, 20);
  for (unsigned t = 0; t < trials; ++t) {
    unsigned n = pick(gen), m = pick(gen);
    for (unsigned k = 0; k <= n + m; ++k) {
      Int sum = 0;
      for (unsigned j = 0; j <= n && j <= k; ++j)
        sum += binomial(n, j) * binomial(m, k - j);
      if (sum != binomial(n + m, k)) return false;
    }
  }
  return true;
}

}  // namespace cartfact
