#include "cartfact/verify.hpp"

#include <cmath>

namespace cartfact::verify {

namespace {

struct AdaptiveState {
  const std::function<double(double)>& f;
  double tol;  // absolute, already scaled off the whole-interval estimate
  unsigned max_depth;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const AdaptiveState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, unsigned depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = st.f(lm), frm = st.f(rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  double err = left + right - whole;
  if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  if (depth >= st.max_depth)
    throw ToleranceNotMet("quad_integral: subdivision budget exhausted");
  return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

Poly1 ode_residual(unsigned n, unsigned l) {
  if (n < 1 || l >= n) throw DomainError("ode_residual: need 0 <= l <= n-1");
  Poly1 f = laguerre(n - l - 1, 2 * l + 1);
  Poly1 rho = Poly1::monomial(1, ExactScalar(rat(1)));
  Poly1 lin({ExactScalar(rat(2 * long(l) + 2)), ExactScalar(rat(-1))});
  return rho * f.derivative().derivative() + lin * f.derivative() +
         ExactScalar(rat(long(n) - long(l) - 1)) * f;
}

FrobeniusResult frobenius(const Rational& lambda, unsigned l,
                          unsigned max_terms) {
  if (max_terms < 1) throw DomainError("frobenius: need max_terms >= 1");
  std::vector<ExactScalar> c;
  Rational a(1);
  for (unsigned k = 0; k < max_terms; ++k) {
    c.push_back(ExactScalar(a));
    Rational step = (Rational(long(k) + long(l) + 1) - lambda) /
                    Rational((long(k) + 1) * (long(k) + 2 * long(l) + 2));
    a *= step;
    a.canonicalize();
    if (a == 0) return {true, Poly1(std::move(c))};
  }
  return {false, Poly1(std::move(c))};
}

double quad_integral(const std::function<double(double)>& f,
                     const QuadratureConfig& cfg) {
  if (cfg.rel_tol <= 0) throw DomainError("quad_integral: need rel_tol > 0");
  double a = 0.0, b = cfg.upper_cutoff;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  if (cfg.scheme == QuadratureConfig::Scheme::fixed) {
    const unsigned panels = 1u << 16;
    double h = (b - a) / panels, sum = fa + fb;
    for (unsigned j = 1; j < panels; ++j)
      sum += (j % 2 ? 4.0 : 2.0) * f(a + j * h);
    return sum * h / 3.0;
  }
  // seed with a uniform composite pass so concentrated mass far from the
  // coarse nodes cannot be missed, then refine each panel adaptively
  const unsigned panels = 64;
  double h = (b - a) / panels;
  std::vector<double> fk(2 * panels + 1);
  for (unsigned j = 0; j <= 2 * panels; ++j) fk[j] = f(a + 0.5 * j * h);
  double whole = 0.0;
  for (unsigned j = 0; j < panels; ++j)
    whole += simpson(a + j * h, a + (j + 1) * h, fk[2 * j], fk[2 * j + 1],
                     fk[2 * j + 2]);
  double tol = cfg.rel_tol * std::max(std::abs(whole), 1.0);
  AdaptiveState st{f, tol, cfg.max_subdivisions};
  double total = 0.0;
  for (unsigned j = 0; j < panels; ++j) {
    double pa = a + j * h, pb = a + (j + 1) * h;
    double s = simpson(pa, pb, fk[2 * j], fk[2 * j + 1], fk[2 * j + 2]);
    total += adapt(st, pa, pb, fk[2 * j], fk[2 * j + 1], fk[2 * j + 2], s,
                   tol / panels, 0);
  }
  return total;
}

double quad_normalize(const std::function<double(double)>& f,
                      const QuadratureConfig& cfg) {
  return quad_integral(
      [&](double x) {
        double v = f(x);
        return v * v * x * x;
      },
      cfg);
}

double spherical_bessel_j(unsigned l, double x) {
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  double j0 = std::sin(x) / x;
  if (l == 0) return j0;
  double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (l == 1) return j1;
  if (x > double(l)) {
    double jm = j0, jc = j1;
    for (unsigned k = 1; k < l; ++k) {
      double jn = (2.0 * k + 1.0) / x * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }
  // downward Miller recurrence, renormalized against the larger of j0, j1
  unsigned start = l + 24 + unsigned(x);
  double up = 0.0, cur = 1e-30, at_l = 0.0, at0 = 0.0, at1 = 0.0;
  for (unsigned k = start; k-- > 0;) {
    double down = (2.0 * k + 3.0) / x * cur - up;
    up = cur;
    cur = down;
    if (std::abs(cur) > 1e250) {  // rescale to avoid overflow
      up /= 1e250;
      cur /= 1e250;
      at_l /= 1e250;
      at1 /= 1e250;
    }
    if (k == l) at_l = cur;
    if (k == 1) at1 = cur;
    if (k == 0) at0 = cur;
  }
  return std::abs(at0) >= std::abs(at1) ? at_l * (j0 / at0)
                                        : at_l * (j1 / at1);
}

double fourier_check(unsigned n, unsigned l,
                     const std::vector<double>& p_samples) {
  if (p_samples.empty()) throw DomainError("fourier_check: need samples");
  RadialState rs = radial::closed_form_radial(n, l);
  MomentumRadial prof = momentum::momentum_radial_closed(n, l);

  QuadratureConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.upper_cutoff = double(n) * (2.0 * n + 40.0);

  std::vector<double> transformed, profile;
  double scale = 0.0;
  for (double p : p_samples) {
    double t = std::sqrt(2.0 / M_PI) *
               quad_integral(
                   [&](double r) {
                     return spherical_bessel_j(l, p * r) * rs.eval(r) * r * r;
                   },
                   cfg);
    transformed.push_back(t);
    profile.push_back(prof.eval(p));
    scale = std::max(scale, std::abs(profile.back()));
  }
  if (scale == 0.0) throw ToleranceNotMet("fourier_check: zero profile");

  // one global sign between the representations, fixed at the largest
  // profile sample, then deviations normalized by the profile scale
  std::size_t ref = 0;
  for (std::size_t j = 0; j < profile.size(); ++j)
    if (std::abs(profile[j]) > std::abs(profile[ref])) ref = j;
  double sign = transformed[ref] * profile[ref] < 0 ? -1.0 : 1.0;
  double dev = 0.0;
  for (std::size_t j = 0; j < profile.size(); ++j)
    dev = std::max(dev,
                   std::abs(transformed[j] - sign * profile[j]) / scale);
  return dev;
}

double coordinate_norm_deviation(unsigned n, unsigned l) {
  RadialState rs = radial::closed_form_radial(n, l);
  QuadratureConfig cfg;
  cfg.upper_cutoff = double(n) * (2.0 * n + 40.0);
  return std::abs(
      quad_normalize([&](double r) { return rs.eval(r); }, cfg) - 1.0);
}

double momentum_norm_deviation(unsigned n, unsigned l) {
  MomentumRadial prof = momentum::momentum_radial_closed(n, l);
  auto g = [&](double p) {
    double v = prof.eval(p);
    return v * v * p * p;
  };
  // head holds the mass near xi ~ 1; the smooth power-law tail is cut
  // where the truncated remainder is far below the tolerance
  double split = 60.0 / n;
  QuadratureConfig head;
  head.upper_cutoff = split;
  QuadratureConfig tail;
  tail.upper_cutoff = 4000.0 / n - split;
  double total = quad_integral(g, head) +
                 quad_integral([&](double x) { return g(split + x); }, tail);
  return std::abs(total - 1.0);
}

}  // namespace cartfact::verify
