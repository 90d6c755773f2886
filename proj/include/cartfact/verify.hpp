#pragma once

// Numerical cross-checks that exact arithmetic cannot provide alone:
// quadrature normalizations, the spherical-Bessel transform consistency
// between the coordinate and momentum representations, the confluent
// hypergeometric ODE residual, and the Frobenius series solver.

#include <functional>

#include "cartfact/momentum.hpp"
#include "cartfact/radial.hpp"

namespace cartfact {

struct ToleranceNotMet : std::runtime_error {
  explicit ToleranceNotMet(const std::string& what)
      : std::runtime_error(what) {}
};

struct QuadratureConfig {
  enum class Scheme { adaptive, fixed };
  Scheme scheme = Scheme::adaptive;
  double rel_tol = 1e-12;
  unsigned max_subdivisions = 48;  // adaptive bisection depth
  double upper_cutoff = 120.0;
};

namespace verify {

// rho f'' + (2l+2 - rho) f' + (n-l-1) f with f = L_{n-l-1}^{2l+1}(rho);
// identically zero for valid (n, l).
Poly1 ode_residual(unsigned n, unsigned l);

struct FrobeniusResult {
  bool terminated;  // false marks a non-terminating series
  Poly1 poly;       // the polynomial, or the truncated partial sum
};

// Series a_{k+1} = a_k (k+l+1-lambda)/((k+1)(k+2l+2)), a_0 = 1;
// terminates as a polynomial iff lambda-l-1 is a nonnegative integer.
FrobeniusResult frobenius(const Rational& lambda, unsigned l,
                          unsigned max_terms);

// Integral of f over [0, cfg.upper_cutoff]; adaptive Simpson to rel_tol,
// throwing ToleranceNotMet when the subdivision budget runs out.
double quad_integral(const std::function<double(double)>& f,
                     const QuadratureConfig& cfg);

// Integral of f(x)^2 x^2 over the half-line (cut at upper_cutoff).
double quad_normalize(const std::function<double(double)>& f,
                      const QuadratureConfig& cfg);

// Closed forms for l <= 1; upward recurrence for x > l, downward with
// renormalization otherwise (upward is unstable for x < l).
double spherical_bessel_j(unsigned l, double x);

// Max normalized deviation between sqrt(2/pi) int j_l(p r) R_nl(r) r^2 dr
// and the momentum radial profile over the samples, after fixing the one
// global sign; the relative phase must be constant across p.
double fourier_check(unsigned n, unsigned l,
                     const std::vector<double>& p_samples);

// |integral R_nl^2 r^2 dr - 1| and |integral profile^2 p^2 dp - 1|.
double coordinate_norm_deviation(unsigned n, unsigned l);
double momentum_norm_deviation(unsigned n, unsigned l);

}  // namespace verify

}  // namespace cartfact
