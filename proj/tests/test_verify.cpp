#include <cmath>

#include "cartfact/verify.hpp"
#include "doctest.h"

using namespace cartfact;
using namespace cartfact::verify;

TEST_CASE("confluent hypergeometric residual vanishes") {
  CHECK(ode_residual(1, 0).is_zero());
  // (2,0): f = L_1^1 = 2 - rho by hand
  CHECK(laguerre(1, 1) == Poly1({ExactScalar(rat(2)), ExactScalar(rat(-1))}));
  CHECK(ode_residual(2, 0).is_zero());
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned l = 0; l < n; ++l) CHECK(ode_residual(n, l).is_zero());
  CHECK_THROWS_AS((void)ode_residual(2, 2), DomainError);
}

TEST_CASE("Frobenius series terminates exactly on integer lambda-l-1") {
  FrobeniusResult ground = frobenius(rat(1), 0, 50);
  CHECK(ground.terminated);
  CHECK(ground.poly == Poly1::constant(ExactScalar(rat(1))));

  // lambda=3, l=1: 1 - rho/4, proportional to L_1^3 = 4 - rho
  FrobeniusResult f31 = frobenius(rat(3), 1, 50);
  CHECK(f31.terminated);
  CHECK(ExactScalar(rat(4)) * f31.poly ==
        Poly1({ExactScalar(rat(4)), ExactScalar(rat(-1))}));

  CHECK_FALSE(frobenius(rat(5, 2), 0, 50).terminated);
  CHECK_FALSE(frobenius(rat(1, 3), 2, 80).terminated);

  // matches laguerre up to the a_0 = 1 normalization: L_k^alpha(0) =
  // binom(k+alpha, k)
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned l = 0; l < n; ++l) {
      FrobeniusResult fr = frobenius(rat(n), l, 100);
      REQUIRE(fr.terminated);
      ExactScalar lead(Rational(binomial(n + l, n - l - 1)));
      CHECK(lead * fr.poly == laguerre(n - l - 1, 2 * l + 1));
    }
}

TEST_CASE("quadrature normalizations") {
  QuadratureConfig cfg;
  double ground =
      quad_normalize([](double r) { return 2.0 * std::exp(-r); }, cfg);
  CHECK(ground == doctest::Approx(1.0).epsilon(1e-12));

  // momentum ground state, radial measure only
  MomentumRadial phi1 = momentum::phi_momentum(1);
  QuadratureConfig pcfg;
  pcfg.upper_cutoff = 4000.0;
  double mom = quad_normalize([&](double p) { return phi1.eval(p); }, pcfg);
  CHECK(mom == doctest::Approx(1.0).epsilon(1e-10));

  // orthogonal cross pair, known exactly zero
  RadialState r10 = radial::closed_form_radial(1, 0);
  RadialState r20 = radial::closed_form_radial(2, 0);
  double cross = quad_integral(
      [&](double r) { return r10.eval(r) * r20.eval(r) * r * r; }, cfg);
  CHECK(std::abs(cross) < 1e-10);

  QuadratureConfig tight;
  tight.max_subdivisions = 2;
  tight.rel_tol = 1e-14;
  CHECK_THROWS_AS(
      (void)quad_normalize([](double r) { return 2.0 * std::exp(-r); }, tight),
      ToleranceNotMet);
}

TEST_CASE("spherical Bessel functions") {
  for (double x = 0.1; x <= 50.0; x += 0.7) {
    CHECK(spherical_bessel_j(0, x) ==
          doctest::Approx(std::sin(x) / x).epsilon(1e-12));
    CHECK(spherical_bessel_j(1, x) ==
          doctest::Approx(std::sin(x) / (x * x) - std::cos(x) / x)
              .epsilon(1e-12));
    double j2 = (3.0 / (x * x * x) - 1.0 / x) * std::sin(x) -
                3.0 / (x * x) * std::cos(x);
    CHECK(spherical_bessel_j(2, x) == doctest::Approx(j2).epsilon(1e-11));
  }
  // small-argument leading behavior j_l ~ x^l / (2l+1)!!
  CHECK(spherical_bessel_j(5, 1e-3) ==
        doctest::Approx(std::pow(1e-3, 5) / 10395.0).epsilon(1e-6));
  CHECK(spherical_bessel_j(3, 0.0) == 0.0);
}

TEST_CASE("Fourier consistency between representations") {
  CHECK(fourier_check(1, 0, {1.0}) < 1e-8);
  CHECK(fourier_check(2, 1, {0.5, 1.0, 2.0}) < 1e-8);

  std::vector<double> logspaced;
  for (int j = 0; j < 20; ++j)
    logspaced.push_back(0.05 * std::pow(100.0, j / 19.0));
  CHECK(fourier_check(4, 2, logspaced) < 1e-8);

  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned l = 0; l < n; ++l)
      CHECK(fourier_check(n, l, {0.3, 0.9, 1.7}) < 1e-8);
}

TEST_CASE("both normalizations hold numerically through n = 6") {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned l = 0; l < n; ++l) {
      CHECK(coordinate_norm_deviation(n, l) < 1e-10);
      CHECK(momentum_norm_deviation(n, l) < 1e-10);
    }
}
