#include "cartfact/harmonic.hpp"
#include "doctest.h"

using namespace cartfact;
using namespace cartfact::harmonic;

namespace {

XPoly mono(unsigned a, unsigned b, unsigned c, long num = 1, long den = 1) {
  return XPoly::monomial({a, b, c}, ExactScalar(rat(num, den)));
}

XPoly r2() { return mono(2, 0, 0) + mono(0, 2, 0) + mono(0, 0, 2); }

// sphere inner product scaled so orthonormal elements give exactly 1
ExactScalar sphere_ip(const XPoly& p, const XPoly& q) {
  return ExactScalar(rat(4)) * ExactScalar::pi_pow_half(2) *
         sphere_average_exact(p, q);
}

// true when v lies in the span of the (orthonormal) basis
bool in_span(const XPoly& v, const std::vector<HarmonicPoly>& basis) {
  XPoly rem = v;
  for (const auto& e : basis) {
    ExactScalar c = sphere_ip(v, e.poly);
    if (!c.is_zero()) rem -= c * e.poly;
  }
  return rem.is_zero();
}

}  // namespace

TEST_CASE("laplacian on simple polynomials") {
  CHECK(laplacian(mono(2, 0, 0) - mono(0, 2, 0)).is_zero());
  CHECK(laplacian(r2()) == XPoly::constant(ExactScalar(rat(6))));
  CHECK(laplacian(mono(1, 1, 1)).is_zero());
}

TEST_CASE("euler degree") {
  CHECK(euler_degree(mono(1, 0, 0)) == 1);
  CHECK(euler_degree(ExactScalar(rat(2)) * mono(0, 0, 2) - mono(2, 0, 0) -
                     mono(0, 2, 0)) == 2);
  CHECK(euler_degree(XPoly::constant(ExactScalar(rat(1)))) == 0);
  CHECK_THROWS_AS((void)euler_degree(mono(1, 0, 0) + mono(2, 0, 0)),
                  NotHomogeneous);
}

TEST_CASE("sphere average of monomials") {
  CHECK(sphere_average(mono(1, 0, 0), mono(1, 0, 0)) == rat(1, 3));
  CHECK(sphere_average(mono(1, 1, 0), mono(1, 1, 0)) == rat(1, 15));
  CHECK(sphere_average(mono(1, 0, 0), mono(0, 1, 0)) == 0);
  CHECK_THROWS_AS((void)sphere_average(mono(1, 0, 0), mono(2, 0, 0)),
                  DegreeMismatch);
}

TEST_CASE("basis at l = 0 is the normalized constant") {
  auto b = basis(0);
  REQUIRE(b.size() == 1);
  ExactScalar expect =
      ExactScalar::sqrt_of(rat(1, 4)) * ExactScalar::pi_pow_half(-1);
  CHECK(b[0].poly == XPoly::constant(expect));
}

TEST_CASE("basis spans the textbook sets at l = 1 and l = 2") {
  auto b1 = basis(1);
  REQUIRE(b1.size() == 3);
  CHECK(in_span(mono(1, 0, 0), b1));
  CHECK(in_span(mono(0, 1, 0), b1));
  CHECK(in_span(mono(0, 0, 1), b1));

  auto b2 = basis(2);
  REQUIRE(b2.size() == 5);
  CHECK(in_span(mono(1, 1, 0), b2));
  CHECK(in_span(mono(0, 1, 1), b2));
  CHECK(in_span(mono(1, 0, 1), b2));
  CHECK(in_span(mono(2, 0, 0) - mono(0, 2, 0), b2));
  CHECK(in_span(ExactScalar(rat(2)) * mono(0, 0, 2) - mono(2, 0, 0) -
                    mono(0, 2, 0),
                b2));
  // r^2 itself is not harmonic and must fall outside the span
  CHECK_FALSE(in_span(r2(), b2));
}

TEST_CASE("basis invariants through l = 6") {
  for (unsigned l = 0; l <= 6; ++l) {
    auto b = basis(l);
    REQUIRE(b.size() == 2 * l + 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(b[i].degree == l);
      CHECK(laplacian(b[i].poly).is_zero());
      CHECK(euler_degree(b[i].poly) == l);
      for (std::size_t j = 0; j <= i; ++j) {
        ExactScalar g = sphere_ip(b[i].poly, b[j].poly);
        CHECK(g == (i == j ? ExactScalar(rat(1)) : ExactScalar()));
      }
    }
  }
}

TEST_CASE("trace decomposition: degree-3 space splits as H3 + r^2 H1") {
  // dimension count: 10 = 7 + 3
  auto b3 = basis(3);
  REQUIRE(b3.size() == 7);

  // z r^2 is pure trace: orthogonal on the sphere to every degree-3 harmonic
  XPoly zr2 = mono(0, 0, 1) * r2();
  for (const auto& e : b3) CHECK(sphere_average_exact(zr2, e.poly).is_zero());

  // generic monomial: remainder after harmonic projection is r^2 times a
  // degree-1 harmonic, recovered exactly as laplacian(remainder)/10
  XPoly v = mono(0, 0, 3);
  XPoly rem = v;
  for (const auto& e : b3) rem -= sphere_ip(v, e.poly) * e.poly;
  XPoly g = ExactScalar(rat(1, 10)) * laplacian(rem);
  CHECK(euler_degree(g) == 1);
  CHECK(rem == r2() * g);
}
