#pragma once

// Harmonic polynomials P_h^l in (x, y, z): homogeneous, annihilated by the
// Laplacian, normalized so that the square integrates to 1 over the unit
// sphere. The basis at each degree is fixed by lexicographic monomial
// ordering followed by Gram-Schmidt, making it bit-for-bit reproducible.

#include <array>
#include <map>

#include "cartfact/exactnum.hpp"

namespace cartfact {

struct NotHomogeneous : std::invalid_argument {
  explicit NotHomogeneous(const std::string& what)
      : std::invalid_argument(what) {}
};

struct DegreeMismatch : std::invalid_argument {
  explicit DegreeMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

using Exponents = std::array<unsigned, 3>;

// Polynomial in (x, y, z) with ExactScalar coefficients.
class XPoly {
 public:
  XPoly() = default;
  static XPoly monomial(Exponents e, const ExactScalar& c);
  static XPoly constant(const ExactScalar& c) {
    return monomial({0, 0, 0}, c);
  }

  const std::map<Exponents, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Exponents e, const ExactScalar& c);

  friend XPoly operator+(const XPoly& a, const XPoly& b);
  friend XPoly operator-(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const ExactScalar& s, const XPoly& p);
  XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
  XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
  friend bool operator==(const XPoly& a, const XPoly& b) {
    return a.terms_ == b.terms_;
  }

  XPoly derivative(unsigned axis) const;
  bool is_homogeneous() const;
  unsigned total_degree() const;  // max over terms; 0 for the zero polynomial

  double eval(double x, double y, double z) const;
  ExactScalar eval_exact(const ExactScalar& x, const ExactScalar& y,
                         const ExactScalar& z) const;

 private:
  std::map<Exponents, ExactScalar> terms_;
};

struct HarmonicPoly {
  unsigned degree;
  XPoly poly;
};

namespace harmonic {

XPoly laplacian(const XPoly& p);

// l with sum_alpha x_alpha d_alpha P = l P; throws NotHomogeneous.
unsigned euler_degree(const XPoly& p);

// Exact (1/4pi) ∫ (P/r^l)(Q/r^l) dOmega for homogeneous P, Q of equal
// degree, via the monomial average
// <x^a y^b z^c> = (a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!! (all even, else 0).
Rational sphere_average(const XPoly& p, const XPoly& q);

// Same inner product for coefficients carrying radicals or pi powers.
ExactScalar sphere_average_exact(const XPoly& p, const XPoly& q);

// 2l+1 harmonic polynomials of degree l: exact nullspace of the Laplacian
// on the lex-ordered monomial basis, Gram-Schmidt under sphere_average,
// each scaled so ∫_{S^2} (P/r^l)^2 dOmega = 1 (factor 1/sqrt(4 pi q)).
std::vector<HarmonicPoly> basis(unsigned l);

}  // namespace harmonic

}  // namespace cartfact
