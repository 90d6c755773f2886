#pragma once

// Noncommutative symbolic engine over the alphabet {x, y, z, R^s, p_x,
// p_y, p_z} in Hartree units (hbar = m = e = a0 = 1). R is the radial
// coordinate operator; s may be negative. Canonical (normal) order is
// position factors, then R^s, then momentum factors, rewritten with
//   p_a x_b = x_b p_a - i delta_ab
//   p_a R^s = R^s p_a - i s x_a R^{s-2}.
// Every OpExpr is kept normal-ordered at all times and canonical modulo
// the central relation x^2 + y^2 + z^2 = R^2 (z-exponents reduced to 0 or
// 1), so operator identities such as [r, p_r] = i hold as exact equality.

#include "cartfact/harmonic.hpp"

namespace cartfact {

struct NonPositiveLambda : std::invalid_argument {
  explicit NonPositiveLambda(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NegativeLambda : std::invalid_argument {
  explicit NegativeLambda(const std::string& what)
      : std::invalid_argument(what) {}
};

struct OpKey {
  Exponents xexp{0, 0, 0};
  int rexp = 0;
  Exponents pexp{0, 0, 0};
  friend bool operator<(const OpKey& a, const OpKey& b) {
    if (a.xexp != b.xexp) return a.xexp < b.xexp;
    if (a.rexp != b.rexp) return a.rexp < b.rexp;
    return a.pexp < b.pexp;
  }
  friend bool operator==(const OpKey& a, const OpKey& b) {
    return a.xexp == b.xexp && a.rexp == b.rexp && a.pexp == b.pexp;
  }
};

class OpExpr {
 public:
  OpExpr() = default;
  static OpExpr monomial(const OpKey& k, const ExactScalar& c);
  static OpExpr scalar(const ExactScalar& c) { return monomial({}, c); }
  static OpExpr x(unsigned axis);
  static OpExpr p(unsigned axis);
  static OpExpr r_pow(int s);

  const std::map<OpKey, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const OpKey& k, const ExactScalar& c);

  // Formal adjoint: reverse the factors, conjugate the coefficients,
  // re-normal-order. All generators are Hermitian symbols.
  OpExpr adjoint() const;

  friend OpExpr operator+(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator-(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator*(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator*(const ExactScalar& s, const OpExpr& e);
  OpExpr& operator+=(const OpExpr& o) { return *this = *this + o; }
  OpExpr& operator-=(const OpExpr& o) { return *this = *this - o; }
  OpExpr& operator*=(const OpExpr& o) { return *this = *this * o; }
  friend bool operator==(const OpExpr& a, const OpExpr& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const OpExpr& a, const OpExpr& b) {
    return !(a == b);
  }

 private:
  std::map<OpKey, ExactScalar> terms_;
};

// Product of a word of (already normal-ordered) factors, left to right.
OpExpr normal_order(const std::vector<OpExpr>& word);

OpExpr commutator(const OpExpr& a, const OpExpr& b);

// Multiplicative operator embedding of a polynomial in (x, y, z).
OpExpr from_poly(const XPoly& p);

// p_r = R^{-1} sum_a x_a p_a - i R^{-1}
OpExpr pr();

// A_a(lambda) = (1/sqrt 2)(p_a - i x_a R^{-1}/lambda), lambda > 0
OpExpr a_op(const Rational& lambda, unsigned axis);
OpExpr a_dag(const Rational& lambda, unsigned axis);

// B_r^dag(lambda) = (1/sqrt 2)[p_r + i(1/(lambda+1) - (lambda+1)R^{-1})],
// lambda >= 0
OpExpr b_dag(const Rational& lambda);

// T_perp = T - p_r^2/2 with T = (p_x^2 + p_y^2 + p_z^2)/2
OpExpr tperp();

// H(lambda) = T - (1/lambda) R^{-1}, lambda > 0
OpExpr hamiltonian(const Rational& lambda);

// E(lambda) = -1/(2 lambda^2) as a scalar OpExpr term
OpExpr energy_shift(const Rational& lambda);

bool check_identity(const OpExpr& lhs, const OpExpr& rhs);

// Purely multiplicative operator in x, y, z, R^s, canonical under
// x^2 + y^2 + z^2 = R^2: the z-exponent of every term is 0 or 1
// (z^2 -> R^2 - x^2 - y^2).
class MultOp {
 public:
  MultOp() = default;
  // Canonicalizes; throws std::invalid_argument on momentum content.
  explicit MultOp(const OpExpr& e);

  const std::map<OpKey, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  OpExpr to_expr() const;

  friend MultOp operator-(const MultOp& a, const MultOp& b);
  friend MultOp operator*(const ExactScalar& s, const MultOp& m);
  friend bool operator==(const MultOp& a, const MultOp& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultOp& a, const MultOp& b) {
    return !(a == b);
  }

 private:
  std::map<OpKey, ExactScalar> terms_;
};

// Rewrites expr acting on |phi_lambda> using p_a|phi> = (i/lambda) x_a
// R^{-1}|phi>, rightmost momentum factor first, until no momentum remains.
MultOp reduce_on_phi(const OpExpr& expr, const Rational& lambda);

}  // namespace cartfact
