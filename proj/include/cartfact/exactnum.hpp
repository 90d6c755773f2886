#pragma once

// Exact scalar and univariate-polynomial arithmetic.
//
// The coefficient field used throughout the library is the set of values
//   (re + i*im) * sqrt(q) * pi^(k/2)
// with re, im rational and q a positive squarefree integer
// and k an integer. This is not closed under addition; sums across
// incompatible radical structure throw IncompatibleRadicals, which always
// signals a pipeline bug rather than a recoverable condition.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartfact {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

struct IncompatibleRadicals : std::runtime_error {
  explicit IncompatibleRadicals(const std::string& what)
      : std::runtime_error(what) {}
};

struct NonPositiveRate : std::invalid_argument {
  explicit NonPositiveRate(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NonPolynomialResult : std::logic_error {
  explicit NonPolynomialResult(const std::string& what)
      : std::logic_error(what) {}
};

// Splits v = s^2 * f with f squarefree (v > 0). Best effort beyond the
// trial-division bound: a remaining cofactor is tested for being a perfect
// square and otherwise assumed squarefree. Every number produced by the
// pipelines here is smooth far below the bound, so the split is exact in
// practice.
void split_square(const Int& v, Int& square_root, Int& squarefree);

class ExactScalar {
 public:
  ExactScalar() : re_(0), im_(0), radicand_(1), pi_half_(0) {}
  ExactScalar(const Rational& re) : re_(re), im_(0), radicand_(1), pi_half_(0) {
    normalize_zero();
  }
  ExactScalar(long v) : ExactScalar(rat(v)) {}
  ExactScalar(const Rational& re, const Rational& im)
      : re_(re), im_(im), radicand_(1), pi_half_(0) {
    normalize_zero();
  }

  static ExactScalar i() { return ExactScalar(rat(0), rat(1)); }
  // sqrt(q) for q > 0, with the square part of q pulled into the rational
  // factor.
  static ExactScalar sqrt_of(const Rational& q);
  static ExactScalar pi_pow_half(int k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  const Rational& radicand() const { return radicand_; }
  int pi_half() const { return pi_half_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_rational() const {
    return im_ == 0 && radicand_ == 1 && pi_half_ == 0;
  }
  // Value as a plain rational; throws unless is_rational() or zero.
  Rational to_rational() const;

  ExactScalar operator-() const;
  ExactScalar conj() const;
  ExactScalar inverse() const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.radicand_ == b.radicand_ &&
           a.pi_half_ == b.pi_half_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) {
    return !(a == b);
  }

  double to_double() const;
  std::complex<double> to_complex() const;

  // "(re)+(im)i sqrt(q) pi^(k/2)", all parts reduced fractions.
  std::string str() const;
  static ExactScalar parse(const std::string& s);

 private:
  void normalize_zero() {
    if (re_ == 0 && im_ == 0) {
      radicand_ = 1;
      pi_half_ = 0;
    }
  }

  Rational re_, im_;
  Rational radicand_;  // positive squarefree integer
  int pi_half_;        // value carries pi^(pi_half_/2)
};

class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static Poly1 constant(const ExactScalar& v) { return Poly1({v}); }
  static Poly1 monomial(std::size_t degree, const ExactScalar& v);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  ExactScalar coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : ExactScalar();
  }
  const std::vector<ExactScalar>& coeffs() const { return c_; }

  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const ExactScalar& s, const Poly1& p);
  Poly1& operator+=(const Poly1& o) { return *this = *this + o; }
  Poly1& operator-=(const Poly1& o) { return *this = *this - o; }
  Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
  friend bool operator==(const Poly1& a, const Poly1& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  Poly1 derivative() const;
  // p(a*x + b)
  Poly1 compose_linear(const ExactScalar& a, const ExactScalar& b) const;
  Poly1 shifted_up(std::size_t k) const;  // multiply by x^k
  // Exact division by x^k; throws NonPolynomialResult on remainder.
  Poly1 shifted_down(std::size_t k) const;

  ExactScalar eval_exact(const ExactScalar& x) const;
  double eval_double(double x) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<ExactScalar> c_;  // c_[k] multiplies x^k; c_.back() nonzero
};

// Exact ∫_0^∞ p(r) e^{-a r} dr = Σ_k p_k k! / a^{k+1}, a > 0.
ExactScalar exp_weighted_integral(const Poly1& p, const Rational& a);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
Rational pow_rat(const Rational& base, long e);

}  // namespace cartfact
