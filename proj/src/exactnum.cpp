#include "cartfact/exactnum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace cartfact {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kBound = 100000;
    std::vector<bool> sieve(kBound + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= kBound; ++p) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= kBound; q += p) sieve[q] = false;
    }
    return out;
  }();
  return primes;
}

}  // namespace

void split_square(const Int& v, Int& square_root, Int& squarefree) {
  if (v <= 0) throw std::invalid_argument("split_square: v must be positive");
  Int rem = v;
  square_root = 1;
  squarefree = 1;
  for (unsigned long p : small_primes()) {
    if (rem == 1) break;
    if (Int(p) * p > rem) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    }
    for (unsigned k = 0; k + 1 < e; k += 2) square_root *= p;
    if (e % 2) squarefree *= p;
  }
  if (rem != 1) {
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
      Int root;
      mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
      square_root *= root;
    } else {
      squarefree *= rem;
    }
  }
}

ExactScalar ExactScalar::sqrt_of(const Rational& q) {
  if (q <= 0)
    throw std::invalid_argument("sqrt_of: radicand must be positive");
  // sqrt(a/b) = sqrt(a b)/b keeps the radicand an integer, giving a single
  // canonical form for values like sqrt(1/2) = (1/2) sqrt(2).
  Int s, f;
  split_square(q.get_num() * q.get_den(), s, f);
  ExactScalar out;
  out.re_ = Rational(s, q.get_den());
  out.re_.canonicalize();
  out.im_ = 0;
  out.radicand_ = Rational(f);
  out.pi_half_ = 0;
  return out;
}

ExactScalar ExactScalar::pi_pow_half(int k) {
  ExactScalar out(rat(1));
  out.pi_half_ = k;
  return out;
}

Rational ExactScalar::to_rational() const {
  if (is_zero()) return Rational(0);
  if (!is_rational())
    throw IncompatibleRadicals("to_rational: value carries a radical or pi");
  return re_;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  out.normalize_zero();
  return out;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  out.im_ = -out.im_;
  return out;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // 1/((a+bi) sqrt(q) pi^(k/2)) = (a-bi)/((a^2+b^2) q) sqrt(q) pi^(-k/2)
  Rational norm = re_ * re_ + im_ * im_;
  Rational scale = norm * radicand_;
  ExactScalar out;
  out.re_ = re_ / scale;
  out.im_ = -im_ / scale;
  out.radicand_ = radicand_;
  out.pi_half_ = -pi_half_;
  out.normalize_zero();
  return out;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ != b.radicand_ || a.pi_half_ != b.pi_half_)
    throw IncompatibleRadicals("scalar_add: " + a.str() + " + " + b.str());
  ExactScalar out = a;
  out.re_ += b.re_;
  out.im_ += b.im_;
  out.normalize_zero();
  return out;
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  return a + (-b);
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExactScalar();
  ExactScalar out;
  out.re_ = a.re_ * b.re_ - a.im_ * b.im_;
  out.im_ = a.re_ * b.im_ + a.im_ * b.re_;
  out.pi_half_ = a.pi_half_ + b.pi_half_;
  Rational q = a.radicand_ * b.radicand_;
  q.canonicalize();
  ExactScalar root = ExactScalar::sqrt_of(q);
  out.re_ *= root.re_;
  out.im_ *= root.re_;
  out.radicand_ = root.radicand_;
  out.normalize_zero();
  return out;
}

double ExactScalar::to_double() const {
  if (im_ != 0)
    throw std::domain_error("to_double on non-real scalar " + str());
  double v = re_.get_d() * std::sqrt(radicand_.get_d());
  if (pi_half_ != 0) v *= std::pow(std::numbers::pi, pi_half_ / 2.0);
  return v;
}

std::complex<double> ExactScalar::to_complex() const {
  double scale = std::sqrt(radicand_.get_d());
  if (pi_half_ != 0) scale *= std::pow(std::numbers::pi, pi_half_ / 2.0);
  return {re_.get_d() * scale, im_.get_d() * scale};
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  os << "(" << re_.get_str() << ")+(" << im_.get_str() << ")i sqrt("
     << radicand_.get_str() << ") pi^(" << pi_half_ << "/2)";
  return os.str();
}

ExactScalar ExactScalar::parse(const std::string& s) {
  // Inverse of str(); delimiters are fixed.
  auto grab = [&s](std::size_t& pos, char open, char close) {
    std::size_t a = s.find(open, pos);
    std::size_t b = s.find(close, a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw std::invalid_argument("ExactScalar::parse: malformed " + s);
    pos = b + 1;
    return s.substr(a + 1, b - a - 1);
  };
  std::size_t pos = 0;
  Rational re(grab(pos, '(', ')'));
  Rational im(grab(pos, '(', ')'));
  Rational q(grab(pos, '(', ')'));
  std::string pi_part = grab(pos, '(', ')');
  int k = std::stoi(pi_part.substr(0, pi_part.find('/')));
  re.canonicalize();
  im.canonicalize();
  q.canonicalize();
  ExactScalar out(re, im);
  if (out.is_zero()) return out;
  out.radicand_ = q;
  out.pi_half_ = k;
  return out;
}

Poly1 Poly1::monomial(std::size_t degree, const ExactScalar& v) {
  std::vector<ExactScalar> c(degree + 1);
  c[degree] = v;
  return Poly1(std::move(c));
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  std::vector<ExactScalar> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
  return a + (ExactScalar(rat(-1)) * b);
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  std::vector<ExactScalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return Poly1(std::move(c));
}

Poly1 operator*(const ExactScalar& s, const Poly1& p) {
  std::vector<ExactScalar> c(p.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
  return Poly1(std::move(c));
}

Poly1 Poly1::derivative() const {
  if (c_.size() <= 1) return Poly1();
  std::vector<ExactScalar> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    c[k - 1] = ExactScalar(rat(static_cast<long>(k))) * c_[k];
  return Poly1(std::move(c));
}

Poly1 Poly1::compose_linear(const ExactScalar& a, const ExactScalar& b) const {
  // Horner in (a x + b).
  Poly1 arg({b, a});
  Poly1 out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    out = out * arg + Poly1::constant(c_[k]);
  }
  return out;
}

Poly1 Poly1::shifted_up(std::size_t k) const {
  if (is_zero()) return Poly1();
  std::vector<ExactScalar> c(c_.size() + k);
  for (std::size_t j = 0; j < c_.size(); ++j) c[j + k] = c_[j];
  return Poly1(std::move(c));
}

Poly1 Poly1::shifted_down(std::size_t k) const {
  for (std::size_t j = 0; j < k && j < c_.size(); ++j)
    if (!c_[j].is_zero())
      throw NonPolynomialResult("shifted_down: nonzero low-order coefficient");
  if (c_.size() <= k) return Poly1();
  return Poly1({c_.begin() + static_cast<long>(k), c_.end()});
}

ExactScalar Poly1::eval_exact(const ExactScalar& x) const {
  ExactScalar out;
  for (std::size_t k = c_.size(); k-- > 0;) out = out * x + c_[k];
  return out;
}

double Poly1::eval_double(double x) const {
  double out = 0;
  for (std::size_t k = c_.size(); k-- > 0;) out = out * x + c_[k].to_double();
  return out;
}

ExactScalar exp_weighted_integral(const Poly1& p, const Rational& a) {
  if (a <= 0) throw NonPositiveRate("exp_weighted_integral: rate must be > 0");
  ExactScalar out;
  Rational inv_a = Rational(1) / a;
  Rational weight = inv_a;  // k!/a^(k+1)
  for (std::size_t k = 0; k <= static_cast<std::size_t>(
                                   std::max(p.degree(), 0));
       ++k) {
    out += ExactScalar(weight) * p.coeff(k);
    weight *= inv_a * Rational(static_cast<long>(k) + 1);
  }
  return out;
}

Int factorial(unsigned n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int binomial(unsigned n, unsigned k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational pow_rat(const Rational& base, long e) {
  Rational out(1);
  Rational b = base;
  long n = e;
  if (n < 0) {
    b = Rational(1) / b;
    n = -n;
  }
  for (; n > 0; n >>= 1) {
    if (n & 1) out *= b;
    b *= b;
  }
  out.canonicalize();
  return out;
}

}  // namespace cartfact
