#pragma once

// Univariate special polynomials: Laguerre (sum and Rodrigues routes),
// moment polynomials Q_m, reverse Bessel polynomials theta_j (closed form
// and derivative recurrence), Gegenbauer C_k^{l+1} as a series in
// u = 1/(1+xi^2), and the expansion of Laguerre polynomials in the reverse
// Bessel basis.

#include "cartfact/exactnum.hpp"

namespace cartfact {

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// L_k^alpha(x) = sum_j (-1)^j/j! binom(k+alpha, k-j) x^j
Poly1 laguerre(unsigned k, unsigned alpha);

// Same polynomial via x^{-alpha} e^x d^k/dx^k (x^{k+alpha} e^{-x}) / k!,
// carried out on the polynomial factor (each derivative maps g -> g' - g).
// Throws NonPolynomialResult if division by x^alpha leaves a remainder.
Poly1 laguerre_rodrigues(unsigned k, unsigned alpha);

// Moment polynomial in xi^2 via Q_m = 2(m+1)Q_{m-1} - m(m+1)(1+xi^2)Q_{m-2}.
// The variable of the returned Poly1 is xi^2.
Poly1 q_recurrence(unsigned m);

// Closed form (m+2)!/2 sum_j (-1)^j (m+1)!/((m+1-2j)!(2j+1)!) (xi^2)^j.
Poly1 q_closed(unsigned m);

// theta_j(x) = sum_m (j+m)!/((j-m)! m! 2^m) x^{j-m}
Poly1 reverse_bessel(unsigned j);

// theta_j built from theta_{j-1} via theta_j = sum_k d^k/dx^k [x theta_{j-1}].
Poly1 reverse_bessel_derivative_recurrence(unsigned j);

// C_k^{l+1}((xi^2-1)/(xi^2+1)) expressed as a polynomial in u = 1/(1+xi^2):
// (1/l!) sum_j (-1)^j 2^{2j+1} (k+l+j)! (j+l+1)! / (j! (k-j)! (2l+2j+2)!) u^j
// with k the polynomial order.
Poly1 gegenbauer_series_u(unsigned k, unsigned l);

// Standard three-term recurrence C_0 = 1, C_1 = 2 alpha t,
// k C_k = 2t(k+alpha-1)C_{k-1} - (k+2alpha-2)C_{k-2}; polynomial in t.
// Used as an independent oracle for gegenbauer_series_u.
Poly1 gegenbauer_recurrence(unsigned k, unsigned alpha);

struct BesselExpansion {
  unsigned n;
  unsigned l;
  // c_0..c_{n-l-1}; sum_k c_k theta_k(x) = (n+l)! L_{n-l-1}^{2l+1}(2x)
  std::vector<ExactScalar> coeffs;
};

// Coefficients via the general reverse-Bessel expansion formula
// c_k = sum_j (-1)^j/2^j (k+j)!/(j!(k-j)!) [f_{k+j} - (k+j+1) f_{k+j+1}]
// applied to f(x) = (n+l)! L_{n-l-1}^{2l+1}(2x).
BesselExpansion bessel_expansion_coeffs(unsigned n, unsigned l);

// Closed form c_k = (-1)^k 2^k 2n (n+l)! (n+l+k)! / (k!(n-l-k-1)!(2l+2k+2)!)
ExactScalar bessel_expansion_closed(unsigned n, unsigned l, unsigned k);

// Vandermonde convolution spot check on random (n, m <= 20) pairs, all k.
bool vandermonde_check(unsigned trials, unsigned seed = 12345);

}  // namespace cartfact
