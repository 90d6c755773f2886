#include "cartfact/harmonic.hpp"

namespace cartfact {

XPoly XPoly::monomial(Exponents e, const ExactScalar& c) {
  XPoly p;
  p.add_term(e, c);
  return p;
}

void XPoly::add_term(Exponents e, const ExactScalar& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

XPoly operator+(const XPoly& a, const XPoly& b) {
  XPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

XPoly operator-(const XPoly& a, const XPoly& b) {
  XPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

XPoly operator*(const ExactScalar& s, const XPoly& p) {
  XPoly out;
  for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
  return out;
}

XPoly XPoly::derivative(unsigned axis) const {
  XPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exponents d = e;
    --d[axis];
    out.add_term(d, ExactScalar(rat(e[axis])) * c);
  }
  return out;
}

bool XPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first[0] + terms_.begin()->first[1] +
               terms_.begin()->first[2];
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return false;
  return true;
}

unsigned XPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

double XPoly::eval(double x, double y, double z) const {
  double s = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (unsigned k = 0; k < e[0]; ++k) t *= x;
    for (unsigned k = 0; k < e[1]; ++k) t *= y;
    for (unsigned k = 0; k < e[2]; ++k) t *= z;
    s += t;
  }
  return s;
}

ExactScalar XPoly::eval_exact(const ExactScalar& x, const ExactScalar& y,
                              const ExactScalar& z) const {
  ExactScalar s;
  for (const auto& [e, c] : terms_) {
    ExactScalar t = c;
    for (unsigned k = 0; k < e[0]; ++k) t *= x;
    for (unsigned k = 0; k < e[1]; ++k) t *= y;
    for (unsigned k = 0; k < e[2]; ++k) t *= z;
    s += t;
  }
  return s;
}

namespace harmonic {

XPoly laplacian(const XPoly& p) {
  XPoly out;
  for (unsigned axis = 0; axis < 3; ++axis)
    out += p.derivative(axis).derivative(axis);
  return out;
}

unsigned euler_degree(const XPoly& p) {
  if (!p.is_homogeneous())
    throw NotHomogeneous("euler_degree: mixed total degrees");
  return p.total_degree();
}

namespace {

Int double_factorial(long n) {  // n odd or -1
  Int v = 1;
  for (long k = n; k > 1; k -= 2) v *= k;
  return v;
}

Rational monomial_average(const Exponents& e) {
  if (e[0] % 2 || e[1] % 2 || e[2] % 2) return Rational(0);
  Rational v(double_factorial(long(e[0]) - 1) *
                 double_factorial(long(e[1]) - 1) *
                 double_factorial(long(e[2]) - 1),
             double_factorial(long(e[0] + e[1] + e[2]) + 1));
  v.canonicalize();
  return v;
}

void require_same_degree(const XPoly& p, const XPoly& q) {
  if (!p.is_homogeneous() || !q.is_homogeneous())
    throw DegreeMismatch("sphere_average: inputs must be homogeneous");
  if (!p.is_zero() && !q.is_zero() && p.total_degree() != q.total_degree())
    throw DegreeMismatch("sphere_average: unequal degrees");
}

// Homogeneous degree-l exponent triples in lexicographic (a,b,c) order.
std::vector<Exponents> lex_monomials(unsigned l) {
  std::vector<Exponents> out;
  for (unsigned a = 0; a <= l; ++a)
    for (unsigned b = 0; a + b <= l; ++b) out.push_back({a, b, l - a - b});
  return out;
}

}  // namespace

ExactScalar sphere_average_exact(const XPoly& p, const XPoly& q) {
  require_same_degree(p, q);
  ExactScalar s;
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      Rational avg = monomial_average(
          {ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2]});
      if (avg == 0) continue;
      s += ExactScalar(avg) * cp * cq;
    }
  return s;
}

Rational sphere_average(const XPoly& p, const XPoly& q) {
  return sphere_average_exact(p, q).to_rational();
}

std::vector<HarmonicPoly> basis(unsigned l) {
  const std::vector<Exponents> mons = lex_monomials(l);
  const std::size_t ncols = mons.size();

  // Laplacian as a rational matrix from degree-l to degree-(l-2) monomials.
  std::vector<std::vector<Rational>> rows;
  if (l >= 2) {
    const std::vector<Exponents> target = lex_monomials(l - 2);
    std::map<Exponents, std::size_t> row_of;
    for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r;
    rows.assign(target.size(), std::vector<Rational>(ncols, Rational(0)));
    for (std::size_t c = 0; c < ncols; ++c) {
      const Exponents& e = mons[c];
      for (unsigned axis = 0; axis < 3; ++axis) {
        if (e[axis] < 2) continue;
        Exponents d = e;
        d[axis] -= 2;
        rows[row_of[d]][c] += rat(long(e[axis]) * (long(e[axis]) - 1));
      }
    }
  }

  // Reduced row echelon form; free columns index the nullspace basis.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = 1 / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || rows[rr][c] == 0) continue;
      Rational f = rows[rr][c];
      for (std::size_t cc = 0; cc < ncols; ++cc)
        rows[rr][cc] -= f * rows[rank][cc];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<XPoly> kernel;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    XPoly v = XPoly::monomial(mons[free], ExactScalar(rat(1)));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      if (rows[r][free] != 0)
        v.add_term(mons[pivot_col[r]], ExactScalar(-rows[r][free]));
    kernel.push_back(std::move(v));
  }

  // Gram-Schmidt under the sphere average, then scale each element so its
  // square integrates to 1 over the unit sphere.
  std::vector<HarmonicPoly> out;
  std::vector<XPoly> ortho;
  std::vector<Rational> norms;
  for (XPoly v : kernel) {
    for (std::size_t j = 0; j < ortho.size(); ++j) {
      Rational proj = sphere_average(v, ortho[j]) / norms[j];
      if (proj != 0) v -= ExactScalar(proj) * ortho[j];
    }
    Rational q = sphere_average(v, v);
    ortho.push_back(v);
    norms.push_back(q);
    Rational inv4q = 1 / (4 * q);
    ExactScalar scale =
        ExactScalar::sqrt_of(inv4q) * ExactScalar::pi_pow_half(-1);
    out.push_back({l, scale * v});
  }
  return out;
}

}  // namespace harmonic

}  // namespace cartfact
