#include "cartfact/opalgebra.hpp"

namespace cartfact {

namespace {

const ExactScalar kI = ExactScalar::i();
// 1/sqrt(2)
const ExactScalar kInvRt2 = ExactScalar::sqrt_of(rat(1, 2));

// Deposits a normal-ordered term, eliminating z^2 via z^2 = R^2 - x^2 - y^2
// so that every stored key has z-exponent 0 or 1. Equality of OpExpr is
// thereby equality modulo the central relation x^2 + y^2 + z^2 = R^2, which
// the rewrite rules are compatible with.
void deposit(std::map<OpKey, ExactScalar>& acc, const OpKey& k,
             const ExactScalar& c) {
  if (c.is_zero()) return;
  if (k.xexp[2] >= 2) {
    OpKey base = k;
    base.xexp[2] -= 2;
    OpKey kr = base;
    kr.rexp += 2;
    deposit(acc, kr, c);
    OpKey kx = base;
    kx.xexp[0] += 2;
    deposit(acc, kx, -c);
    OpKey ky = base;
    ky.xexp[1] += 2;
    deposit(acc, ky, -c);
    return;
  }
  auto [it, inserted] = acc.emplace(k, c);
  if (!inserted) it->second += c;
}

// Accumulates c * mono(k1) * mono(k2) into acc, normal-ordering on the fly.
// Recursion peels the rightmost momentum factor off k1 (highest axis
// first); each step strictly lowers the momentum degree of the left
// factor, so it terminates.
void mul_mono_into(std::map<OpKey, ExactScalar>& acc, const OpKey& k1,
                   const OpKey& k2, const ExactScalar& c) {
  if (c.is_zero()) return;
  if (k1.pexp == Exponents{0, 0, 0}) {
    deposit(acc,
            {{k1.xexp[0] + k2.xexp[0], k1.xexp[1] + k2.xexp[1],
              k1.xexp[2] + k2.xexp[2]},
             k1.rexp + k2.rexp,
             k2.pexp},
            c);
    return;
  }
  unsigned axis = 2;
  while (k1.pexp[axis] == 0) --axis;
  OpKey left = k1;
  --left.pexp[axis];

  // p_axis * mono(k2), one rewrite step:
  OpKey moved = k2;
  ++moved.pexp[axis];
  mul_mono_into(acc, left, moved, c);

  if (k2.rexp != 0) {
    OpKey t = k2;
    ++t.xexp[axis];
    t.rexp -= 2;
    mul_mono_into(acc, left, t, c * ExactScalar(rat(-k2.rexp)) * kI);
  }
  if (k2.xexp[axis] > 0) {
    OpKey t = k2;
    --t.xexp[axis];
    mul_mono_into(acc, left, t,
                  c * ExactScalar(rat(-long(k2.xexp[axis]))) * kI);
  }
}

void prune(std::map<OpKey, ExactScalar>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

}  // namespace

OpExpr OpExpr::monomial(const OpKey& k, const ExactScalar& c) {
  OpExpr e;
  e.add_term(k, c);
  return e;
}

OpExpr OpExpr::x(unsigned axis) {
  OpKey k;
  ++k.xexp[axis];
  return monomial(k, ExactScalar(rat(1)));
}

OpExpr OpExpr::p(unsigned axis) {
  OpKey k;
  ++k.pexp[axis];
  return monomial(k, ExactScalar(rat(1)));
}

OpExpr OpExpr::r_pow(int s) {
  OpKey k;
  k.rexp = s;
  return monomial(k, ExactScalar(rat(1)));
}

void OpExpr::add_term(const OpKey& k, const ExactScalar& c) {
  deposit(terms_, k, c);
  prune(terms_);
}

OpExpr operator+(const OpExpr& a, const OpExpr& b) {
  OpExpr out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

OpExpr operator-(const OpExpr& a, const OpExpr& b) {
  OpExpr out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

OpExpr operator*(const OpExpr& a, const OpExpr& b) {
  std::map<OpKey, ExactScalar> acc;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) mul_mono_into(acc, ka, kb, ca * cb);
  prune(acc);
  OpExpr out;
  out.terms_ = std::move(acc);
  return out;
}

OpExpr operator*(const ExactScalar& s, const OpExpr& e) {
  OpExpr out;
  for (const auto& [k, c] : e.terms_) out.add_term(k, s * c);
  return out;
}

OpExpr OpExpr::adjoint() const {
  std::map<OpKey, ExactScalar> acc;
  for (const auto& [k, c] : terms_) {
    OpKey momenta;
    momenta.pexp = k.pexp;
    OpKey rest;
    rest.xexp = k.xexp;
    rest.rexp = k.rexp;
    mul_mono_into(acc, momenta, rest, c.conj());
  }
  prune(acc);
  OpExpr out;
  out.terms_ = std::move(acc);
  return out;
}

OpExpr normal_order(const std::vector<OpExpr>& word) {
  OpExpr out = OpExpr::scalar(ExactScalar(rat(1)));
  for (const OpExpr& f : word) out *= f;
  return out;
}

OpExpr commutator(const OpExpr& a, const OpExpr& b) { return a * b - b * a; }

OpExpr from_poly(const XPoly& p) {
  OpExpr out;
  for (const auto& [e, c] : p.terms()) out.add_term({e, 0, {0, 0, 0}}, c);
  return out;
}

OpExpr pr() {
  OpExpr sum;
  for (unsigned a = 0; a < 3; ++a)
    sum += normal_order({OpExpr::r_pow(-1), OpExpr::x(a), OpExpr::p(a)});
  return sum - kI * OpExpr::r_pow(-1);
}

OpExpr a_op(const Rational& lambda, unsigned axis) {
  if (lambda <= 0) throw NonPositiveLambda("a_op: lambda must be positive");
  OpExpr inner = OpExpr::p(axis) -
                 (kI * ExactScalar(1 / lambda)) *
                     (OpExpr::x(axis) * OpExpr::r_pow(-1));
  return kInvRt2 * inner;
}

OpExpr a_dag(const Rational& lambda, unsigned axis) {
  return a_op(lambda, axis).adjoint();
}

OpExpr b_dag(const Rational& lambda) {
  if (lambda < 0) throw NegativeLambda("b_dag: lambda must be nonnegative");
  OpExpr inner = pr() + kI * (OpExpr::scalar(ExactScalar(1 / (lambda + 1))) -
                              ExactScalar(lambda + 1) * OpExpr::r_pow(-1));
  return kInvRt2 * inner;
}

OpExpr tperp() {
  OpExpr t;
  for (unsigned a = 0; a < 3; ++a) t += OpExpr::p(a) * OpExpr::p(a);
  OpExpr p_r = pr();
  return ExactScalar(rat(1, 2)) * (t - p_r * p_r);
}

OpExpr hamiltonian(const Rational& lambda) {
  if (lambda <= 0)
    throw NonPositiveLambda("hamiltonian: lambda must be positive");
  OpExpr t;
  for (unsigned a = 0; a < 3; ++a) t += OpExpr::p(a) * OpExpr::p(a);
  return ExactScalar(rat(1, 2)) * t -
         ExactScalar(1 / lambda) * OpExpr::r_pow(-1);
}

OpExpr energy_shift(const Rational& lambda) {
  return OpExpr::scalar(ExactScalar(-1 / (2 * lambda * lambda)));
}

bool check_identity(const OpExpr& lhs, const OpExpr& rhs) {
  return (lhs - rhs).is_zero();
}

MultOp::MultOp(const OpExpr& e) {
  for (const auto& [k, c] : e.terms()) {
    if (k.pexp != Exponents{0, 0, 0})
      throw std::invalid_argument("MultOp: momentum content left over");
    terms_.emplace(k, c);
  }
  // canonicalize z^2 -> R^2 - x^2 - y^2 until every z-exponent is 0 or 1
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->first.xexp[2] < 2) continue;
      OpKey base = it->first;
      ExactScalar c = it->second;
      terms_.erase(it);
      base.xexp[2] -= 2;
      OpKey kr = base;
      kr.rexp += 2;
      OpKey kx = base;
      kx.xexp[0] += 2;
      OpKey ky = base;
      ky.xexp[1] += 2;
      auto add = [&](const OpKey& k, const ExactScalar& v) {
        auto [jt, inserted] = terms_.emplace(k, v);
        if (!inserted) jt->second += v;
      };
      add(kr, c);
      add(kx, -c);
      add(ky, -c);
      changed = true;
      break;
    }
  }
  prune(terms_);
}

OpExpr MultOp::to_expr() const {
  OpExpr out;
  for (const auto& [k, c] : terms_) out.add_term(k, c);
  return out;
}

MultOp operator-(const MultOp& a, const MultOp& b) {
  return MultOp(a.to_expr() - b.to_expr());
}

MultOp operator*(const ExactScalar& s, const MultOp& m) {
  return MultOp(s * m.to_expr());
}

MultOp reduce_on_phi(const OpExpr& expr, const Rational& lambda) {
  if (lambda <= 0)
    throw NonPositiveLambda("reduce_on_phi: lambda must be positive");
  const ExactScalar sub = kI * ExactScalar(1 / lambda);
  OpExpr work = expr;
  while (true) {
    OpExpr next;
    bool any = false;
    for (const auto& [k, c] : work.terms()) {
      if (k.pexp == Exponents{0, 0, 0}) {
        next.add_term(k, c);
        continue;
      }
      any = true;
      unsigned axis = 2;
      while (k.pexp[axis] == 0) --axis;
      OpKey left = k;
      --left.pexp[axis];
      OpKey tail;  // x_axis R^{-1}
      ++tail.xexp[axis];
      tail.rexp = -1;
      next += OpExpr::monomial(left, c * sub) * OpExpr::monomial(tail, ExactScalar(rat(1)));
    }
    work = next;
    if (!any) break;
  }
  return MultOp(work);
}

}  // namespace cartfact
