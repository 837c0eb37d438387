#include "tsurf/symring/radfrac.hpp"

#include <cmath>

namespace tsurf::sym {

RadFrac::RadFrac(const ZPoly& p, const ZPoly& q, int k) : p_(p), q_(q), k_(k) {
  if (k < 0) {
    const ZPoly xn = ZPoly::X().pow(-k);
    p_ = p_ * xn;
    q_ = q_ * xn;
    k_ = 0;
  }
  normalize();
}

void RadFrac::normalize() {
  if (p_.is_zero() && q_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto pd = p_.exact_div_X();
    if (!pd) return;
    auto qd = q_.exact_div_X();
    if (!qd) return;
    p_ = std::move(*pd);
    q_ = std::move(*qd);
    --k_;
  }
}

RadFrac RadFrac::s() { return RadFrac(ZPoly(), ZPoly(1)); }
RadFrac RadFrac::z() { return RadFrac(ZPoly::z()); }
RadFrac RadFrac::X() { return RadFrac(ZPoly::X()); }

RadFrac RadFrac::operator-() const {
  RadFrac r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

namespace {

// Lift (p, q) from X^-k to X^-target.
void lift(ZPoly& p, ZPoly& q, int k, int target) {
  if (target == k) return;
  const ZPoly xn = ZPoly::X().pow(target - k);
  p = p * xn;
  q = q * xn;
}

}  // namespace

RadFrac operator+(const RadFrac& a, const RadFrac& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const int k = std::max(a.k_, b.k_);
  ZPoly ap = a.p_, aq = a.q_, bp = b.p_, bq = b.q_;
  lift(ap, aq, a.k_, k);
  lift(bp, bq, b.k_, k);
  return RadFrac(ap + bp, aq + bq, k);
}

RadFrac operator-(const RadFrac& a, const RadFrac& b) { return a + (-b); }

RadFrac operator*(const RadFrac& a, const RadFrac& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ZPoly p = a.p_ * b.p_;
  if (!a.q_.is_zero() && !b.q_.is_zero()) p += a.q_ * b.q_ * ZPoly::X();
  ZPoly q = a.p_ * b.q_ + a.q_ * b.p_;
  return RadFrac(p, q, a.k_ + b.k_);
}

RadFrac RadFrac::scaled(const RatExpr& c) const {
  RadFrac r = *this;
  r.p_ = p_.scaled(c);
  r.q_ = q_.scaled(c);
  if (c.is_zero()) r.k_ = 0;
  return r;
}

RadFrac RadFrac::div_X(int n) const {
  if (is_zero()) return {};
  return RadFrac(p_, q_, k_ + n);
}

RadFrac RadFrac::d_z() const {
  // d/dz (p + q s) X^-k = (p' + q' s + q ds/dz) X^-k + (p + q s)(-k) X^-k-1 dX/dz
  // with ds/dz = -z s / X and dX/dz = -2z.
  const RadFrac base(p_.d_z(), q_.d_z(), k_);
  const RadFrac from_s = RadFrac(ZPoly(), q_.scaled(RatExpr(-1)) * ZPoly::z(), k_ + 1);
  RadFrac out = base + from_s;
  if (k_ > 0) {
    out += RadFrac(p_, q_, k_ + 1) * RadFrac(ZPoly::z().scaled(RatExpr(2 * k_)));
  }
  return out;
}

RadFrac RadFrac::zero_out(std::initializer_list<Gen> gens) const {
  return RadFrac(p_.zero_out(gens), q_.zero_out(gens), k_);
}

RadFrac RadFrac::norm() const {
  return RadFrac(p_ * p_ - q_ * q_ * ZPoly::X(), ZPoly(), 2 * k_);
}

double RadFrac::eval(const NumericPoint& pt) const {
  const double x = pt.g[0] * pt.g[0] - pt.z * pt.z;
  const double num = p_.eval(pt.g, pt.z) + q_.eval(pt.g, pt.z) * pt.s;
  return k_ == 0 ? num : num / std::pow(x, k_);
}

mpq_class RadFrac::eval_exact(const ExactPoint& pt) const {
  const mpq_class x = pt.g[0] * pt.g[0] - pt.z * pt.z;
  if (pt.s * pt.s != x) throw Error("exact point with s^2 != A^2 - z^2");
  const mpq_class num = p_.eval_exact(pt.g, pt.z) + q_.eval_exact(pt.g, pt.z) * pt.s;
  return k_ == 0 ? num : mpq_class(num / rational_pow(x, k_));
}

std::string RadFrac::str() const {
  std::string out;
  if (q_.is_zero()) {
    out = p_.str();
  } else if (p_.is_zero()) {
    out = "(" + q_.str() + ")*s";
  } else {
    out = "(" + p_.str() + ") + (" + q_.str() + ")*s";
  }
  if (k_ == 0) return out;
  return "(" + out + ")/X" + (k_ == 1 ? std::string() : "^" + std::to_string(k_));
}

std::string CotPair::str() const {
  return "[" + reg.str() + "] + [" + cot.str() + "]*cot";
}

}  // namespace tsurf::sym
