#include "tsurf/exprlang/jet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tsurf::expr {

namespace {

constexpr double kFactorial[4] = {1, 1, 2, 6};

void check_order(int order) {
  if (order < 0 || order > Jet::kMaxOrder) throw Error("jet order must be in 0..3");
}

}  // namespace

std::size_t Jet::index(int i, int j) {
  // Graded layout: (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) ...
  const int n = i + j;
  return static_cast<std::size_t>(n * (n + 1) / 2 + j);
}

Jet Jet::constant(double c, int order) {
  check_order(order);
  Jet j;
  j.order_ = order;
  j.c_[0] = c;
  return j;
}

Jet Jet::variable(double c, int dir, int order) {
  Jet j = constant(c, order);
  if (order >= 1) j.c_[index(dir == 0 ? 1 : 0, dir == 0 ? 0 : 1)] = 1.0;
  return j;
}

Jet Jet::series(const std::array<double, 4>& derivs, int dir, int order) {
  Jet j = constant(derivs[0], order);
  for (int k = 1; k <= order; ++k) j.c_[index(dir == 0 ? k : 0, dir == 0 ? 0 : k)] = derivs[k] / kFactorial[k];
  return j;
}

double Jet::d(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) throw Error("jet partial beyond its order");
  return c_[index(i, j)] * kFactorial[i] * kFactorial[j];
}

Jet Jet::partial(int dir) const {
  if (order_ == 0) throw Error("partial of an order-0 jet");
  Jet out = constant(0.0, order_ - 1);
  for (int n = 0; n < order_; ++n) {
    for (int j = 0; j <= n; ++j) {
      const int i = n - j;
      out.c_[index(i, j)] = dir == 0 ? (i + 1) * coeff(i + 1, j) : (j + 1) * coeff(i, j + 1);
    }
  }
  return out;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  const std::size_t used = static_cast<std::size_t>((order_ + 1) * (order_ + 2) / 2);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = k < used ? c_[k] + o.c_[k] : 0.0;
  return *this;
}

Jet& Jet::operator-=(const Jet& o) { return *this += -o; }

Jet& Jet::operator*=(const Jet& o) {
  const int order = std::min(order_, o.order_);
  Jet out = constant(0.0, order);
  for (int n = 0; n <= order; ++n) {
    for (int j = 0; j <= n; ++j) {
      const int i = n - j;
      double acc = 0.0;
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q) acc += coeff(p, q) * o.coeff(i - p, j - q);
      out.c_[index(i, j)] = acc;
    }
  }
  return *this = out;
}

Jet operator*(double s, Jet a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

Jet Jet::compose(const std::array<double, 4>& f) const {
  Jet h = *this;
  h.c_[0] = 0.0;
  Jet out = constant(f[0], order_);
  Jet hk = constant(1.0, order_);
  for (int k = 1; k <= order_; ++k) {
    hk *= h;
    out += (f[k] / kFactorial[k]) * hk;
  }
  return out;
}

Jet recip(const Jet& a) {
  const double x = a.value();
  if (x == 0.0) throw JetDomainError("division by zero");
  const double r = 1.0 / x;
  return a.compose({r, -r * r, 2 * r * r * r, -6 * r * r * r * r});
}

Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

Jet sin(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({s, c, -s, -c});
}

Jet cos(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({c, -s, -c, s});
}

Jet tan(const Jet& a) {
  if (std::abs(std::cos(a.value())) < 1e-14) throw JetDomainError("tan at a pole");
  const double t = std::tan(a.value()), s2 = 1 + t * t;
  return a.compose({t, s2, 2 * t * s2, 2 * s2 * (1 + 3 * t * t)});
}

Jet exp(const Jet& a) {
  const double e = std::exp(a.value());
  if (!std::isfinite(e)) throw JetDomainError("exp overflow");
  return a.compose({e, e, e, e});
}

Jet log(const Jet& a) {
  const double x = a.value();
  if (!(x > 0.0)) throw JetDomainError("log of a non-positive value");
  const double r = 1.0 / x;
  return a.compose({std::log(x), r, -r * r, 2 * r * r * r});
}

Jet sqrt(const Jet& a) {
  const double x = a.value();
  if (x < 0.0) throw JetDomainError("sqrt of a negative value");
  if (x == 0.0 && a.order() > 0) throw JetDomainError("sqrt is not differentiable at 0");
  const double r = std::sqrt(x);
  if (a.order() == 0) return Jet::constant(r, 0);
  return a.compose({r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x)});
}

Jet atan(const Jet& a) {
  const double x = a.value(), q = 1 / (1 + x * x);
  return a.compose({std::atan(x), q, -2 * x * q * q, (6 * x * x - 2) * q * q * q});
}

Jet pow(const Jet& a, int n) {
  const double x = a.value();
  if (x == 0.0 && n < 0) throw JetDomainError("division by zero");
  std::array<double, 4> f{};
  double falling = 1.0;
  for (int k = 0; k <= 3; ++k) {
    f[k] = falling == 0.0 ? 0.0 : falling * std::pow(x, n - k);
    falling *= n - k;
  }
  return a.compose(f);
}

Jet atan2(const Jet& y, const Jet& x) {
  const double x0 = x.value(), y0 = y.value();
  if (x0 == 0.0 && y0 == 0.0) throw JetDomainError("angle of the zero vector");
  // Rotate by the base angle so the remaining angle starts at 0.
  const Jet w = (x0 * y - y0 * x) / (x0 * x + y0 * y);
  return std::atan2(y0, x0) + atan(w);
}

namespace {

struct JetEval {
  const Bindings& at;
  int order;
  Var dir0, dir1;

  Jet operator()(const Expr& e) const {
    using K = Expr::Kind;
    try {
      switch (e.kind()) {
        case K::number:
        case K::pi: return Jet::constant(e.value(), order);
        case K::variable: {
          auto it = at.find(e.var());
          if (it == at.end()) throw InputError("unbound variable '" + std::string(var_name(e.var())) + "'");
          if (e.var() == dir0) return Jet::variable(it->second, 0, order);
          if (e.var() == dir1) return Jet::variable(it->second, 1, order);
          return Jet::constant(it->second, order);
        }
        case K::neg: return -(*this)(e.child(0));
        case K::add: return (*this)(e.child(0)) + (*this)(e.child(1));
        case K::sub: return (*this)(e.child(0)) - (*this)(e.child(1));
        case K::mul: return (*this)(e.child(0)) * (*this)(e.child(1));
        case K::div: {
          const Jet num = (*this)(e.child(0));
          return num / (*this)(e.child(1));
        }
        case K::pow: return pow((*this)(e.child(0)), e.exponent());
        case K::call: {
          const Jet a = (*this)(e.child(0));
          switch (e.func()) {
            case Func::sin: return sin(a);
            case Func::cos: return cos(a);
            case Func::tan: return tan(a);
            case Func::exp: return exp(a);
            case Func::log: return log(a);
            case Func::sqrt: return sqrt(a);
            case Func::atan: return atan(a);
          }
        }
      }
    } catch (const JetDomainError& err) {
      throw DomainError(err.what(), e.str());
    }
    throw Error("unreachable expression kind");
  }
};

}  // namespace

Jet eval_jet(const Expr& e, const Bindings& at, int order, Var dir0, Var dir1) {
  check_order(order);
  return JetEval{at, order, dir0, dir1}(e);
}

}  // namespace tsurf::expr
