#include "tsurf/geomcore/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "tsurf/exprlang/jet.hpp"
#include "tsurf/geomcore/spline.hpp"

namespace tsurf::geom {

namespace {

class AnalyticSource : public CurveSource {
 public:
  explicit AnalyticSource(std::array<expr::Expr, 3> e) : e_(std::move(e)) {}
  CurveJet jet(double t) const override {
    CurveJet out;
    for (int k = 0; k < 3; ++k) {
      const expr::Jet j = expr::eval_jet(e_[k], {{expr::Var::t, t}}, 3, expr::Var::t, expr::Var::s);
      for (int d = 0; d <= 3; ++d) out[d][k] = j.d(d, 0);
    }
    return out;
  }
  const std::array<expr::Expr, 3>& exprs() const { return e_; }

 private:
  std::array<expr::Expr, 3> e_;
};

class SampleSource : public CurveSource {
 public:
  explicit SampleSource(std::vector<std::array<double, 4>> rows) : rows_(std::move(rows)) {
    std::vector<double> t(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) t[i] = rows_[i][0];
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<double> y(rows_.size());
      for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = rows_[i][k + 1];
      splines_.emplace_back(t, std::move(y));
    }
  }
  CurveJet jet(double t) const override {
    CurveJet out;
    for (int k = 0; k < 3; ++k) {
      const auto v = splines_[k].eval(t);
      for (int d = 0; d <= 3; ++d) out[d][k] = v[d];
    }
    return out;
  }
  const std::vector<std::array<double, 4>>& rows() const { return rows_; }

 private:
  std::vector<std::array<double, 4>> rows_;
  std::vector<CubicSpline> splines_;
};

class TranslatedSource : public CurveSource {
 public:
  TranslatedSource(std::shared_ptr<const CurveSource> base, Vec3 offset) : base_(std::move(base)), offset_(offset) {}
  CurveJet jet(double t) const override {
    CurveJet out = base_->jet(t);
    out[0] += offset_;
    return out;
  }

 private:
  std::shared_ptr<const CurveSource> base_;
  Vec3 offset_;
};

double speed(const CurveSource& c, double t) { return c.jet(t)[1].norm(); }

class ReparamSource : public CurveSource {
 public:
  ReparamSource(std::shared_ptr<const CurveSource> base, std::vector<double> t, std::vector<double> s,
                std::vector<double> sigma)
      : base_(std::move(base)), t_(std::move(t)), s_(std::move(s)), sigma_(std::move(sigma)) {}

  CurveJet jet(double s) const override {
    const double t = t_of_s(s);
    const CurveJet c = base_->jet(t);
    const double sig = c[1].norm();
    const double sig_t = c[1].dot(c[2]) / sig;
    const double sig_tt = (c[2].squaredNorm() + c[1].dot(c[3]) - sig_t * sig_t) / sig;
    const double ts = 1.0 / sig;
    const double tss = -sig_t / (sig * sig * sig);
    const double tsss = -sig_tt / std::pow(sig, 4) + 3 * sig_t * sig_t / std::pow(sig, 5);
    CurveJet out;
    out[0] = c[0];
    out[1] = c[1] * ts;
    out[2] = c[2] * ts * ts + c[1] * tss;
    out[3] = c[3] * ts * ts * ts + 3 * c[2] * ts * tss + c[1] * tsss;
    return out;
  }

 private:
  double t_of_s(double s) const {
    s = std::clamp(s, s_.front(), s_.back());
    auto it = std::upper_bound(s_.begin(), s_.end(), s);
    std::size_t i = it == s_.begin() ? 0 : static_cast<std::size_t>(it - s_.begin()) - 1;
    i = std::min(i, s_.size() - 2);
    const double ds = s_[i + 1] - s_[i], x = (s - s_[i]) / ds;
    const double h00 = (1 + 2 * x) * (1 - x) * (1 - x), h10 = x * (1 - x) * (1 - x);
    const double h01 = x * x * (3 - 2 * x), h11 = x * x * (x - 1);
    double t = h00 * t_[i] + h10 * ds / sigma_[i] + h01 * t_[i + 1] + h11 * ds / sigma_[i + 1];
    const auto sigma = [this](double tt) { return speed(*base_, tt); };
    for (int iter = 0; iter < 3; ++iter) {
      const double f = s_[i] + boost::math::quadrature::gauss<double, 7>::integrate(sigma, t_[i], t) - s;
      const double step = f / sigma(t);
      t = std::clamp(t - step, t_[i], t_[i + 1]);
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(t))) break;
    }
    return t;
  }

  std::shared_ptr<const CurveSource> base_;
  std::vector<double> t_, s_, sigma_;
};

}  // namespace

Curve Curve::from_source(std::shared_ptr<const CurveSource> src, double t0, double t1, bool arclength) {
  if (!(t1 > t0)) throw InputError("curve domain must satisfy t0 < t1");
  Curve c;
  c.src_ = std::move(src);
  c.t0_ = t0;
  c.t1_ = t1;
  c.arclength_ = arclength;
  return c;
}

Curve Curve::analytic(expr::Expr x, expr::Expr y, expr::Expr z, double t0, double t1, bool arclength) {
  for (const auto* e : {&x, &y, &z})
    for (expr::Var v : e->free_vars())
      if (v != expr::Var::t)
        throw InputError("curve component '" + e->str() + "' may only depend on t");
  return from_source(std::make_shared<AnalyticSource>(std::array<expr::Expr, 3>{x, y, z}), t0, t1, arclength);
}

Curve Curve::samples(std::vector<std::array<double, 4>> rows, bool arclength) {
  if (rows.size() < 4) throw InputError("sampled curve needs at least 4 points");
  const double t0 = rows.front()[0], t1 = rows.back()[0];
  return from_source(std::make_shared<SampleSource>(std::move(rows)), t0, t1, arclength);
}

Curve Curve::translated(const Vec3& offset) const {
  return from_source(std::make_shared<TranslatedSource>(src_, offset), t0_, t1_, arclength_);
}

const std::array<expr::Expr, 3>* Curve::expressions() const {
  const auto* a = dynamic_cast<const AnalyticSource*>(src_.get());
  return a ? &a->exprs() : nullptr;
}

const std::vector<std::array<double, 4>>* Curve::sample_rows() const {
  const auto* s = dynamic_cast<const SampleSource*>(src_.get());
  return s ? &s->rows() : nullptr;
}

DegenerateCurveError::DegenerateCurveError(double t, double speed)
    : Error([&] {
        std::ostringstream os;
        os << "degenerate curve: speed " << speed << " at t = " << t;
        return os.str();
      }()),
      t_(t) {}

Curve arclength_reparam(const Curve& c, double tol, int intervals) {
  if (intervals < 2) throw Error("arclength_reparam needs at least 2 intervals");
  if (c.arclength()) return c;
  const auto& src = c.source();
  const double dt = (c.t1() - c.t0()) / intervals;
  std::vector<double> t(intervals + 1), s(intervals + 1), sigma(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    t[i] = i == intervals ? c.t1() : c.t0() + i * dt;
    sigma[i] = speed(*src, t[i]);
    if (sigma[i] < tol) throw DegenerateCurveError(t[i], sigma[i]);
  }
  const auto f = [&src](double x) { return speed(*src, x); };
  s[0] = c.t0();
  for (int i = 0; i < intervals; ++i) {
    const double mid = 0.5 * (t[i] + t[i + 1]);
    const double sm = f(mid);
    if (sm < tol) throw DegenerateCurveError(mid, sm);
    s[i + 1] = s[i] + boost::math::quadrature::gauss<double, 7>::integrate(f, t[i], t[i + 1]);
  }
  const double s1 = s.back();
  return Curve::from_source(std::make_shared<ReparamSource>(src, std::move(t), std::move(s), std::move(sigma)),
                            c.t0(), s1, true);
}

}  // namespace tsurf::geom
