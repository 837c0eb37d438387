#pragma once

#include <array>
#include <memory>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "tsurf/exprlang/expr.hpp"

namespace tsurf::geom {

using Vec3 = Eigen::Vector3d;
// Position and derivatives of orders 1..3 at one parameter value.
using CurveJet = std::array<Vec3, 4>;

class CurveSource {
 public:
  virtual ~CurveSource() = default;
  virtual CurveJet jet(double t) const = 0;
};

// A space curve on [t0, t1]. When arclength() is set the parameter is
// arclength and |c'| = 1.
class Curve {
 public:
  // x, y, z are expressions in t.
  static Curve analytic(expr::Expr x, expr::Expr y, expr::Expr z, double t0, double t1, bool arclength = false);
  // Rows are (t, x, y, z) with strictly increasing t; at least 4 rows.
  // Interpolated by a not-a-knot cubic spline per coordinate.
  static Curve samples(std::vector<std::array<double, 4>> rows, bool arclength = false);
  static Curve from_source(std::shared_ptr<const CurveSource> src, double t0, double t1, bool arclength);

  double t0() const { return t0_; }
  double t1() const { return t1_; }
  bool arclength() const { return arclength_; }
  CurveJet jet(double t) const { return src_->jet(t); }
  Vec3 point(double t) const { return jet(t)[0]; }
  Curve translated(const Vec3& offset) const;

  // Source expressions, present only for analytic curves.
  const std::array<expr::Expr, 3>* expressions() const;
  // Sample rows, present only for sampled curves.
  const std::vector<std::array<double, 4>>* sample_rows() const;
  const std::shared_ptr<const CurveSource>& source() const { return src_; }

 private:
  std::shared_ptr<const CurveSource> src_;
  double t0_ = 0.0, t1_ = 0.0;
  bool arclength_ = false;
};

class DegenerateCurveError : public Error {
 public:
  DegenerateCurveError(double t, double speed);
  double t() const { return t_; }

 private:
  double t_;
};

// Arclength parameter s = t0 + integral of |c'| from t0, inverted by Hermite
// cubic interpolation on a table of `intervals` cells followed by Newton
// polishing. Derivatives in s come from the exact chain rule, so the result
// carries the source's derivative accuracy. Curves already flagged as
// arclength are returned as they are.
Curve arclength_reparam(const Curve& c, double tol = 1e-6, int intervals = 1024);

}  // namespace tsurf::geom
