#pragma once

#include <array>
#include <vector>

namespace tsurf::geom {

// Cubic spline with not-a-knot ends. The third derivative is piecewise
// constant, so torsion computed from it carries O(h) error.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> t, std::vector<double> y);
  // Value and derivatives of orders 1..3.
  std::array<double, 4> eval(double t) const;

 private:
  std::vector<double> t_, y_, m_;  // m_ holds second derivatives at the knots
};

}  // namespace tsurf::geom
