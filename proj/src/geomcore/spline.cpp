#include "tsurf/geomcore/spline.hpp"

#include <algorithm>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "tsurf/error.hpp"

namespace tsurf::geom {

CubicSpline::CubicSpline(std::vector<double> t, std::vector<double> y) : t_(std::move(t)), y_(std::move(y)) {
  const std::size_t n = t_.size();
  if (n < 4 || y_.size() != n) throw InputError("spline needs at least 4 samples");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(t_[i + 1] > t_[i])) throw InputError("spline parameters must be strictly increasing");

  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = t_[i + 1] - t_[i];

  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> entries;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  const auto row = [&](std::size_t r, std::size_t c, double v) {
    entries.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
  };
  // Not-a-knot: the third derivative is continuous across t_1 and t_{n-2}.
  row(0, 0, h[1]);
  row(0, 1, -(h[0] + h[1]));
  row(0, 2, h[0]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    row(i, i - 1, h[i - 1]);
    row(i, i, 2 * (h[i - 1] + h[i]));
    row(i, i + 1, h[i]);
    rhs[static_cast<Eigen::Index>(i)] = 6 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
  }
  row(n - 1, n - 3, h[n - 2]);
  row(n - 1, n - 2, -(h[n - 3] + h[n - 2]));
  row(n - 1, n - 1, h[n - 3]);

  Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  a.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) throw Error("spline system is singular");
  const Eigen::VectorXd m = lu.solve(rhs);
  m_.assign(m.data(), m.data() + m.size());
}

std::array<double, 4> CubicSpline::eval(double t) const {
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  std::size_t i = it == t_.begin() ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
  i = std::min(i, t_.size() - 2);
  const double h = t_[i + 1] - t_[i], x = t - t_[i];
  const double m0 = m_[i], m1 = m_[i + 1];
  const double b = (y_[i + 1] - y_[i]) / h - h * (2 * m0 + m1) / 6;
  const double c3 = (m1 - m0) / (6 * h);
  return {y_[i] + x * (b + x * (m0 / 2 + x * c3)), b + x * (m0 + 3 * c3 * x), m0 + 6 * c3 * x, 6 * c3};
}

}  // namespace tsurf::geom
