#include <algorithm>
#include <cmath>
#include <limits>

#include "tsurf/realizer/realizer.hpp"

namespace tsurf::real {

ConservationReport conservation_AB(const FormField& forms, const Rect& domain, int nu, int nv) {
  ConservationReport r;
  r.u = geom::cell_centres(domain.u0, domain.u1, nu);
  r.v = geom::cell_centres(domain.v0, domain.v1, nv);
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> a_lo(r.u.size(), inf), a_hi(r.u.size(), -inf), a_sum(r.u.size(), 0.0);
  std::vector<double> b_lo(r.v.size(), inf), b_hi(r.v.size(), -inf), b_sum(r.v.size(), 0.0);
  std::vector<int> a_n(r.u.size(), 0), b_n(r.v.size(), 0);
  for (std::size_t i = 0; i < r.u.size(); ++i) {
    for (std::size_t j = 0; j < r.v.size(); ++j) {
      geom::FormCoefficients fc;
      try {
        fc = forms(r.u[i], r.v[j]);
      } catch (const geom::RegularityError&) {
        ++r.skipped;
        continue;
      }
      const double a = std::sqrt(fc.L * fc.L + fc.phi_u * fc.phi_u);
      const double b = std::sqrt(fc.N * fc.N + fc.phi_v * fc.phi_v);
      a_lo[i] = std::min(a_lo[i], a);
      a_hi[i] = std::max(a_hi[i], a);
      a_sum[i] += a;
      ++a_n[i];
      b_lo[j] = std::min(b_lo[j], b);
      b_hi[j] = std::max(b_hi[j], b);
      b_sum[j] += b;
      ++b_n[j];
    }
  }
  for (std::size_t i = 0; i < r.u.size(); ++i) {
    r.A.push_back(a_n[i] ? a_sum[i] / a_n[i] : 0.0);
    r.A_spread.push_back(a_n[i] ? a_hi[i] - a_lo[i] : 0.0);
    r.max_spread_A = std::max(r.max_spread_A, r.A_spread.back());
  }
  for (std::size_t j = 0; j < r.v.size(); ++j) {
    r.B.push_back(b_n[j] ? b_sum[j] / b_n[j] : 0.0);
    r.B_spread.push_back(b_n[j] ? b_hi[j] - b_lo[j] : 0.0);
    r.max_spread_B = std::max(r.max_spread_B, r.B_spread.back());
  }
  return r;
}

ConservationReport conservation_AB(const SurfacePatch& s, int nu, int nv) {
  return conservation_AB([&s](double u, double v) { return geom::form_coefficients(s, u, v); }, s.domain, nu, nv);
}

}  // namespace tsurf::real
