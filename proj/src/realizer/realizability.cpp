#include <algorithm>
#include <cmath>
#include <sstream>

#include "tsurf/exprlang/jet.hpp"
#include "tsurf/realizer/realizer.hpp"

namespace tsurf::real {

using expr::Jet;
using expr::Var;

StrictnessError::StrictnessError(const std::string& which, double u, double v)
    : InputError([&] {
        std::ostringstream os;
        os << "strictness violated at (u, v) = (" << u << ", " << v << "): " << which;
        return os.str();
      }()),
      u_(u),
      v_(v) {}

double metric_residual(double A, double B, double phi_u, double phi_v, double sin_phi, double K) {
  const double s2 = sin_phi * sin_phi;
  return std::abs((A * A - phi_u * phi_u) * (B * B - phi_v * phi_v) - K * K * s2 * s2);
}

namespace {

void require_vars(const expr::Expr& e, std::initializer_list<Var> allowed, const char* what) {
  for (Var v : e.free_vars())
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
      throw InputError(std::string(what) + " may not depend on " + std::string(expr::var_name(v)));
}

}  // namespace

RealizabilityReport realizability_check(const RealizabilityInput& in, int nu, int nv) {
  require_vars(in.phi, {Var::u, Var::v}, "phi");
  require_vars(in.A, {Var::u}, "A");
  require_vars(in.B, {Var::v}, "B");
  if (std::abs(in.eps1) != 1 || std::abs(in.eps2) != 1) throw InputError("eps1 and eps2 must be +1 or -1");
  // A^2 > phi_u^2 is checked before anything else, so a boundary case such as
  // A = |phi_u| is rejected even when K = 0.
  for (double u : geom::cell_centres(in.domain.u0, in.domain.u1, nu)) {
    for (double v : geom::cell_centres(in.domain.v0, in.domain.v1, nv)) {
      const expr::Bindings at = {{Var::u, u}, {Var::v, v}};
      const double a = in.A.eval(at), phi_u = expr::eval_jet(in.phi, at, 1).du();
      if (!(a * a - phi_u * phi_u > 0)) throw StrictnessError("A^2 <= phi_u^2", u, v);
    }
  }
  RealizabilityReport r;
  if (in.K == 0.0) {
    r.applicable = false;
    r.message =
        "K = 0: the metric belongs to a cylindrical surface (L = N = 0, or one of L, N vanishing identically); "
        "no residual computed";
    return r;
  }
  if (in.eps1 * in.eps2 != (in.K > 0 ? 1 : -1)) throw InputError("eps1 * eps2 must equal sign(K)");

  for (double u : geom::cell_centres(in.domain.u0, in.domain.u1, nu)) {
    for (double v : geom::cell_centres(in.domain.v0, in.domain.v1, nv)) {
      const expr::Bindings at = {{Var::u, u}, {Var::v, v}};
      const Jet phi = expr::eval_jet(in.phi, at, 3);
      const Jet A = expr::eval_jet(in.A, at, 2);
      const Jet B = expr::eval_jet(in.B, at, 2);
      const Jet phi_u = phi.partial(0), phi_v = phi.partial(1);
      const Jet la = A * A - phi_u * phi_u, nb = B * B - phi_v * phi_v;
      if (!(la.value() > 0)) throw StrictnessError("A^2 <= phi_u^2", u, v);
      if (!(nb.value() > 0)) throw StrictnessError("B^2 <= phi_v^2", u, v);
      const Jet L = static_cast<double>(in.eps1) * expr::sqrt(la);
      const Jet N = static_cast<double>(in.eps2) * expr::sqrt(nb);
      const double s = std::sin(phi.value());
      if (std::abs(s) < geom::kSinFloor) throw geom::RegularityError(u, v, s);
      r.metric = std::max(r.metric, metric_residual(A.value(), B.value(), phi.du(), phi.dv(), s, in.K));
      r.gauss = std::max(r.gauss, std::abs(L.value() * N.value() / (s * s) - in.K));
      r.egregium = std::max(r.egregium, std::abs(-phi.duv() / s - in.K));
      r.codazzi_1 = std::max(r.codazzi_1, std::abs(L.dv() - N.value() * phi.du() / s));
      r.codazzi_2 = std::max(r.codazzi_2, std::abs(N.du() - L.value() * phi.dv() / s));
      ++r.points;
    }
  }
  return r;
}

}  // namespace tsurf::real
