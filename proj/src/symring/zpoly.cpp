#include "tsurf/symring/zpoly.hpp"

#include <cmath>

namespace tsurf::sym {

ZPoly::ZPoly(const RatExpr& c) {
  if (!c.is_zero()) coeffs_.emplace(0, c);
}

ZPoly ZPoly::z(int k) { return term(RatExpr(1), k); }

ZPoly ZPoly::term(const RatExpr& c, int k) {
  if (k < 0) throw Error("ZPoly::term: negative degree");
  ZPoly p;
  if (!c.is_zero()) p.coeffs_.emplace(k, c);
  return p;
}

ZPoly ZPoly::X() {
  ZPoly p;
  p.coeffs_.emplace(0, RatExpr::gen(Gen::A).pow(2));
  p.coeffs_.emplace(2, RatExpr(-1));
  return p;
}

RatExpr ZPoly::coeff(int k) const {
  if (k < 0) throw Error("ZPoly::coeff: negative degree " + std::to_string(k));
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? RatExpr() : it->second;
}

void ZPoly::set_coeff(int k, const RatExpr& c) {
  if (k < 0) throw Error("ZPoly::set_coeff: negative degree");
  if (c.is_zero()) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = c;
  }
}

std::size_t ZPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, c] : coeffs_) n += c.size();
  return n;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [k, c] : o.coeffs_) {
    auto [it, fresh] = coeffs_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [k, c] : o.coeffs_) {
    auto [it, fresh] = coeffs_.try_emplace(k);
    it->second -= c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  for (const auto& [i, ci] : a.coeffs_) {
    for (const auto& [j, cj] : b.coeffs_) {
      auto [it, fresh] = r.coeffs_.try_emplace(i + j);
      it->second += ci * cj;
    }
  }
  std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

ZPoly ZPoly::scaled(const RatExpr& c) const {
  if (c.is_zero()) return {};
  ZPoly r;
  for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
  return r;
}

ZPoly ZPoly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  ZPoly r = *this;
  for (auto& [k, v] : r.coeffs_) v = v.scaled(c);
  return r;
}

ZPoly ZPoly::divided(const RatExpr& unit) const {
  ZPoly r;
  for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v / unit);
  return r;
}

ZPoly ZPoly::pow(int n) const {
  if (n < 0) throw Error("ZPoly::pow: negative exponent");
  ZPoly result(1);
  ZPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ZPoly ZPoly::shifted(int k) const {
  ZPoly r;
  for (const auto& [i, c] : coeffs_) {
    if (i + k < 0) throw Error("ZPoly::shifted: z does not divide");
    r.coeffs_.emplace(i + k, c);
  }
  return r;
}

ZPoly ZPoly::d_z() const {
  ZPoly r;
  for (const auto& [k, c] : coeffs_) {
    if (k > 0) r.coeffs_.emplace(k - 1, c.scaled(k));
  }
  return r;
}

ZPoly ZPoly::d_u_coeffs() const {
  ZPoly r;
  for (const auto& [k, c] : coeffs_) r.set_coeff(k, c.d_u());
  return r;
}

ZPoly ZPoly::zero_out(std::initializer_list<Gen> gens) const {
  ZPoly r;
  for (const auto& [k, c] : coeffs_) r.set_coeff(k, c.zero_out(gens));
  return r;
}

std::optional<ZPoly> ZPoly::exact_div(const ZPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("ZPoly division by zero");
  const int dd = d.degree();
  const RatExpr lead = d.coeff(dd);
  ZPoly rem = *this;
  ZPoly quot;
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree();
    const RatExpr q = rem.coeff(k) / lead;
    quot.coeffs_.emplace(k - dd, q);
    rem -= d.scaled(q).shifted(k - dd);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::optional<ZPoly> ZPoly::exact_div_X() const {
  static const ZPoly x = X();
  return exact_div(x);
}

double ZPoly::eval(const GenValues& g, double z) const {
  double sum = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    sum += it->second.eval(g) * std::pow(z, it->first);
  }
  return sum;
}

mpq_class ZPoly::eval_exact(const ExactGenValues& g, const mpq_class& z) const {
  mpq_class sum = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    sum += it->second.eval_exact(g) * rational_pow(z, it->first);
  }
  return sum;
}

std::string ZPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int k = it->first;
    std::string c = it->second.str();
    std::string t;
    const bool simple = it->second.size() == 1 && c.find('(') == std::string::npos;
    if (k == 0) {
      t = simple ? c : "(" + c + ")";
    } else {
      const std::string zk = k == 1 ? "z" : "z^" + std::to_string(k);
      if (c == "1") {
        t = zk;
      } else if (c == "-1") {
        t = "-" + zk;
      } else {
        t = (simple ? c : "(" + c + ")") + "*" + zk;
      }
    }
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace tsurf::sym
