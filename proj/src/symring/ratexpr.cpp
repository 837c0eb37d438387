#include "tsurf/symring/ratexpr.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace tsurf::sym {

namespace {

using Term = RatExpr::Term;

bool term_less(const Term& a, const Term& b) { return grlex_less(a.first, b.first); }

// Merge two sorted term lists with sign applied to the second.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, negate_b ? mpq_class(-b[j].second) : b[j].second);
      ++j;
    } else {
      mpq_class c = negate_b ? mpq_class(a[i].second - b[j].second) : mpq_class(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string rational_str(const mpq_class& q) { return q.get_str(); }

RatExpr::RatExpr(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), mpq_class(c));
}

RatExpr::RatExpr(const mpq_class& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial(), c);
}

RatExpr RatExpr::gen(Gen g) { return monomial(Monomial::gen(g)); }

RatExpr RatExpr::monomial(Monomial m, const mpq_class& c) {
  RatExpr r;
  if (sgn(c) != 0) r.terms_.emplace_back(m, c);
  return r;
}

RatExpr RatExpr::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  RatExpr r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (sgn(r.terms_.back().second) == 0) r.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool RatExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

mpq_class RatExpr::constant_value() const {
  for (const auto& [m, c] : terms_) {
    if (m.is_unit()) return c;
  }
  return 0;
}

int RatExpr::denominator_power() const {
  int k = 0;
  for (const auto& [m, c] : terms_) k = std::max(k, -m.exp(Gen::A));
  return k;
}

RatExpr RatExpr::numerator() const {
  const int k = denominator_power();
  if (k == 0) return *this;
  return *this * monomial(Monomial::gen(Gen::A, k));
}

RatExpr RatExpr::operator-() const {
  RatExpr r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

RatExpr& RatExpr::operator+=(const RatExpr& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

RatExpr& RatExpr::operator-=(const RatExpr& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

RatExpr& RatExpr::operator*=(const RatExpr& o) { return *this = *this * o; }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single term keeps the order (grlex is a group order).
    const bool a_single = a.terms_.size() == 1;
    const RatExpr& many = a_single ? b : a;
    const Term& one = a_single ? a.terms_[0] : b.terms_[0];
    RatExpr r;
    r.terms_.reserve(many.terms_.size());
    for (const auto& [m, c] : many.terms_) r.terms_.emplace_back(m * one.first, c * one.second);
    return r;
  }
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  mpq_class tmp;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, fresh] = acc.try_emplace(ma * mb);
      if (fresh) {
        it->second = tmp;
      } else {
        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), tmp.get_mpq_t());
      }
    }
  }
  RatExpr r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) r.terms_.emplace_back(m, std::move(c));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
  if (b.is_zero()) throw DivisionByZero("RatExpr division by zero");
  if (b.terms_.size() != 1) {
    throw LocalizationError("RatExpr division by non-unit " + b.str() + " (only c*A^k allowed)");
  }
  const auto& [m, c] = b.terms_[0];
  auto e = m.exponents();
  for (int i = 1; i < kNumGens; ++i) {
    if (e[i] != 0) {
      throw LocalizationError("RatExpr division by non-unit " + b.str() + " (only c*A^k allowed)");
    }
  }
  const mpq_class inv = 1 / c;
  return a * RatExpr::monomial(Monomial::gen(Gen::A, -e[0]), inv);
}

RatExpr RatExpr::pow(int n) const {
  if (n < 0) return RatExpr(1) / pow(-n);
  RatExpr result(1);
  RatExpr base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

RatExpr RatExpr::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  RatExpr r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

RatExpr RatExpr::partial(Gen g) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exp(g);
    if (e == 0) continue;
    out.emplace_back(m.with_exp(g, e - 1), c * e);
  }
  return from_terms(std::move(out));
}

RatExpr RatExpr::d_u() const {
  static constexpr std::pair<Gen, Gen> kNext[] = {
      {Gen::A, Gen::A1}, {Gen::A1, Gen::A2}, {Gen::A2, Gen::A3}, {Gen::T, Gen::T1}, {Gen::T1, Gen::T2}};
  for (const auto& [m, c] : terms_) {
    if (m.exp(Gen::A3) != 0) throw GeneratorOverflow("d_u of A3 requested (generators stop at A''')");
    if (m.exp(Gen::T2) != 0) throw GeneratorOverflow("d_u of T2 requested (generators stop at tau'')");
  }
  RatExpr out;
  for (const auto& [g, next] : kNext) {
    RatExpr p = partial(g);
    if (!p.is_zero()) out += p * gen(next);
  }
  return out;
}

RatExpr RatExpr::zero_out(std::initializer_list<Gen> gens) const {
  RatExpr r;
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    for (Gen g : gens) {
      if (g == Gen::A) throw LocalizationError("cannot substitute A = 0");
      if (m.exp(g) != 0) keep = false;
    }
    if (keep) r.terms_.emplace_back(m, c);
  }
  return r;
}

bool RatExpr::proportional_to(const RatExpr& other, mpq_class& c) const {
  if (other.is_zero() || terms_.size() != other.terms_.size()) return false;
  if (is_zero()) return false;
  const mpq_class ratio = terms_[0].second / other.terms_[0].second;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == other.terms_[i].first)) return false;
    if (terms_[i].second != ratio * other.terms_[i].second) return false;
  }
  c = ratio;
  return true;
}

mpq_class rational_pow(const mpq_class& q, int e) {
  if (e < 0) {
    if (q == 0) throw DivisionByZero("negative power of zero");
    return rational_pow(1 / q, -e);
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

mpq_class RatExpr::eval_exact(const ExactGenValues& g) const {
  mpq_class sum = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    const auto e = m.exponents();
    for (int i = 0; i < kNumGens; ++i) {
      if (e[i] != 0) t *= rational_pow(g[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

double RatExpr::eval(const GenValues& g) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    const auto e = m.exponents();
    for (int i = 0; i < kNumGens; ++i) {
      if (e[i] != 0) t *= std::pow(g[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

namespace {

std::string term_str(const Monomial& m, const mpq_class& c) {
  if (m.is_unit()) return rational_str(c);
  if (c == 1) return m.str();
  if (c == -1) return "-" + m.str();
  return rational_str(c) + "*" + m.str();
}

}  // namespace

std::string RatExpr::str() const {
  if (terms_.empty()) return "0";
  const int k = denominator_power();
  const RatExpr num = numerator();
  std::string out;
  for (auto it = num.terms_.rbegin(); it != num.terms_.rend(); ++it) {
    std::string t = term_str(it->first, it->second);
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  if (k == 0) return out;
  const std::string den = k == 1 ? "A" : "A^" + std::to_string(k);
  if (num.terms_.size() == 1) return out + "/" + den;
  return "(" + out + ")/" + den;
}

}  // namespace tsurf::sym
