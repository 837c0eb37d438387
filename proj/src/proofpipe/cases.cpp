#include "tsurf/proofpipe/cases.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "tsurf/proofpipe/reference_values.hpp"
#include "tsurf/proofpipe/shadow.hpp"
#include "tsurf/symring/parse.hpp"

namespace tsurf::proof {

namespace {

using sym::Gen;

// Engine values by ledger name, in the order the pipeline produces them.
class Named {
 public:
  void put(const std::string& name, const std::string& stage, const RadFrac& v) {
    if (index_.count(name)) throw Error("duplicate ledger name " + name);
    index_[name] = list_.size();
    list_.push_back({name, stage, v});
  }
  // Whole part plus one entry per z-power, named prefix + k.
  void put_split(const std::string& prefix, const std::string& stage, const ZPoly& p) {
    put(prefix, stage, RadFrac(p));
    for (const auto& [k, c] : p.coeffs()) put(prefix + std::to_string(k), stage, RadFrac(c));
  }
  std::optional<RadFrac> get(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return list_[it->second].value;
  }
  // Missing z-coefficients are zero.
  RadFrac coeff(const std::string& name) const { return get(name).value_or(RadFrac()); }

  struct Item {
    std::string name, stage;
    RadFrac value;
  };
  const std::vector<Item>& items() const { return list_; }

 private:
  std::vector<Item> list_;
  std::map<std::string, std::size_t> index_;
};

const ZPoly& even_part(const RadFrac& r, const char* what) {
  if (r.k() != 0) throw Error(std::string(what) + " carries an X denominator");
  return r.p();
}

const ZPoly& radical_part(const RadFrac& r, const char* what) {
  if (r.k() != 0) throw Error(std::string(what) + " carries an X denominator");
  return r.q();
}

bool proportional(const RadFrac& value, const RadFrac& ref, mpq_class& c) {
  if (ref.is_zero() || value.is_zero() || value.k() != ref.k()) return false;
  const auto& rc = ref.p().is_zero() ? ref.q().coeffs() : ref.p().coeffs();
  const auto& vc = ref.p().is_zero() ? value.q().coeffs() : value.p().coeffs();
  if (rc.empty() || vc.empty()) return false;
  const int k = rc.begin()->first;
  auto it = vc.find(k);
  if (it == vc.end() || !it->second.proportional_to(rc.begin()->second, c)) return false;
  return value == ref.scaled(RatExpr(c));
}

Named named_values(const PipelineRun& run) {
  Named n;
  const bool general = run.rules.torsion;
  n.put("Kphiv_sin2cos", "relation", run.relation.k_phi_v.at({2, 1}));
  n.put("Kphiv_sin3", "relation", run.relation.k_phi_v.at({3, 0}));
  const PQRTriple& t = run.pqr;
  n.put("P", "relation", t.P);
  n.put("Q", "relation", t.Q);
  n.put("R", "relation", t.R);
  if (general) {
    n.put_split("P1", "relation", radical_part(t.P, "P"));
    n.put_split("P2", "relation", even_part(t.P, "P"));
    n.put_split("Q1", "relation", radical_part(t.Q, "Q"));
    n.put_split("Q2", "relation", even_part(t.Q, "Q"));
    n.put_split("R1", "relation", radical_part(t.R, "R"));
    n.put_split("R2", "relation", even_part(t.R, "R"));
    const std::pair<const char*, const CotPair*> rel[] = {
        {"alpha", &run.derived.d1}, {"beta", &run.derived.d2}, {"gamma", &run.derived.d3}};
    for (const auto& [greek, d] : rel) {
      const std::string g = greek;
      n.put_split(g + "1", "derivation", radical_part(d->cot, greek));
      n.put_split(g + "2", "derivation", even_part(d->cot, greek));
      n.put_split(g + "3", "derivation", radical_part(d->reg, greek));
      n.put_split(g + "4", "derivation", even_part(d->reg, greek));
    }
    const std::pair<const char*, const RadFrac*> quads[] = {
        {"b2", &run.b.q2}, {"b1", &run.b.q1}, {"b0", &run.b.q0},
        {"c2", &run.c.q2}, {"c1", &run.c.q1}, {"c0", &run.c.q0}};
    for (const auto& [name, q] : quads) {
      const std::string stage = name[0] == 'b' ? "eliminate_trig" : "square_relation";
      n.put_split(std::string(name) + "1", stage, radical_part(*q, name));
      n.put_split(std::string(name) + "2", stage, even_part(*q, name));
    }
    const std::pair<const char*, const RadFrac*> elim[] = {
        {"kappa", &run.elim.kappa}, {"lambda", &run.elim.lambda}, {"mu", &run.elim.mu}};
    for (const auto& [name, q] : elim) {
      n.put_split(std::string(name) + "1", "eliminant", radical_part(*q, name));
      n.put_split(std::string(name) + "2", "eliminant", even_part(*q, name));
    }
    auto c = [&](const char* name) { return n.coeff(name); };
    n.put("U32", "rationalize",
          RadFrac(2) * c("kappa215") * c("kappa217") - c("lambda215") * c("mu217") - c("lambda217") * c("mu215"));
    n.put("V31", "rationalize",
          c("lambda114") * c("mu217") + c("lambda217") * c("mu114") - RadFrac(2) * c("kappa114") * c("kappa217"));
  } else {
    const std::pair<const char*, const CotPair*> rel[] = {
        {"D1", &run.derived.d1}, {"D2", &run.derived.d2}, {"D3", &run.derived.d3}};
    for (const auto& [name, d] : rel) {
      n.put(std::string(name) + "_cot", "derivation", d->cot);
      n.put(std::string(name) + "_reg", "derivation", d->reg);
    }
    n.put("E_sin2", "derivation", run.cleared.s1);
    n.put("E_sin2cos2", "derivation", run.cleared.sc);
    n.put("E_cos2sq", "derivation", run.cleared.c2);
    n.put("E_cos2", "derivation", run.cleared.c1);
    n.put("E_const", "derivation", run.cleared.c0);
    const std::pair<const char*, const RadFrac*> quads[] = {
        {"b2", &run.b.q2}, {"b1", &run.b.q1}, {"b0", &run.b.q0},
        {"c2", &run.c.q2}, {"c1", &run.c.q1}, {"c0", &run.c.q0}};
    for (const auto& [name, q] : quads) {
      const std::string stage = name[0] == 'b' ? "eliminate_trig" : "square_relation";
      if (q->has_radical()) throw Error(std::string("planar ") + name + " has a radical part");
      n.put_split(name, stage, even_part(*q, name));
    }
    const std::pair<const char*, const RadFrac*> elim[] = {
        {"kappa", &run.elim.kappa}, {"lambda", &run.elim.lambda}, {"mu", &run.elim.mu}};
    for (const auto& [name, q] : elim) n.put_split(name, "eliminant", even_part(*q, name));
  }
  if (run.rationalized_done) {
    for (const auto& [k, c] : run.rationalized.coeffs()) n.put("z" + std::to_string(k), "rationalize", RadFrac(c));
  }
  return n;
}

// Alternate engine-independent values: the relation as displayed before the
// double-angle rewrite, split the same way as the engine's P, Q, R.
Named display_values(bool general) {
  TrigPoly t;
  for (const auto& d : general ? relation_display_general() : relation_display_planar()) {
    t[{d.sin_power, d.cos_power}] = sym::parse_radfrac(d.text);
  }
  const PQRTriple p = to_double_angle(t);
  Named n;
  n.put("P", "relation", p.P);
  n.put("Q", "relation", p.Q);
  n.put("R", "relation", p.R);
  if (general) {
    n.put_split("P1", "relation", radical_part(p.P, "P"));
    n.put_split("P2", "relation", even_part(p.P, "P"));
    n.put_split("Q1", "relation", radical_part(p.Q, "Q"));
    n.put_split("Q2", "relation", even_part(p.Q, "Q"));
    n.put_split("R1", "relation", radical_part(p.R, "R"));
    n.put_split("R2", "relation", even_part(p.R, "R"));
  }
  return n;
}

std::string residual_note(const ShadowResult& s) {
  std::ostringstream os;
  os << "max relative residual " << s.max_residual << " over " << s.trials << " points (tolerance " << s.tolerance
     << ")";
  return os.str();
}

struct CompareContext {
  const Named* engine = nullptr;
  const Named* display = nullptr;
  const Named* printed_run = nullptr;  // pipeline fed with the printed triple
  std::map<std::string, bool> shadow_ok;
  sym::NameLookup reference_lookup;
};

LedgerEntry compare(const ReferenceValue& ref, const CompareContext& ctx) {
  LedgerEntry e;
  e.name = ref.name;
  e.stage = ref.stage;
  e.value = ctx.engine->coeff(ref.name);
  e.reference_text = ref.text;
  const RadFrac pv = sym::parse_radfrac(ref.text);
  e.paper_value = pv;
  if (e.value == pv) {
    e.status = Status::match;
    return e;
  }
  mpq_class c;
  if (ref.scale_allowed && proportional(e.value, pv, c)) {
    e.status = Status::scaled;
    e.scale = c;
    e.note = "engine value is " + sym::rational_str(c) + " times the stated value; no normalization is stated";
    return e;
  }
  std::string why;
  std::optional<RadFrac> alt;
  if (!ref.alt.empty()) alt = sym::parse_radfrac(ref.alt);
  if (alt && *alt == e.value) {
    why = "agrees with the second statement of this value, " + ref.alt;
  } else if (auto d = ctx.display ? ctx.display->get(ref.name) : std::nullopt; d && *d == e.value) {
    why = "agrees with the undivided display before the double-angle rewrite";
  } else if (auto p = ctx.printed_run ? ctx.printed_run->get(ref.name) : std::nullopt;
             p && (*p == pv || (alt && *p == *alt))) {
    why = "reproduced by running the pipeline on the printed P, Q, R";
  } else if (!ref.formula.empty() && sym::parse_radfrac(ref.formula, ctx.reference_lookup) == pv) {
    why = "follows from the stated upstream values through " + ref.formula + ", which differ from the engine's";
  }
  const auto it = ctx.shadow_ok.find(ref.stage);
  const bool shadow = it != ctx.shadow_ok.end() && it->second;
  if (shadow) {
    e.status = Status::erratum;
    e.note = why.empty() ? "stated value refuted by the numeric shadow of stage " + ref.stage
                         : why + "; the numeric shadow of stage " + ref.stage + " confirms the engine value";
  } else {
    e.status = Status::mismatch;
    e.note = "differs from the stated value and the stage shadow did not pass" + (why.empty() ? "" : "; " + why);
  }
  return e;
}

LedgerEntry identity(const std::string& name, const std::string& stage, bool holds, const std::string& note,
                     const RadFrac& value = RadFrac()) {
  LedgerEntry e;
  e.name = name;
  e.stage = stage;
  e.value = value;
  e.status = holds ? Status::proven : Status::failed;
  e.note = note;
  return e;
}

LedgerEntry assumption(const std::string& name, const std::string& note) {
  LedgerEntry e;
  e.name = name;
  e.stage = "conclusion";
  e.status = Status::assumption;
  e.note = note;
  return e;
}

LedgerEntry shadow_entry(const ShadowResult& s) {
  return identity("shadow:" + s.stage, "shadow", s.passed(), residual_note(s));
}

std::vector<ShadowResult> all_shadows(const PipelineRun& run) {
  std::vector<ShadowResult> out = {shadow_derivation(run), shadow_elimination(run), shadow_square(run),
                                   shadow_eliminant(run)};
  if (run.rationalized_done) out.push_back(shadow_rationalize(run));
  return out;
}

std::map<std::string, bool> stage_flags(const std::vector<ShadowResult>& shadows) {
  std::map<std::string, bool> ok;
  for (const auto& s : shadows) {
    if (s.stage == "derivation") {
      ok["relation"] = s.passed();
      ok["derivation"] = s.passed();
    } else {
      ok[s.stage] = s.passed();
    }
  }
  return ok;
}

void add_reference_and_unstated(Ledger& ledger, const std::vector<ReferenceValue>& refs, const CompareContext& ctx) {
  std::map<std::string, bool> seen;
  for (const auto& r : refs) {
    ledger.add(compare(r, ctx));
    seen[r.name] = true;
  }
  for (const auto& item : ctx.engine->items()) {
    if (seen.count(item.name)) continue;
    LedgerEntry e;
    e.name = item.name;
    e.stage = item.stage;
    e.value = item.value;
    ledger.add(std::move(e));
  }
}

sym::NameLookup make_reference_lookup(const std::vector<ReferenceValue>& refs, const Named& engine) {
  auto table = std::make_shared<std::map<std::string, RadFrac>>();
  for (const auto& r : refs) (*table)[r.name] = sym::parse_radfrac(r.text);
  return [table, &engine](std::string_view name) -> std::optional<RadFrac> {
    auto it = table->find(std::string(name));
    if (it != table->end()) return it->second;
    return engine.get(name);
  };
}

RatExpr ratexpr_of(const RadFrac& r) {
  if (r.has_radical() || r.k() != 0 || r.p().degree() > 0) throw Error("expected a z-free value");
  return r.p().coeff(0);
}

}  // namespace

PipelineRun run_pipeline(const DerivationRules& rules, const PipelineOptions& opts) {
  PipelineRun run;
  run.rules = rules;
  run.relation = derive_pqr(rules);
  run.pqr = opts.pqr_override ? *opts.pqr_override : run.relation.pqr;
  run.derived = derive_relation(run.pqr, rules);
  run.cleared = clear_cot(run.derived);
  // The planar b-quadratic carries a common factor -z (the reference multiplies
  // by 4A'/A where the engine multiplies by P = -4(A'/A)z).
  run.divisor = rules.torsion ? ZPoly(1) : ZPoly::z().scaled(RatExpr(-1));
  run.b = eliminate_trig(run.pqr, run.cleared, run.divisor);
  run.c = square_relation(run.pqr);
  run.elim = eliminant(run.b, run.c);
  if (opts.rationalize) {
    if (run.elim.value.k() != 0) throw Error("eliminant carries an X denominator");
    run.U = run.elim.value.p();
    run.V = run.elim.value.q();
    run.rationalized = rationalize(run.elim.value);
    run.rationalized_done = true;
  }
  return run;
}

std::vector<LedgerEntry> check_specialization(const PipelineRun& general, const PipelineRun& planar) {
  const std::initializer_list<Gen> tau = {Gen::T, Gen::T1, Gen::T2};
  const RadFrac X = RadFrac::X();
  const RadFrac X2 = X * X;
  const RadFrac z = RadFrac::z();
  std::vector<LedgerEntry> out;
  auto at0 = [&](const RadFrac& r) { return r.zero_out(tau); };

  const bool c_ok = at0(general.c.q2) == X2 * planar.c.q2 && at0(general.c.q1) == X2 * planar.c.q1 &&
                    at0(general.c.q0) == X2 * planar.c.q0;
  out.push_back(identity("specialization:c", "specialization", c_ok, "c at tau = 0 equals X^2 times the planar c"));

  auto b_of = [&](const RadFrac& bp, const RadFrac& cp) { return X2 * (-(z * bp) + RadFrac(2) * z * cp); };
  const bool b_ok = at0(general.b.q2) == b_of(planar.b.q2, planar.c.q2) &&
                    at0(general.b.q1) == b_of(planar.b.q1, planar.c.q1) &&
                    at0(general.b.q0) == b_of(planar.b.q0, planar.c.q0);
  out.push_back(identity("specialization:b", "specialization", b_ok,
                         "b at tau = 0 equals X^2 (-z b_planar + 2 z c_planar), a shift by the c quadratic"));

  const RadFrac f = -(z * X2 * X2);
  const bool k_ok = at0(general.elim.kappa) == f * planar.elim.kappa &&
                    at0(general.elim.lambda) == f * planar.elim.lambda && at0(general.elim.mu) == f * planar.elim.mu;
  out.push_back(identity("specialization:kappa_lambda_mu", "specialization", k_ok,
                         "kappa, lambda, mu at tau = 0 equal -z X^4 times the planar ones"));
  return out;
}

Ledger run_general_case() {
  Ledger ledger("general");
  const DerivationRules rules{true};
  const PipelineRun run = run_pipeline(rules);
  const PQRTriple printed = printed_pqr_general();
  const PipelineRun printed_run = run_pipeline(rules, {false, &printed});
  const Named engine = named_values(run);
  const Named printed_values = named_values(printed_run);
  const Named display = display_values(true);
  const auto shadows = all_shadows(run);

  CompareContext ctx;
  ctx.engine = &engine;
  ctx.display = &display;
  ctx.printed_run = &printed_values;
  ctx.shadow_ok = stage_flags(shadows);
  ctx.reference_lookup = make_reference_lookup(reference_values_general(), engine);
  add_reference_and_unstated(ledger, reference_values_general(), ctx);

  // Identities checked by exact arithmetic.
  ledger.add(identity("R1 = -Q1", "identity", printed.R.q() == -printed.Q.q() && run.pqr.R.q() == -run.pqr.Q.q(),
                      "radical parts of R and Q are opposite, printed and derived"));
  ledger.add(identity("by_parts:b", "identity",
                      [&] {
                        const auto b = eliminate_trig_by_parts(run.pqr, run.derived);
                        return b.q2 == run.b.q2 && b.q1 == run.b.q1 && b.q0 == run.b.q0;
                      }(),
                      "b from the component formulas equals b from RadFrac arithmetic"));
  const auto c_parts = square_relation_by_parts(run.pqr);
  ledger.add(identity("by_parts:c", "identity",
                      c_parts.q2 == run.c.q2 && c_parts.q1 == run.c.q1 && c_parts.q0 == run.c.q0,
                      "c from the component formulas equals c from RadFrac arithmetic"));
  const auto e_parts = eliminant_by_parts(run.b, run.c);
  ledger.add(identity("by_parts:eliminant", "identity",
                      e_parts.kappa == run.elim.kappa && e_parts.lambda == run.elim.lambda &&
                          e_parts.mu == run.elim.mu && e_parts.value == run.elim.value,
                      "kappa, lambda, mu from the split formulas equal the direct products"));
  ledger.add(identity("by_parts:rationalize", "identity", rationalize_by_parts(run.elim) == run.rationalized,
                      "squared form equals p^2 - q^2 X"));
  const PipelineRun planar = run_pipeline(DerivationRules{false}, {false, nullptr});
  for (auto& e : check_specialization(run, planar)) ledger.add(std::move(e));
  for (const auto& s : shadows) ledger.add(shadow_entry(s));

  // Conclusion.
  const RadFrac k217 = engine.coeff("kappa217"), l217 = engine.coeff("lambda217"), m217 = engine.coeff("mu217");
  const RadFrac lead = k217 * k217 - l217 * m217;
  ledger.add(identity("kappa217^2 - lambda217*mu217 = 0", "conclusion", lead.is_zero(),
                      "the top coefficients of kappa^2 and lambda*mu cancel", lead));
  const bool top_zero = engine.coeff("z68").is_zero() && engine.coeff("z66").is_zero() &&
                        run.rationalized.degree() <= 64;
  ledger.add(identity("z68 = z66 = 0", "conclusion", top_zero,
                      "rationalized eliminant has degree " + std::to_string(run.rationalized.degree())));
  const RadFrac U = engine.coeff("U32"), V = engine.coeff("V31");
  const RadFrac z64 = engine.coeff("z64");
  ledger.add(identity("z64 = U32^2 + V31^2", "conclusion", z64 == U * U + V * V,
                      "the z^64 coefficient is a sum of two squares", z64));
  ledger.add(assumption("all coefficients vanish",
                        "a nonzero coefficient would make z = phi_u a function of u alone, and then K = 0"));
  const RatExpr a = sym::log_derivative_A();
  const RatExpr T = RatExpr::gen(Gen::T);
  mpq_class cu, cv;
  const bool u_ok = ratexpr_of(U).proportional_to(T * T - a * a, cu);
  ledger.add(identity("tau^2 = (A'/A)^2", "conclusion", u_ok,
                      u_ok ? "U32 = " + sym::rational_str(cu) + " (tau^2 - (A'/A)^2)" : "U32 is not a multiple of tau^2 - (A'/A)^2",
                      U));
  const bool v_ok = ratexpr_of(V).proportional_to(T * a, cv);
  ledger.add(identity("tau*A'/A = 0", "conclusion", v_ok,
                      v_ok ? "V31 = " + sym::rational_str(cv) + " tau A'/A" : "V31 is not a multiple of tau A'/A", V));
  // tau^4 = tau^2 (tau^2 - a^2) + (tau a)^2 lies in the ideal of both relations.
  const RatExpr cert = T.pow(4) - (T * T * (T * T - a * a) + (T * a).pow(2));
  ledger.add(identity("tau = 0", "conclusion", u_ok && v_ok && cert.is_zero(),
                      "tau^4 = tau^2 (tau^2 - (A'/A)^2) + (tau A'/A)^2, so tau = 0, against a nonplanar generating curve"));

  ledger.conclusion = {
      "z^68 coefficient = 0",
      "z^66 coefficient = 0",
      "z^64 coefficient = U32^2 + V31^2 with U32 = " + ratexpr_of(U).str() + ", V31 = " + ratexpr_of(V).str(),
      "tau^2 = (A'/A)^2",
      "tau*A'/A = 0",
      "tau = 0, so the surface has K = 0",
  };
  return ledger;
}

Ledger run_planar_case() {
  Ledger ledger("planar");
  const DerivationRules rules{false};
  const PipelineRun run = run_pipeline(rules);
  const Named engine = named_values(run);
  const Named display = display_values(false);
  const auto shadows = all_shadows(run);

  CompareContext ctx;
  ctx.engine = &engine;
  ctx.display = &display;
  ctx.shadow_ok = stage_flags(shadows);
  ctx.reference_lookup = make_reference_lookup(reference_values_planar(), engine);
  add_reference_and_unstated(ledger, reference_values_planar(), ctx);

  const PQRTriple printed = printed_pqr_planar();
  ledger.add(identity("derived P,Q,R = printed P,Q,R", "identity",
                      run.pqr.P == printed.P && run.pqr.Q == printed.Q && run.pqr.R == printed.R,
                      "the mechanical derivation reproduces the printed planar triple"));
  for (const auto& s : shadows) ledger.add(shadow_entry(s));

  const RadFrac z16 = engine.coeff("z16"), z14 = engine.coeff("z14");
  ledger.add(identity("z16 = 0", "conclusion", z16.is_zero() && run.rationalized.degree() <= 14,
                      "planar eliminant has degree " + std::to_string(run.rationalized.degree())));
  ledger.add(assumption("all coefficients vanish",
                        "a nonzero coefficient would make z = phi_u a function of u alone, and then K = 0"));
  const RatExpr a = sym::log_derivative_A();
  mpq_class c;
  const bool z14_ok = ratexpr_of(z14).proportional_to(a * a, c) && c != 0;
  ledger.add(identity("z14 = c*(A'/A)^2", "conclusion", z14_ok,
                      z14_ok ? "c = " + sym::rational_str(c) : "z^14 coefficient is not a multiple of (A'/A)^2", z14));
  ledger.add(identity("A' = 0", "conclusion", z14_ok, "c (A'/A)^2 = 0 with c nonzero and A > 0"));
  ledger.add(assumption("circle generator gives K = 0",
                        "A constant makes the planar generating curves circles; the circle probe covers the rest"));

  ledger.conclusion = {
      "z^16 coefficient = 0",
      "z^14 coefficient = " + ratexpr_of(z14).str(),
      "A' = 0, so the planar generating curves are circles",
      "circle generating curve: K = 0 (circle probe)",
  };
  return ledger;
}

}  // namespace tsurf::proof
