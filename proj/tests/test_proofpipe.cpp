#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "properties/sym_props.hpp"
#include "tsurf/proofpipe/cases.hpp"
#include "tsurf/proofpipe/shadow.hpp"
#include "tsurf/symring/parse.hpp"

using namespace tsurf::proof;
using tsurf::sym::parse_radfrac;

namespace {

const Ledger& planar() {
  static const Ledger l = run_planar_case();
  return l;
}

const LedgerEntry& entry(const Ledger& l, const std::string& name) {
  const LedgerEntry* e = l.find(name);
  if (e == nullptr) throw std::runtime_error("no ledger entry " + name);
  return *e;
}

}  // namespace

TEST(Eliminant, SoundOnRandomQuadratics) {
  const auto r = tsurf::testing::eliminant_soundness(1000, 5);
  EXPECT_EQ(r.trials, 1000);
  EXPECT_TRUE(r.ok()) << r.first_failure << " (worst " << r.worst << ")";
}

TEST(Eliminant, ExactCommonRoot) {
  // b = (C - 1)(C - 2), c = 3 (C - 1)(C + 5)
  const TrigQuadratic b{RadFrac(1), RadFrac(-3), RadFrac(2)};
  const TrigQuadratic c{RadFrac(3), RadFrac(12), RadFrac(-15)};
  EXPECT_TRUE(eliminant(b, c).value.is_zero());
  const TrigQuadratic d{RadFrac(1), RadFrac(0), RadFrac(-9)};
  EXPECT_FALSE(eliminant(b, d).value.is_zero());
}

TEST(Rationalize, ConjugateProduct) {
  const RadFrac x(ZPoly::z(), ZPoly(1));
  EXPECT_EQ(rationalize(x), ZPoly::z(2) - ZPoly::X());
}

TEST(DoubleAngle, Rewrite) {
  // sin^2 = (1 - cos2)/2, cos^2 = (1 + cos2)/2, sin cos = sin2/2
  TrigPoly t;
  t[{2, 0}] = RadFrac(2);
  t[{1, 1}] = RadFrac(4);
  t[{0, 0}] = RadFrac(1);
  const PQRTriple p = to_double_angle(t);
  EXPECT_EQ(p.P, RadFrac(2));
  EXPECT_EQ(p.Q, RadFrac(-1));
  EXPECT_EQ(p.R, RadFrac(2));
}

TEST(Planar, DerivedTripleMatchesPrinted) {
  const PipelineRun run = run_pipeline(DerivationRules{false});
  const PQRTriple printed = printed_pqr_planar();
  EXPECT_EQ(run.pqr.P, printed.P);
  EXPECT_EQ(run.pqr.Q, printed.Q);
  EXPECT_EQ(run.pqr.R, printed.R);
  EXPECT_EQ(run.pqr.P, parse_radfrac("-4*a*z"));
}

TEST(Planar, ReferenceValues) {
  const Ledger& l = planar();
  EXPECT_EQ(entry(l, "kappa8").value, RadFrac(1152));
  EXPECT_EQ(entry(l, "kappa6").value, parse_radfrac("(2304*A^4 + 384*A*A2 - 768*A1^2)/A^2"));
  EXPECT_EQ(entry(l, "lambda8").value, RadFrac(-384));
  EXPECT_EQ(entry(l, "mu8").value, RadFrac(-3456));
  EXPECT_TRUE(entry(l, "z16").value.is_zero());
  EXPECT_EQ(entry(l, "z16").status, Status::match);
  const LedgerEntry& z14 = entry(l, "z14");
  EXPECT_EQ(z14.value, parse_radfrac("-4718592*A1^2/A^2"));
  EXPECT_EQ(z14.status, Status::scaled);
  EXPECT_EQ(z14.scale, mpq_class(2359296, 7));
}

TEST(Planar, LedgerConsistentAndConcludes) {
  const Ledger& l = planar();
  EXPECT_EQ(l.first_problem(), nullptr);
  EXPECT_EQ(l.count(Status::mismatch), 0u);
  EXPECT_EQ(l.count(Status::failed), 0u);
  EXPECT_TRUE(l.conclusion_proven());
  EXPECT_NO_THROW(l.require_consistent());
  EXPECT_EQ(entry(l, "A' = 0").status, Status::proven);
}

TEST(Planar, ShadowsPass) {
  const PipelineRun run = run_pipeline(DerivationRules{false});
  for (const ShadowResult& r : {shadow_derivation(run), shadow_elimination(run), shadow_square(run),
                                shadow_eliminant(run), shadow_rationalize(run)}) {
    EXPECT_TRUE(r.passed()) << r.stage << " " << r.max_residual;
    EXPECT_GT(r.trials, 0) << r.stage;
  }
}

TEST(Planar, RationalizeResidualExact) {
  const PipelineRun run = run_pipeline(DerivationRules{false});
  EXPECT_EQ(shadow_eliminant(run).max_residual, 0.0);
  EXPECT_EQ(shadow_rationalize(run).max_residual, 0.0);
}

TEST(Planar, OverrideIsKeptApartFromDerivation) {
  PQRTriple bad = printed_pqr_planar();
  bad.P = bad.P + RadFrac(ZPoly::z(3));
  PipelineOptions opts;
  opts.pqr_override = &bad;
  const PipelineRun run = run_pipeline(DerivationRules{false}, opts);
  const PipelineRun genuine = run_pipeline(DerivationRules{false});
  EXPECT_EQ(run.pqr.P, bad.P);
  EXPECT_EQ(run.relation.pqr.P, genuine.pqr.P);
  EXPECT_FALSE(run.elim.value == genuine.elim.value);
}

TEST(Ledger, CsvAndSummary) {
  const Ledger& l = planar();
  std::ostringstream os;
  l.write_csv(os);
  const std::string csv = os.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "name,symbolic,paper_value,scale,status");
  EXPECT_NE(csv.find("\n\"kappa8\",\"1152\",\"1152\",\"1\",match\n"), std::string::npos);
  const auto j = nlohmann::json::parse(l.summary_json());
  EXPECT_EQ(j["case"], "planar");
  EXPECT_EQ(j["entries"], l.entries().size());
  EXPECT_TRUE(j["mismatches"].empty());
  EXPECT_EQ(j["status_counts"]["mismatch"], 0);
}

TEST(Ledger, MismatchRaises) {
  Ledger l("toy");
  LedgerEntry e;
  e.name = "x";
  e.stage = "conclusion";
  e.status = Status::mismatch;
  e.note = "differs";
  l.add(e);
  EXPECT_FALSE(l.conclusion_proven());
  ASSERT_NE(l.first_problem(), nullptr);
  EXPECT_THROW(l.require_consistent(), MismatchError);
}

TEST(General, LedgerConsistentAndConcludes) {
  const Ledger l = run_general_case();
  EXPECT_EQ(l.first_problem(), nullptr);
  EXPECT_EQ(l.count(Status::mismatch), 0u);
  EXPECT_EQ(l.count(Status::failed), 0u);
  EXPECT_TRUE(l.conclusion_proven());

  EXPECT_EQ(entry(l, "kappa217").value, RadFrac(-1152));
  EXPECT_EQ(entry(l, "lambda217").value, RadFrac(384));
  EXPECT_EQ(entry(l, "mu217").value, RadFrac(3456));
  EXPECT_EQ(entry(l, "kappa217^2 - lambda217*mu217 = 0").status, Status::proven);
  EXPECT_TRUE(entry(l, "z68").value.is_zero());
  EXPECT_TRUE(entry(l, "z66").value.is_zero());
  EXPECT_EQ(entry(l, "U32").value, parse_radfrac("4718592*(T^2 - a^2)"));
  EXPECT_EQ(entry(l, "V31").value, parse_radfrac("9437184*T*a"));
  EXPECT_EQ(entry(l, "z64 = U32^2 + V31^2").status, Status::proven);
  EXPECT_EQ(entry(l, "tau = 0").status, Status::proven);
  for (const char* s : {"shadow:derivation", "shadow:eliminate_trig", "shadow:square_relation", "shadow:eliminant",
                        "shadow:rationalize", "by_parts:b", "by_parts:c", "by_parts:eliminant", "by_parts:rationalize",
                        "specialization:b", "specialization:c", "specialization:kappa_lambda_mu"})
    EXPECT_EQ(entry(l, s).status, Status::proven) << s;
}
