#pragma once

#include "tsurf/proofpipe/ledger.hpp"
#include "tsurf/proofpipe/pipeline.hpp"

namespace tsurf::proof {

// Every stage of one elimination run.
struct PipelineRun {
  DerivationRules rules;
  RelationDerivation relation;
  PQRTriple pqr;  // the triple actually fed downstream
  DerivedRelation derived;
  CotCleared cleared;
  ZPoly divisor;  // exact divisor applied after multiplying by P
  TrigQuadratic b, c;
  Eliminant elim;
  bool rationalized_done = false;
  ZPoly rationalized;
  ZPoly U, V;  // rationalized == U^2 - V^2 X (general case)
};

struct PipelineOptions {
  bool rationalize = true;
  const PQRTriple* pqr_override = nullptr;  // feed this triple instead of the derived one
};

PipelineRun run_pipeline(const DerivationRules& rules, const PipelineOptions& opts = {});

Ledger run_general_case();
Ledger run_planar_case();

// Checks the exact relation between the general run at tau = 0 and the
// planar run; returns one entry per checked identity.
std::vector<LedgerEntry> check_specialization(const PipelineRun& general, const PipelineRun& planar);

}  // namespace tsurf::proof
