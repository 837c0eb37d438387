#include "tsurf/proofpipe/reference_values.hpp"

namespace tsurf::proof {

namespace {

ReferenceValue ref(std::string name, std::string stage, std::string text, std::string where, std::string alt = {},
                   std::string formula = {}, bool scale_allowed = false) {
  return {std::move(name), std::move(stage), std::move(text), std::move(alt), std::move(formula), scale_allowed,
          std::move(where)};
}

std::vector<ReferenceValue> make_general() {
  const std::string kphi = "K phi_v after the v-derivative";
  const std::string pqr = "P, Q, R of the general relation";
  const std::string parts = "P, Q, R split in s";
  const std::string pcoef = "P, Q, R coefficients in z";
  const std::string full = "alpha, beta, gamma parts of the derived relation";
  const std::string coef = "alpha, beta, gamma coefficient lists";
  const std::string bco = "b coefficient computations";
  const std::string cco = "c coefficient computations";
  const std::string kco = "kappa, lambda, mu computations";
  const std::string lead = "leading coefficients of the rationalized eliminant";
  return {
      ref("Kphiv_sin2cos", "relation", "3*z/X", kphi),
      ref("Kphiv_sin3", "relation", "-a/X + T*z*s/X^2", kphi),
      ref("P", "relation", "(2*T*A^2 + 4*T*z^2)*s + (-4*A*A1*z + 4*a*z^3)", pqr),
      ref("Q", "relation", "(2*T*a - T1/2)*z*s + 3/2*A^4 - Sig*A^2/2 + (9*A^2/2 - 3*T^2/2 + Sig/2)*z^2 - 6*z^4", pqr),
      ref("R", "relation", "-(2*T*a - T1/2)*z*s + 5/2*A^4 + Sig*A^2/2 + (3*T^2/2 - A^2/2 - Sig/2)*z^2 - 2*z^4", pqr),
      ref("P1", "relation", "2*T*A^2 + 4*T*z^2", parts),
      ref("P2", "relation", "-4*A*A1*z + 4*a*z^3", parts),
      ref("Q1", "relation", "(2*T*a - T1/2)*z", parts),
      ref("Q2", "relation", "3/2*A^4 - Sig*A^2/2 + (9*A^2/2 - 3*T^2/2 + Sig/2)*z^2 - 6*z^4", parts),
      ref("R1", "relation", "-(2*T*a - T1/2)*z", parts),
      ref("R2", "relation", "5/2*A^4 + Sig*A^2/2 + (-A^2/2 + 3*T^2/2 - Sig/2)*z^2 - 2*z^4", parts),
      ref("P10", "relation", "2*T*A^2", pcoef),
      ref("P12", "relation", "4*T", pcoef),
      ref("P21", "relation", "-4*A*A1", pcoef),
      ref("P23", "relation", "4*a", pcoef),
      ref("Q11", "relation", "2*T*a - T1/2", pcoef),
      ref("Q20", "relation", "3/2*A^4 - Sig*A^2/2", pcoef),
      ref("Q22", "relation", "9*A^2/2 - 3*T^2/2 + Sig/2", pcoef),
      ref("Q24", "relation", "-6", pcoef),
      ref("R11", "relation", "-(2*T*a - T1/2)", pcoef),
      ref("R20", "relation", "5/2*A^4 + Sig*A^2/2", pcoef),
      ref("R22", "relation", "-A^2/2 + 3*T^2/2 - Sig/2", pcoef),
      ref("R24", "relation", "-2", pcoef),

      ref("alpha1", "derivation", "6*T*A^2*z - 12*T*z^3", full),
      ref("alpha2", "derivation", "-4*A^3*A1 + 16*A*A1*z^2 - 12*a*z^4", full),
      ref("alpha3", "derivation", "2*T*A*A1 + 2*A^2*T1 + (20*T*a + 5*T1)*z^2", full),
      ref("alpha4", "derivation",
          "(6*T^2*A^2 - 12*A1^2 - 4*A^2*Da - 3*A^4 + Sig*A^2)*z + (12*a^2 + 4*Da - 9*A^2 - 9*T^2 - Sig)*z^3 + 12*z^5",
          full),
      ref("beta1", "derivation", "(2*T*A*A1 - T1/2*A^2) - (4*T*a - T1)*z^2", full),
      ref("beta2", "derivation", "(9*A^4 - 3*A^2*T^2 + Sig*A^2)*z - (33*A^2 - 3*T^2 + Sig)*z^3 + 24*z^5", full),
      ref("beta3", "derivation", "(A1*T1/A + 2*T*Da - T2/2 + 4*T*a^2 + 13*A^2*T - 3*T^3 + Sig*T)*z - 16*T*z^3", full),
      ref("beta4", "derivation",
          "(6*A^3*A1 - Sig1*A^2/2 - Sig*A*A1 + 2*A*A1*T^2 - A^2*T*T1/2)"
          " + (10*A*A1 - 2*T*T1 - 7*a*T^2 + a*Sig + Sig1/2)*z^2 - 16*a*z^4",
          full),
      ref("gamma1", "derivation", "-2*T*A*A1 + T1/2*A^2 + (4*T*a - T1)*z^2", full),
      ref("gamma2", "derivation", "(3*A^2*T^2 - A^4 - Sig*A^2)*z - (7*A^2 + 3*T^2 - Sig)*z^3 + 8*z^5", full),
      ref("gamma3", "derivation", "(2*T^3 - 6*T*a^2 - T*Da - T1*a - A^2*T + T2/2)*z - 8*T*z^3", full),
      ref("gamma4", "derivation",
          "(10*A^3*A1 + A^2/2*(T*T1 + Sig1) + (Sig - 2*T^2)*A*A1)"
          " + (2*T*T1 - 2*A*A1 - Sig1/2 + 7*a*T^2 - a*Sig)*z^2 - 8*a*z^4",
          full),

      ref("alpha11", "derivation", "6*T*A^2", coef),
      ref("alpha13", "derivation", "-12*T", coef),
      ref("alpha20", "derivation", "-4*A^3*A1", coef),
      ref("alpha22", "derivation", "16*A*A1", coef),
      ref("alpha24", "derivation", "-12*a", coef),
      ref("alpha30", "derivation", "2*T*A*A1 + 2*A^2*T", coef, "2*T*A*A1 + 2*A^2*T1"),
      ref("alpha32", "derivation", "20*T*a + 5*T1", coef),
      ref("alpha41", "derivation", "6*T^2*A^2 - 12*A1^2 - 4*A^2*Da - 3*A^4 + Sig*A^2", coef),
      ref("alpha43", "derivation", "12*a^2 + 4*Da - 9*A^2 - 9*T^2 - Sig", coef),
      ref("alpha45", "derivation", "12", coef),
      ref("beta10", "derivation", "2*T*A*A1 - T1/2*A^2", coef),
      ref("beta12", "derivation", "4*T*a - T1", coef, "-(4*T*a - T1)"),
      ref("beta21", "derivation", "9*A^4 - 3*A^2*T^2 + Sig*A^2", coef),
      ref("beta23", "derivation", "-(33*A^2 - 3*T^2 + Sig)", coef),
      ref("beta25", "derivation", "24", coef),
      ref("beta31", "derivation", "A1*T1/A + 2*T*Da - T2/2 + 4*T*a^2 + 13*A^2*T - 3*T^3 + Sig*T", coef),
      ref("beta33", "derivation", "16*T", coef, "-16*T"),
      ref("beta40", "derivation", "6*A^3*A1 - Sig1*A^2/2 - Sig*A*A1 + 2*A*A1*T^2 - A^2*T*T1/2", coef),
      ref("beta42", "derivation", "10*A*A1 - 2*T*T1 - 7*a*T^2 + a*Sig + Sig1/2", coef),
      ref("beta44", "derivation", "-16*a", coef),
      ref("gamma10", "derivation", "-2*T*A*A1 + T1/2*A^2", coef),
      ref("gamma12", "derivation", "4*T*a - T1", coef),
      ref("gamma21", "derivation", "3*A^2*T^2 - A^4 - Sig*A^2", coef),
      ref("gamma23", "derivation", "7*A^2 + 3*T^2 - Sig", coef, "-(7*A^2 + 3*T^2 - Sig)"),
      ref("gamma25", "derivation", "8", coef),
      ref("gamma31", "derivation", "2*T^3 - 6*T*a^2 - T*Da - T1*a - A^2*T + T2/2", coef),
      ref("gamma33", "derivation", "-8*T", coef),
      ref("gamma40", "derivation", "10*A^3*A1 + A^2/2*(T*T1 + Sig1) + (Sig - 2*T^2)*A*A1", coef),
      ref("gamma42", "derivation", "2*T*T1 - 2*A*A1 - Sig1/2 + 7*a*T^2 - a*Sig", coef),
      ref("gamma44", "derivation", "-8*a", coef),

      ref("b216", "eliminate_trig", "56*T*a - 18*T1", bco, {},
          "Q24*(alpha32 - beta12) + Q11*(alpha45 - beta25) - P12*(alpha24 + beta44) - P23*(alpha13 + beta33)"),
      ref("b229", "eliminate_trig", "72", bco),
      ref("b227", "eliminate_trig", "-198*A^2 - 28*T^2 - 18*Da + 28*a^2", bco),
      ref("b116", "eliminate_trig", "16*T*a + 20*T1", bco),
      ref("b129", "eliminate_trig", "144", bco),
      ref("b127", "eliminate_trig", "-228*A^2 - 10*T^2 + 20*Da + 8*a^2", bco),
      ref("b016", "eliminate_trig", "-72*T*a - 2*T1", bco),
      ref("b029", "eliminate_trig", "40", bco),
      ref("b027", "eliminate_trig", "-2*Da - 36*a^2 + 36*T^2 - 22*A^2", bco),

      ref("c215", "square_relation", "8*T*a + 6*T1", cco, {}, "2*P12*P23 + 2*Q11*Q24"),
      ref("c228", "square_relation", "36", cco),
      ref("c226", "square_relation", "6*Da + 4*a^2 - 4*T^2 - 54*A^2", cco),
      ref("c115", "square_relation", "16*T*a - 4*T1", cco),
      ref("c128", "square_relation", "24", cco),
      ref("c126", "square_relation", "-4*Da + 8*a^2 - 8*T^2 - 12*A^2", cco),
      ref("c015", "square_relation", "-24*T*a - 2*T1", cco),
      ref("c028", "square_relation", "4", cco),
      ref("c026", "square_relation", "-2*Da - 12*a^2 + 12*T^2 + 2*A^2", cco),

      ref("kappa114", "eliminant", "768*T*a - 384*T1", kco, {}, "b229*c015 + b216*c028 - b016*c228 - b029*c215"),
      ref("kappa215", "eliminant", "-384*Da + 384*a^2 + 2304*A^2 - 384*T^2", kco, {},
          "b227*c028 + b229*c026 - b027*c228 - b029*c226"),
      ref("kappa217", "eliminant", "-1152", kco, {}, "b229*c028 - b029*c228"),
      ref("lambda114", "eliminant", "2304*T*a", kco, {}, "b016*c128 + b029*c115 - b116*c028 - b129*c015"),
      ref("lambda215", "eliminant", "1152*a^2 - 1144*T^2 - 384*A^2", kco, {},
          "b027*c128 + b029*c126 - b127*c028 - b129*c026"),
      ref("lambda217", "eliminant", "384", kco, {}, "b029*c128 - b129*c028"),
      ref("mu114", "eliminant", "-768*T*a + 2304*T1", kco, {}, "b116*c228 + b129*c215 - b216*c128 - b229*c115"),
      ref("mu215", "eliminant", "2304*Da - 384*a^2 + 312*T^2 - 10368*A^2", kco, {},
          "b127*c228 + b129*c226 - b227*c128 - b229*c126"),
      ref("mu217", "eliminant", "3456", kco, {}, "b129*c228 - b229*c128"),

      ref("z68", "rationalize", "0", lead, {}, "(kappa217^2 - lambda217*mu217)^2"),
      ref("z66", "rationalize", "0", lead, {},
          "2*(kappa217^2 - lambda217*mu217)*(2*kappa215*kappa217 - lambda215*mu217 - lambda217*mu215)"),
      ref("U32", "rationalize", "-384*2^7*3*32*a^2 + 3^2*2^7*4096*T^2", "first square in the z^64 coefficient", {},
          "2*kappa215*kappa217 - lambda215*mu217 - lambda217*mu215"),
      ref("V31", "rationalize", "T*a", "second square in the z^64 coefficient", {},
          "lambda114*mu217 + lambda217*mu114 - 2*kappa114*kappa217", true),
  };
}

std::vector<ReferenceValue> make_planar() {
  const std::string kphi = "K phi_v after the v-derivative";
  const std::string pqr = "P, Q, R of the planar relation";
  const std::string drel = "coefficients of the differentiated planar relation";
  const std::string cleared = "planar relation after the cot substitution";
  const std::string bco = "b coefficients of the planar quadratic";
  const std::string cco = "c coefficients of the squared planar relation";
  const std::string lead = "leading terms of the planar kappa, lambda, mu";
  const std::string elim = "leading coefficients of the planar eliminant";
  return {
      ref("Kphiv_sin2cos", "relation", "3*z/X", kphi),
      ref("Kphiv_sin3", "relation", "-a/X", kphi),
      ref("P", "relation", "-4*a*z", pqr),
      ref("Q", "relation", "3/2*X + 15/2*z^2 - Sig/2", pqr),
      ref("R", "relation", "5/2*X + 9/2*z^2 + Sig/2", pqr),

      ref("D1_cot", "derivation", "-4*a*X", drel),
      ref("D1_reg", "derivation", "-4*Da*z - 4*a^2*z - 3*X*z - 15*z^3 + Sig*z", drel),
      ref("D2_cot", "derivation", "12*X*z", drel),
      ref("D2_reg", "derivation", "3*A*A1 + 12*a*z^2 - Sig1/2 - 8*a*z^2", drel),
      ref("D3_cot", "derivation", "4*X*z", drel),
      ref("D3_reg", "derivation", "5*A*A1 + 4*a*z^2 + Sig1/2", drel),

      ref("E_sin2", "derivation", "-16*z^3 + (A^2 - 5*Da - 2*a^2)*z", cleared,
          "-4*Da*z - 4*a^2*z + z*X - 15*z^3 + Sig*z"),
      ref("E_sin2cos2", "derivation", "(15*A^2 + 5*Da + 2*a^2)*z", cleared,
          "4*Da*z + 4*a^2*z + 15*z*X + 15*z^3 - Sig*z"),
      ref("E_cos2sq", "derivation", "-8*a*z^2 + A*A1 + Sig1/2", cleared, "-3*A*A1 - 4*a*z^2 + Sig1/2 + 4*a*X"),
      ref("E_cos2", "derivation", "-(2*A*A1 + Sig1)", cleared, "-(2*A*A1 + Sig1)"),
      ref("E_const", "derivation", "-8*a*z^2 + A*A1 + Sig1/2", cleared, "5*A*A1 + 4*a*z^2 + Sig1/2 - 4*a*X"),

      ref("b22", "eliminate_trig", "90*A^2 + 30*Da - 20*a^2", bco),
      ref("b20", "eliminate_trig", "(15*A^2 + 5*Da + 2*a^2)*(3/2*A^2 - Sig/2) + 4*A1^2 + 2*A1*Sig1/A", bco),
      ref("b14", "eliminate_trig", "-96", bco),
      ref("b12", "eliminate_trig", "12*A^2 - 20*Da - 8*a^2 + 8*Sig", bco),
      ref("b10", "eliminate_trig",
          "(A^2 - 5*Da - 2*a^2)*(3/2*A^2 - Sig/2) + (15*A^2 + 5*Da + 2*a^2)*(5/2*A^2 + Sig/2)"
          " - 8*A1^2 - 4*A1*Sig1/A",
          bco),
      ref("b04", "eliminate_trig", "-32", bco),
      ref("b02", "eliminate_trig", "-38*A^2 - 10*Da + 28*a^2 - 8*Sig", bco),
      ref("b00", "eliminate_trig", "(A^2 - 5*Da - 8*a^2)*(5/2*A^2 + Sig/2) + 4*A1^2 + 2*A1*Sig1/A", bco),

      ref("c24", "square_relation", "36", cco),
      ref("c22", "square_relation", "18*A^2 - 6*Sig + 16*a^2", cco),
      ref("c20", "square_relation", "(3/2*A^2 - Sig/2)^2", cco),
      ref("c14", "square_relation", "24", cco),
      ref("c12", "square_relation", "36*A^2 + 4*Sig", cco),
      ref("c10", "square_relation", "(3*A^2 - Sig)*(5/2*A^2 + Sig/2)", cco),
      ref("c04", "square_relation", "4", cco),
      ref("c02", "square_relation", "10*A^2 + 2*Sig - 16*a^2", cco),
      ref("c00", "square_relation", "(5/2*A^2 + Sig/2)^2", cco),

      ref("kappa8", "eliminant", "1152", lead, {}, "-b04*c24"),
      ref("kappa6", "eliminant", "384*(6*A^2 + Da - a^2)", lead, {}, "b22*c04 - b04*c22 - b02*c24"),
      ref("lambda8", "eliminant", "-384", lead, {}, "b04*c14 - b14*c04"),
      ref("lambda6", "eliminant", "-384*3*(A^2 + a^2)", lead, {}, "b04*c12 + b02*c14 - b14*c02 - b12*c04"),
      ref("mu8", "eliminant", "-384*9", lead, {}, "b14*c24"),
      ref("mu6", "eliminant", "-384*(9*A^2 - a^2 + 6*Da)", lead, {}, "b14*c22 + b12*c24 - b22*c14"),

      ref("z16", "rationalize", "0", elim),
      ref("z14", "rationalize", "-14*a^2", elim, {}, {}, true),
  };
}

}  // namespace

const std::vector<ReferenceValue>& reference_values_general() {
  static const std::vector<ReferenceValue> v = make_general();
  return v;
}

const std::vector<ReferenceValue>& reference_values_planar() {
  static const std::vector<ReferenceValue> v = make_planar();
  return v;
}

const std::vector<DisplayTerm>& relation_display_general() {
  static const std::vector<DisplayTerm> v = {
      {0, 0, "X^2"},
      {0, 2, "3*X^2 + 12*z^2*X"},
      {1, 1, "4*T*X*s - 8*a*z*X + 12*T*z^2*s"},
      {2, 0, "-3*z^2*X + (2*a^2 - Da + T^2)*X - 4*T*a*z*s + T1*z*s + 3*T^2*z^2"},
  };
  return v;
}

const std::vector<DisplayTerm>& relation_display_planar() {
  static const std::vector<DisplayTerm> v = {
      {0, 0, "X"},
      {0, 2, "3*X + 12*z^2"},
      {1, 1, "-8*a*z"},
      {2, 0, "-3*z^2 - Da + 2*a^2"},
  };
  return v;
}

}  // namespace tsurf::proof
