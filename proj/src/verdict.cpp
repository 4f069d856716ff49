#include "chiralkit/verdict.hpp"

namespace chiralkit {

std::string_view to_string(SystemKind kind) {
  return kind == SystemKind::TrulyChiralSystem ? "TrulyChiralSystem" : "FalselyChiralSystem";
}

Verdict chirality_test(SystemKind system, ChiralityClass influence) {
  if (influence != ChiralityClass::TrulyChiral && influence != ChiralityClass::FalselyChiral)
    throw UnsupportedInfluenceError(
        std::string("chirality test needs a TrulyChiral or FalselyChiral influence, got ") +
        std::string(to_string(influence)));

  Verdict v;
  v.system = system;
  v.influence = influence;
  v.derivation.push_back(
      {"parity conjugation",
       "maps the left-handed system onto the right-handed one and flips the influence: "
       "H_LL = -H_RR"});

  const bool system_true = system == SystemKind::TrulyChiralSystem;
  const bool influence_true = influence == ChiralityClass::TrulyChiral;

  if (system_true) {
    if (influence_true) {
      v.derivation.push_back({"motion reversal",
                              "leaves both the system handedness and the influence unchanged: "
                              "no further constraint"});
    } else {
      v.derivation.push_back({"motion reversal",
                              "leaves the system handedness but flips the influence: "
                              "H_LL = -H_LL"});
    }
  } else {
    if (influence_true) {
      v.derivation.push_back({"motion reversal followed by a half-turn",
                              "interconverts the enantiomers of a falsely chiral system and "
                              "leaves the influence: H_LL = +H_RR"});
    } else {
      v.derivation.push_back({"motion reversal followed by a half-turn",
                              "interconverts the enantiomers and flips the influence: "
                              "H_LL = -H_RR, consistent with parity"});
    }
  }

  if (system_true == influence_true) {
    v.relation = DiagonalRelation::AntisymmetricDiagonal;
    v.pved_possible = true;
    v.derivation.push_back(
        {"conclusion", "H_LL = -H_RR with unconstrained magnitude: PVED possible"});
    v.note =
        "The diagonal elements are antisymmetric between enantiomers, so an energy "
        "difference 2 * pved may be nonzero.";
  } else {
    v.relation = DiagonalRelation::ForcedZero;
    v.pved_possible = false;
    v.derivation.push_back({"conclusion", "H_LL = H_RR = 0: PVED impossible"});
    v.note =
        "The two constraints force the parity-violating diagonal elements to vanish "
        "identically; no enantiomer energy difference can arise from this influence.";
  }
  return v;
}

double pved(double h_ll, double h_rr) { return (h_ll - h_rr) / 2.0; }

double weak_charge(int z, int n, double sin2_theta_w) {
  if (z < 0 || n < 0) throw std::domain_error("weak_charge: nucleon counts must be nonnegative");
  if (!(sin2_theta_w >= 0.0 && sin2_theta_w <= 1.0))
    throw std::domain_error("weak_charge: sin2_theta_w must lie in [0, 1]");
  return (1.0 - 4.0 * sin2_theta_w) * static_cast<double>(z) - static_cast<double>(n);
}

}  // namespace chiralkit
