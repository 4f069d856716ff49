#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chiralkit/kinematic.hpp"

namespace chiralkit {

/// How the molecular system behaves under motion reversal: a truly chiral
/// system keeps its handedness, a falsely chiral one maps onto its mirror
/// image after a compensating half-turn.
enum class SystemKind { TrulyChiralSystem, FalselyChiralSystem };

std::string_view to_string(SystemKind kind);

enum class DiagonalRelation { AntisymmetricDiagonal, ForcedZero };

struct DerivationStep {
  std::string operation;
  std::string relation;
};

struct Verdict {
  SystemKind system;
  ChiralityClass influence;
  DiagonalRelation relation;
  bool pved_possible = false;
  std::vector<DerivationStep> derivation;
  std::string note;
};

class UnsupportedInfluenceError : public std::runtime_error {
 public:
  explicit UnsupportedInfluenceError(const std::string& message) : std::runtime_error(message) {}
};

/// Symmetry argument for whether the influence can split the energies of the
/// two enantiomers. Only TrulyChiral and FalselyChiral influences are
/// meaningful here; anything else raises UnsupportedInfluenceError.
/// Matching system and influence behavior under motion reversal leaves the
/// parity relation H_LL = -H_RR unconstrained (splitting possible); mismatched
/// behavior forces H_LL = H_RR = 0.
Verdict chirality_test(SystemKind system, ChiralityClass influence);

/// Parity-violating energy difference from the two diagonal elements.
double pved(double h_ll, double h_rr);

/// Nuclear weak charge (1 - 4 sin2_theta_w) * z - n. Requires z, n >= 0 and
/// sin2_theta_w in [0, 1].
double weak_charge(int z, int n, double sin2_theta_w);

}  // namespace chiralkit
