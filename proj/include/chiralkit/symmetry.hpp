#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chiralkit/dsl.hpp"
#include "chiralkit/kinematic.hpp"

namespace chiralkit {

enum class CoordinateMap { Identity, SpaceFlip, TimeFlip, SpaceTimeFlip };

/// Outcome of conjugating an interaction by a discrete symmetry operator:
/// the density picks up overall_sign and its arguments move by coordinate_map.
/// Signs are per term; overall_sign is 0 when terms disagree.
struct TransformResult {
  int overall_sign = +1;
  CoordinateMap coordinate_map = CoordinateMap::Identity;
  bool conjugates_coefficients = false;  // antiunitary operators only
  bool contraction_consistent = true;    // time/space components agreed in every pair
  std::vector<int> per_term_signs;
};

class FreeIndexError : public std::runtime_error {
 public:
  explicit FreeIndexError(const std::string& message) : std::runtime_error(message) {}
};

/// Per-bilinear sign tables for Hermitian interaction densities.
/// Parity: scalar +, pseudoscalar -, vector (time +, space -),
/// axial vector (time -, space +).
/// Motion reversal (antiunitary): scalar +, pseudoscalar -, vector
/// (time +, space -), axial vector (time +, space -). These are the signs of
/// the measured density values; Hermitian-conjugation bookkeeping for the
/// anti-Hermitian pseudoscalar is already folded in, which is what the
/// plane-wave verifier confirms numerically.
int parity_sign_scalar(GammaKind kind);
int parity_sign_component(GammaKind kind, bool time_component);
int time_sign_scalar(GammaKind kind);
int time_sign_component(GammaKind kind, bool time_component);

TransformResult parity_transform(const HamiltonianIR& ir);
TransformResult time_reversal_transform(const HamiltonianIR& ir);

/// Rotations act trivially on a fully contracted interaction: every index pair
/// sums over all components, so the density is a rotational scalar. Throws
/// FreeIndexError when a vector-like bilinear has no contraction partner.
TransformResult rotation_transform(const HamiltonianIR& ir);

/// Composition o2 after o1: signs multiply, coordinate maps compose,
/// antiunitarity toggles.
TransformResult compose(const TransformResult& first, const TransformResult& second);

struct TermSignature {
  int parity_sign = +1;
  int time_sign = +1;
  friend bool operator==(const TermSignature&, const TermSignature&) = default;
};

struct InfluenceClassification {
  ChiralityClass cls = ChiralityClass::Undetermined;
  int parity_sign = 0;  // 0 when terms disagree
  int time_sign = 0;    // 0 when terms disagree
  bool rotation_invariant = true;
  std::vector<TermSignature> per_term;
  // Partition of term positions by parity signature, the useful breakdown when
  // the whole sum is Undetermined (e.g. the neutral-current combination).
  std::vector<std::size_t> parity_even_terms;
  std::vector<std::size_t> parity_odd_terms;
};

/// Classifies an interaction as a chiral influence. Mixed parity or mixed
/// motion-reversal signatures yield Undetermined with the per-term breakdown
/// instead of an error.
InfluenceClassification classify_influence(const HamiltonianIR& ir);

}  // namespace chiralkit
