#pragma once

#include <array>
#include <string>
#include <vector>

#include "chiralkit/matrix.hpp"

namespace chiralkit {

enum class Hand { Left, Right };

/// Metric signature as the diagonal of eta, time component first.
struct MetricSignature {
  std::array<int, 4> diag{+1, -1, -1, -1};
  friend bool operator==(const MetricSignature&, const MetricSignature&) = default;
};

/// A concrete gamma-matrix realization with exact entries.
struct GammaBasis {
  std::array<Matrix4Q, 4> gamma;  // gamma^0 .. gamma^3
  Matrix4Q gamma5;
  Matrix4Q p_left;   // (1 - gamma5)/2
  Matrix4Q p_right;  // (1 + gamma5)/2
  MetricSignature signature;
};

///// Chiral (Weyl) realization for signature (+,-,-,-):
///   gamma^0 = [[0, I], [I, 0]],  gamma^i = [[0, sigma_i], [-sigma_i, 0]],
///   gamma5 = diag(-1, -1, +1, +1).
/// Upper two components are left-handed, lower two right-handed.
const GammaBasis& weyl_basis();
GammaBasis build_weyl_basis();

template <class S>
Matrix4<S> anticommutator(const Matrix4<S>& a, const Matrix4<S>& b) {
  return a * b + b * a;
}

template <class S>
Matrix4<S> commutator(const Matrix4<S>& a, const Matrix4<S>& b) {
  return a * b - b * a;
}

/// Projects onto a chirality eigenspace of the Weyl realization. Left keeps the
/// upper doublet, Right the lower one; the result is the matching projector
/// applied to psi and is exact for exact inputs.
template <class S>
Bispinor<S> chirality_project(const Bispinor<S>& psi, Hand hand) {
  Bispinor<S> r = psi;
  if (hand == Hand::Left) {
    r[2] = S{};
    r[3] = S{};
  } else {
    r[0] = S{};
    r[1] = S{};
  }
  return r;
}

struct CliffordCheck {
  std::string name;
  bool passed = false;
};

struct CliffordReport {
  std::vector<CliffordCheck> checks;
  bool all_passed() const;
};

/// Exhaustive structural audit of a realization: all ten distinct anticommutator
/// pairs against 2*eta, gamma5 squaring to the identity and anticommuting with
/// every gamma, and the chirality projectors being idempotent, orthogonal, and
/// summing to the identity. Every comparison is exact.
CliffordReport verify_clifford(const GammaBasis& basis);

/// Double-precision copy of a basis for numeric plane-wave work.
struct GammaBasisD {
  std::array<Matrix4C, 4> gamma;
  Matrix4C gamma5;
  Matrix4C p_left;
  Matrix4C p_right;
};

GammaBasisD to_double(const GammaBasis& basis);

}  // namespace chiralkit
