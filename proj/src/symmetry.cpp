#include "chiralkit/symmetry.hpp"

#include <set>

namespace chiralkit {

int parity_sign_scalar(GammaKind kind) {
  switch (kind) {
    case GammaKind::Scalar: return +1;
    case GammaKind::Pseudoscalar: return -1;
    default: return +1;  // index-bearing kinds are handled per component
  }
}

int parity_sign_component(GammaKind kind, bool time_component) {
  switch (kind) {
    case GammaKind::Vector: return time_component ? +1 : -1;
    case GammaKind::AxialVector: return time_component ? -1 : +1;
    default: return parity_sign_scalar(kind);
  }
}

int time_sign_scalar(GammaKind kind) {
  switch (kind) {
    case GammaKind::Scalar: return +1;
    case GammaKind::Pseudoscalar: return -1;
    default: return +1;
  }
}

int time_sign_component(GammaKind kind, bool time_component) {
  switch (kind) {
    case GammaKind::Vector: return time_component ? +1 : -1;
    case GammaKind::AxialVector: return time_component ? +1 : -1;
    default: return time_sign_scalar(kind);
  }
}

namespace {

bool has_index(GammaKind kind) {
  return kind == GammaKind::Vector || kind == GammaKind::AxialVector;
}

void require_fully_contracted(const InteractionTerm& term) {
  std::set<int> contracted;
  for (const auto& c : term.contractions) {
    contracted.insert(c.first_bilinear);
    contracted.insert(c.second_bilinear);
  }
  for (std::size_t k = 0; k < term.bilinears.size(); ++k) {
    if (has_index(term.bilinears[k].structure.kind) && !contracted.count(static_cast<int>(k)))
      throw FreeIndexError("bilinear " + std::to_string(k) + " carries index '" +
                           term.bilinears[k].structure.index + "' with no contraction partner");
  }
}

struct PairSign {
  int sign = +1;
  bool consistent = true;
};

template <class ComponentSign>
PairSign contraction_sign(GammaKind a, GammaKind b, ComponentSign component) {
  const int time_product = component(a, true) * component(b, true);
  const int space_product = component(a, false) * component(b, false);
  return {time_product, time_product == space_product};
}

template <class ScalarSign, class ComponentSign>
TransformResult run_transform(const HamiltonianIR& ir, CoordinateMap map, bool antiunitary,
                              ScalarSign scalar, ComponentSign component) {
  TransformResult result;
  result.coordinate_map = map;
  result.conjugates_coefficients = antiunitary;
  for (const auto& signed_term : ir.terms) {
    const auto& term = signed_term.term;
    require_fully_contracted(term);
    int sign = +1;
    for (const auto& b : term.bilinears)
      if (!has_index(b.structure.kind)) sign *= scalar(b.structure.kind);
    for (const auto& c : term.contractions) {
      const GammaKind ka = term.bilinears[static_cast<std::size_t>(c.first_bilinear)].structure.kind;
      const GammaKind kb = term.bilinears[static_cast<std::size_t>(c.second_bilinear)].structure.kind;
      const PairSign p = contraction_sign(ka, kb, component);
      if (!p.consistent) result.contraction_consistent = false;
      sign *= p.sign;
    }
    result.per_term_signs.push_back(sign);
  }
  result.overall_sign = result.per_term_signs.empty() ? +1 : result.per_term_signs.front();
  for (int s : result.per_term_signs)
    if (s != result.overall_sign) result.overall_sign = 0;
  return result;
}

}  // namespace

TransformResult parity_transform(const HamiltonianIR& ir) {
  return run_transform(ir, CoordinateMap::SpaceFlip, false, parity_sign_scalar,
                       parity_sign_component);
}

TransformResult time_reversal_transform(const HamiltonianIR& ir) {
  return run_transform(ir, CoordinateMap::TimeFlip, true, time_sign_scalar, time_sign_component);
}

TransformResult rotation_transform(const HamiltonianIR& ir) {
  TransformResult result;
  result.coordinate_map = CoordinateMap::Identity;
  for (const auto& signed_term : ir.terms) {
    require_fully_contracted(signed_term.term);
    result.per_term_signs.push_back(+1);
  }
  result.overall_sign = +1;
  return result;
}

TransformResult compose(const TransformResult& first, const TransformResult& second) {
  TransformResult result;
  result.overall_sign = first.overall_sign * second.overall_sign;
  result.conjugates_coefficients = first.conjugates_coefficients != second.conjugates_coefficients;
  result.contraction_consistent = first.contraction_consistent && second.contraction_consistent;

  const auto flips = [](CoordinateMap m) {
    const bool space = m == CoordinateMap::SpaceFlip || m == CoordinateMap::SpaceTimeFlip;
    const bool time = m == CoordinateMap::TimeFlip || m == CoordinateMap::SpaceTimeFlip;
    return std::pair{space, time};
  };
  const auto [s1, t1] = flips(first.coordinate_map);
  const auto [s2, t2] = flips(second.coordinate_map);
  const bool space = s1 != s2;
  const bool time = t1 != t2;
  result.coordinate_map = space ? (time ? CoordinateMap::SpaceTimeFlip : CoordinateMap::SpaceFlip)
                                : (time ? CoordinateMap::TimeFlip : CoordinateMap::Identity);

  if (first.per_term_signs.size() == second.per_term_signs.size()) {
    for (std::size_t k = 0; k < first.per_term_signs.size(); ++k)
      result.per_term_signs.push_back(first.per_term_signs[k] * second.per_term_signs[k]);
  }
  return result;
}

InfluenceClassification classify_influence(const HamiltonianIR& ir) {
  InfluenceClassification out;
  TransformResult parity;
  TransformResult time;
  try {
    parity = parity_transform(ir);
    time = time_reversal_transform(ir);
  } catch (const FreeIndexError&) {
    out.cls = ChiralityClass::NotRotationalScalar;
    out.rotation_invariant = false;
    return out;
  }

  for (std::size_t k = 0; k < ir.terms.size(); ++k) {
    out.per_term.push_back({parity.per_term_signs[k], time.per_term_signs[k]});
    if (parity.per_term_signs[k] > 0)
      out.parity_even_terms.push_back(k);
    else
      out.parity_odd_terms.push_back(k);
  }
  out.parity_sign = parity.overall_sign;
  out.time_sign = time.overall_sign;

  if (parity.overall_sign == 0) {
    out.cls = ChiralityClass::Undetermined;
    return out;
  }
  if (parity.overall_sign > 0) {
    out.cls = ChiralityClass::Achiral;
    return out;
  }
  if (time.overall_sign == 0) {
    out.cls = ChiralityClass::Undetermined;
    return out;
  }
  out.cls = time.overall_sign > 0 ? ChiralityClass::TrulyChiral : ChiralityClass::FalselyChiral;
  return out;
}

}  // namespace chiralkit
