#include "chiralkit/gamma.hpp"

namespace chiralkit {

namespace {

using EC = ExactComplex;

// 2x2 Pauli blocks embedded at block row br, block column bc.
void put_block(Matrix4Q& m, int br, int bc, const std::array<EC, 4>& blk) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m.at(2 * br + r, 2 * bc + c) = blk[static_cast<std::size_t>(2 * r + c)];
}

std::array<EC, 4> pauli(int k) {
  const EC o(0), l(1), i = EC::i_unit();
  switch (k) {
    case 1: return {o, l, l, o};
    case 2: return {o, -i, i, o};
    default: return {l, o, o, -l};
  }
}

std::array<EC, 4> negated(std::array<EC, 4> b) {
  for (auto& z : b) z = -z;
  return b;
}

}  // namespace

GammaBasis build_weyl_basis() {
  GammaBasis basis;
  const std::array<EC, 4> id2{EC(1), EC(0), EC(0), EC(1)};

  put_block(basis.gamma[0], 0, 1, id2);
  put_block(basis.gamma[0], 1, 0, id2);
  for (int k = 1; k <= 3; ++k) {
    put_block(basis.gamma[static_cast<std::size_t>(k)], 0, 1, pauli(k));
    put_block(basis.gamma[static_cast<std::size_t>(k)], 1, 0, negated(pauli(k)));
  }

  // gamma5 = i g0 g1 g2 g3 = diag(-1,-1,+1,+1) in this realization.
  basis.gamma5 = EC::i_unit() * (basis.gamma[0] * basis.gamma[1] * basis.gamma[2] * basis.gamma[3]);

  const Rational half(1, 2);
  const Matrix4Q id = Matrix4Q::identity();
  basis.p_left = EC(half) * (id - basis.gamma5);
  basis.p_right = EC(half) * (id + basis.gamma5);
  return basis;
}

const GammaBasis& weyl_basis() {
  static const GammaBasis basis = build_weyl_basis();
  return basis;
}

bool CliffordReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

CliffordReport verify_clifford(const GammaBasis& basis) {
  CliffordReport report;
  const Matrix4Q id = Matrix4Q::identity();
  const Matrix4Q zero = Matrix4Q::zero();

  auto add = [&report](std::string name, bool ok) {
    report.checks.push_back({std::move(name), ok});
  };

  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      Matrix4Q expected = zero;
      if (mu == nu) expected = EC(2 * basis.signature.diag[static_cast<std::size_t>(mu)]) * id;
      const bool ok = anticommutator(basis.gamma[static_cast<std::size_t>(mu)],
                                     basis.gamma[static_cast<std::size_t>(nu)]) == expected;
      add("anticommutator(gamma" + std::to_string(mu) + ",gamma" + std::to_string(nu) + ")", ok);
    }
  }

  add("gamma5 squared", basis.gamma5 * basis.gamma5 == id);
  for (int mu = 0; mu < 4; ++mu) {
    add("gamma5 anticommutes with gamma" + std::to_string(mu),
        anticommutator(basis.gamma5, basis.gamma[static_cast<std::size_t>(mu)]) == zero);
  }

  add("p_left idempotent", basis.p_left * basis.p_left == basis.p_left);
  add("p_right idempotent", basis.p_right * basis.p_right == basis.p_right);
  add("projectors orthogonal", basis.p_left * basis.p_right == zero);
  add("projectors sum to identity", basis.p_left + basis.p_right == id);

  return report;
}

GammaBasisD to_double(const GammaBasis& basis) {
  GammaBasisD d;
  for (std::size_t k = 0; k < 4; ++k) d.gamma[k] = to_double(basis.gamma[k]);
  d.gamma5 = to_double(basis.gamma5);
  d.p_left = to_double(basis.p_left);
  d.p_right = to_double(basis.p_right);
  return d;
}

}  // namespace chiralkit
