#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chiralkit/gamma.hpp"

using namespace chiralkit;

namespace {

Matrix4Q from_rows(const std::array<std::array<int, 8>, 4>& rows) {
  // Each row holds re/im pairs.
  Matrix4Q m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m.at(r, c) = ExactComplex{Rational(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(2 * c)]),
                                Rational(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(2 * c + 1)])};
  return m;
}

}  // namespace

TEST_CASE("gamma matrices match the block structure written out by hand") {
  const GammaBasis& b = weyl_basis();

  const Matrix4Q gamma0 = from_rows({{{0, 0, 0, 0, 1, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 1, 0},
                                      {1, 0, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 1, 0, 0, 0, 0, 0}}});
  CHECK(b.gamma[0] == gamma0);

  const Matrix4Q gamma2 = from_rows({{{0, 0, 0, 0, 0, 0, 0, -1},
                                      {0, 0, 0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 1, 0, 0, 0, 0},
                                      {0, -1, 0, 0, 0, 0, 0, 0}}});
  CHECK(b.gamma[2] == gamma2);

  const Matrix4Q gamma5 = from_rows({{{-1, 0, 0, 0, 0, 0, 0, 0},
                                      {0, 0, -1, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 1, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 1, 0}}});
  CHECK(b.gamma5 == gamma5);

  // Independent oracle: the chirality element as the explicit i g0 g1 g2 g3 product.
  const Matrix4Q product =
      ExactComplex::i_unit() * (b.gamma[0] * b.gamma[1] * b.gamma[2] * b.gamma[3]);
  CHECK(product == gamma5);
}

TEST_CASE("anticommutators reproduce twice the metric") {
  const GammaBasis& b = weyl_basis();
  const Matrix4Q id = Matrix4Q::identity();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Matrix4Q expected = Matrix4Q::zero();
      if (mu == nu)
        expected = ExactComplex(2 * b.signature.diag[static_cast<std::size_t>(mu)]) * id;
      CHECK(anticommutator(b.gamma[static_cast<std::size_t>(mu)],
                           b.gamma[static_cast<std::size_t>(nu)]) == expected);
    }
  }
  CHECK(anticommutator(id, id) == ExactComplex(2) * id);
}

TEST_CASE("projectors take the closed forms and split the identity") {
  const GammaBasis& b = weyl_basis();
  Matrix4Q p_left = Matrix4Q::zero();
  p_left.at(0, 0) = ExactComplex(1);
  p_left.at(1, 1) = ExactComplex(1);
  Matrix4Q p_right = Matrix4Q::zero();
  p_right.at(2, 2) = ExactComplex(1);
  p_right.at(3, 3) = ExactComplex(1);
  CHECK(b.p_left == p_left);
  CHECK(b.p_right == p_right);
  CHECK(b.p_left + b.p_right == Matrix4Q::identity());
}

TEST_CASE("chirality_project agrees with multiplying by the projector") {
  const GammaBasis& b = weyl_basis();
  const BispinorQ psi{{ExactComplex{Rational(1), Rational(2)}, ExactComplex{Rational(-3), Rational(1, 2)},
                       ExactComplex{Rational(5, 3)}, ExactComplex{Rational(0), Rational(-7)}}};
  CHECK(chirality_project(psi, Hand::Left) == b.p_left * psi);
  CHECK(chirality_project(psi, Hand::Right) == b.p_right * psi);
  CHECK(chirality_project(psi, Hand::Left) + chirality_project(psi, Hand::Right) == psi);
}

TEST_CASE("gamma5 eigenvalues are -1 on the upper doublet and +1 on the lower") {
  const GammaBasis& b = weyl_basis();
  for (int k = 0; k < 4; ++k) {
    BispinorQ e;
    e[k] = ExactComplex(1);
    const BispinorQ image = b.gamma5 * e;
    CHECK(image == (k < 2 ? ExactComplex(-1) : ExactComplex(1)) * e);
  }
}

TEST_CASE("the full structural audit passes and covers every identity") {
  const CliffordReport report = verify_clifford(weyl_basis());
  CHECK(report.all_passed());
  // 10 anticommutator pairs, gamma5 squared, 4 gamma5 anticommutators, 4 projector identities.
  CHECK(report.checks.size() == 19);
}

TEST_CASE("audit is about relations, not labels: swapping gamma1 and gamma2 still passes") {
  GammaBasis swapped = build_weyl_basis();
  std::swap(swapped.gamma[1], swapped.gamma[2]);
  CHECK(verify_clifford(swapped).all_passed());
}

TEST_CASE("audit flags a broken realization") {
  GammaBasis broken = build_weyl_basis();
  broken.gamma[0] = Matrix4Q::zero();
  const CliffordReport report = verify_clifford(broken);
  CHECK(!report.all_passed());
  bool gamma00_failed = false;
  for (const auto& c : report.checks)
    if (c.name == "anticommutator(gamma0,gamma0)") gamma00_failed = !c.passed;
  CHECK(gamma00_failed);
}
