// End-to-end acceptance run: prints one PASS/FAIL line per criterion and
// exits with the number of failures.
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "chiralkit/dsl.hpp"
#include "chiralkit/gamma.hpp"
#include "chiralkit/kinematic.hpp"
#include "chiralkit/qft.hpp"
#include "chiralkit/symmetry.hpp"
#include "chiralkit/verdict.hpp"

using namespace chiralkit;

namespace {

int failures = 0;

void criterion(int number, const char* label, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, label);
  if (!ok) ++failures;
}

ExactComplex random_exact(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

bool classifies_as(const char* builtin, ChiralityClass expected) {
  const HamiltonianIR* ir = find_builtin(builtin);
  return ir != nullptr && classify_influence(*ir).cls == expected;
}

bool kinematic_as(const char* text, ChiralityClass expected) {
  return classify_kinematic(parse_kinematic(text)) == expected;
}

}  // namespace

static bool check_gamma_audit() {
  const CliffordReport report = verify_clifford(weyl_basis());
  if (report.checks.size() != 19 || !report.all_passed()) return false;
  for (const auto& c : report.checks)
    if (!c.passed) return false;
  return true;
}

static bool check_classification() {
  bool ok = true;
  ok = ok && kinematic_as("sigma_e . p", ChiralityClass::TrulyChiral);
  ok = ok && kinematic_as("{ sigma_e . p , rho }", ChiralityClass::TrulyChiral);
  ok = ok && kinematic_as("sigma . r", ChiralityClass::FalselyChiral);
  ok = ok && kinematic_as("E . B", ChiralityClass::FalselyChiral);
  ok = ok && kinematic_as("p . p", ChiralityClass::Achiral);
  ok = ok && kinematic_as("p", ChiralityClass::NotRotationalScalar);

  ok = ok && classifies_as("H_AV", ChiralityClass::TrulyChiral);
  ok = ok && classifies_as("H_VA", ChiralityClass::TrulyChiral);
  ok = ok && classifies_as("H_ax", ChiralityClass::FalselyChiral);
  ok = ok && classifies_as("H_VV", ChiralityClass::Achiral);
  ok = ok && classifies_as("H_AA", ChiralityClass::Achiral);

  const InfluenceClassification nc = classify_influence(*find_builtin("H_NC"));
  ok = ok && nc.cls == ChiralityClass::Undetermined;
  ok = ok && nc.parity_even_terms == std::vector<std::size_t>{0, 3};
  ok = ok && nc.parity_odd_terms == std::vector<std::size_t>{1, 2};
  return ok;
}

static bool check_verdicts() {
  const Verdict tt = chirality_test(SystemKind::TrulyChiralSystem, ChiralityClass::TrulyChiral);
  const Verdict tf = chirality_test(SystemKind::TrulyChiralSystem, ChiralityClass::FalselyChiral);
  const Verdict ft = chirality_test(SystemKind::FalselyChiralSystem, ChiralityClass::TrulyChiral);
  const Verdict ff =
      chirality_test(SystemKind::FalselyChiralSystem, ChiralityClass::FalselyChiral);

  bool ok = tt.pved_possible && tt.relation == DiagonalRelation::AntisymmetricDiagonal;
  ok = ok && !tf.pved_possible && tf.relation == DiagonalRelation::ForcedZero;
  ok = ok && !ft.pved_possible && ft.relation == DiagonalRelation::ForcedZero;
  ok = ok && ff.pved_possible && ff.relation == DiagonalRelation::AntisymmetricDiagonal;
  ok = ok && pved(3.0, 1.0) == 1.0;

  bool rejected = false;
  try {
    chirality_test(SystemKind::TrulyChiralSystem, ChiralityClass::Achiral);
  } catch (const UnsupportedInfluenceError&) {
    rejected = true;
  }
  return ok && rejected;
}

static bool check_mirror_rotation() {
  std::mt19937_64 rng(101);
  const Matrix4Q rx = rotation_bispinor_pi(Axis::X);
  const Matrix4Q ry = rotation_bispinor_pi(Axis::Y);
  const Matrix4Q rz = rotation_bispinor_pi(Axis::Z);

  for (int trial = 0; trial < 100; ++trial) {
    ExactComplex a, b;
    // Generic components: nonzero, and excluding the degenerate rays where
    // the identity or the x/z half-turns also reach the mirror partner.
    do {
      a = random_exact(rng);
      b = random_exact(rng);
    } while (a.is_zero() || b.is_zero() || a * a == b * b || a * a == -(b * b));

    const BispinorQ psi{{a, b, ExactComplex(0), ExactComplex(0)}};
    const BispinorQ phi = build_phi(psi);

    if (!(ry * psi == phi)) return false;
    if (proportional_up_to_phase(rx * psi, phi)) return false;
    if (proportional_up_to_phase(rz * psi, phi)) return false;

    const CaseOutcome outcome = rotation_case_analysis(psi, phi);
    if (outcome.tag != RotationCase::Found) return false;
    if (outcome.identity_suffices) return false;
    if (!outcome.axis.has_value() || *outcome.axis != Axis::Y) return false;
  }
  return true;
}

static bool check_chirality_blocks() {
  std::mt19937_64 rng(103);
  const BispinorQ left_target{{ExactComplex(1), ExactComplex(2), ExactComplex(0),
                               ExactComplex(0)}};
  for (int trial = 0; trial < 100; ++trial) {
    ExactComplex c, d;
    do {
      c = random_exact(rng);
      d = random_exact(rng);
    } while (c.is_zero() || d.is_zero());

    const BispinorQ right{{ExactComplex(0), ExactComplex(0), c, d}};
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      const BispinorQ image = rotation_bispinor_pi(axis) * right;
      if (!image[0].is_zero() || !image[1].is_zero()) return false;
    }
    if (rotation_case_analysis(right, left_target).tag != RotationCase::BlockObstructed)
      return false;
  }
  return true;
}

static bool check_sign_match(const CheckReport& nc, const CheckReport& ax) {
  const InfluenceClassification av = classify_influence(*find_builtin("H_AV"));
  const InfluenceClassification axc = classify_influence(*find_builtin("H_ax"));
  bool ok = nc.measured_parity_sign == av.parity_sign;
  ok = ok && nc.measured_chain_sign == av.time_sign;
  ok = ok && ax.measured_parity_sign == axc.parity_sign;
  ok = ok && ax.measured_chain_sign == axc.time_sign;
  ok = ok && nc.nonzero_samples >= 1 && ax.nonzero_samples >= 1;
  return ok;
}

static bool check_weak_charge() {
  bool ok = weak_charge(1, 0, 0.25) == 0.0;
  ok = ok && weak_charge(3, 4, 0.25) == -4.0;
  ok = ok && weak_charge(2, 0, 0.0) == 2.0;
  ok = ok && weak_charge(0, 5, 0.75) == -5.0;

  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> count(0, 200);
  std::uniform_int_distribution<int> dyadic(0, 256);
  for (int trial = 0; trial < 100; ++trial) {
    const int z1 = count(rng), n1 = count(rng), z2 = count(rng), n2 = count(rng);
    const double s2 = static_cast<double>(dyadic(rng)) / 256.0;
    if (weak_charge(z1 + z2, n1 + n2, s2) != weak_charge(z1, n1, s2) + weak_charge(z2, n2, s2))
      return false;
  }
  return ok;
}

static bool check_parser() {
  for (const BuiltinHamiltonian& entry : builtin_library()) {
    const std::string text = render(entry.ir);
    if (text.empty()) return false;
    if (!(parse_hamiltonian(text) == entry.ir)) return false;
  }

  std::mt19937_64 rng(109);
  const std::vector<std::string> vocab{"GF", "Ka",   "i",  "Nbar", "ebar", "N", "e",  "g",
                                       "g5", "[mu]", "1",  "(",    ")",    "*", "+",  "-",
                                       "a",  "[nu]", "42", "#"};
  const std::string valid = "GF*(Nbar g[mu] g5 N)*(ebar g[mu] e) + i*Ka*(Nbar 1 N)*(ebar g5 e)";

  std::uniform_int_distribution<int> strategy(0, 2);
  std::uniform_int_distribution<int> byte(1, 255);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);

  for (int trial = 0; trial < 10000; ++trial) {
    std::string input;
    switch (strategy(rng)) {
      case 0: {
        std::uniform_int_distribution<int> len(0, 40);
        const int n = len(rng);
        for (int k = 0; k < n; ++k) input.push_back(static_cast<char>(byte(rng)));
        break;
      }
      case 1: {
        std::uniform_int_distribution<int> len(1, 24);
        const int n = len(rng);
        for (int k = 0; k < n; ++k) {
          if (k) input.push_back(' ');
          input += vocab[word(rng)];
        }
        break;
      }
      default: {
        input = valid;
        std::uniform_int_distribution<std::size_t> pos(0, input.size() - 1);
        for (int k = 0; k < 4; ++k) input[pos(rng)] = static_cast<char>(byte(rng));
        break;
      }
    }

    try {
      const HamiltonianIR ir = parse_hamiltonian(input);
      if (!(parse_hamiltonian(render(ir)) == ir)) return false;
    } catch (const DslError& err) {
      if (err.span().end > input.size() || err.span().begin > err.span().end) return false;
    } catch (...) {
      return false;
    }
  }
  return true;
}

static bool check_propagator() {
  const auto half = axion_propagator_coefficients(Rational(1, 2), 0);
  if (half.size() != 1 || !(half[0] == Rational(-4))) return false;

  const auto unit = axion_propagator_coefficients(Rational(1), 2);
  if (unit.size() != 3) return false;
  for (const Rational& c : unit)
    if (!(c == Rational(-1))) return false;

  const auto two = axion_propagator_coefficients(Rational(2), 1);
  return two.size() == 2 && two[0] == Rational(-1, 4) && two[1] == Rational(-1, 16);
}

int main() {
  criterion(1, "exact gamma realization passes its full structural audit", check_gamma_audit());
  criterion(2, "kinematic and operator influences classify correctly", check_classification());
  criterion(3, "all four system-influence verdicts and the energy difference are right",
            check_verdicts());
  criterion(4, "a y half-turn uniquely reaches the mirror partner of generic left states",
            check_mirror_rotation());
  criterion(5, "half-turns never cross between chirality doublets", check_chirality_blocks());

  const CheckReport nc = run_nc_check(42, 1000, 1e-10);
  criterion(6, "axial-vector weak sign chain verifies on 1000 random samples", nc.passed);

  const CheckReport ax = run_axion_check(42, 1000, 1e-10);
  criterion(7, "pseudoscalar mediator sign chain verifies on 1000 random samples", ax.passed);

  criterion(8, "measured transformation signs match the symbolic classification",
            check_sign_match(nc, ax));
  criterion(9, "weak charge reproduces reference values and is additive", check_weak_charge());
  criterion(10, "interaction parser round-trips its library and survives 10000 fuzz inputs",
            check_parser());
  criterion(11, "static mediator expansion coefficients are exact", check_propagator());

  return failures;
}
