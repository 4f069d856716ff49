#include "chiralkit/qft.hpp"

#include <cmath>

#include "chiralkit/symmetry.hpp"

namespace chiralkit {

namespace {

using C = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// 2x2 complex matrices as row-major arrays, enough for the spinor square roots.
using Mat2 = std::array<C, 4>;

Mat2 pauli_dot(const std::array<double, 3>& v) {
  return {C(v[2], 0.0), C(v[0], -v[1]), C(v[0], v[1]), C(-v[2], 0.0)};
}

std::array<C, 2> mat2_apply(const Mat2& m, const std::array<C, 2>& x) {
  return {m[0] * x[0] + m[1] * x[1], m[2] * x[0] + m[3] * x[1]};
}

// Square root of the Hermitian PSD matrix a*I + c.sigma with eigenvalues
// a +- |c|: alpha*I + beta*(c.sigma).
Mat2 sqrt_scalar_plus_pauli(double a, const std::array<double, 3>& c) {
  const double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  const double lo = a - norm;
  const double hi = a + norm;
  if (lo < -1e-12 * std::max(1.0, hi))
    throw OffShellError("spinor square root of a non-positive matrix");
  const double sq_hi = std::sqrt(std::max(hi, 0.0));
  const double sq_lo = std::sqrt(std::max(lo, 0.0));
  const double alpha = 0.5 * (sq_hi + sq_lo);
  const double beta = norm > 1e-300 ? 0.5 * (sq_hi - sq_lo) / norm : 0.0;
  Mat2 s = pauli_dot(c);
  for (auto& z : s) z *= beta;
  s[0] += alpha;
  s[3] += alpha;
  return s;
}

const GammaBasisD& weyl_d() {
  static const GammaBasisD basis = to_double(weyl_basis());
  return basis;
}

const Matrix4C& t_matrix() {
  // gamma1 gamma3, the unitary part of motion reversal; real in this realization.
  static const Matrix4C m = to_double(weyl_basis().gamma[1] * weyl_basis().gamma[3]);
  return m;
}

}  // namespace

PlaneWaveState plane_wave_spinor(const FourMomentum& momentum, int spin_label, double mass) {
  if (spin_label != 1 && spin_label != 2)
    throw std::invalid_argument("plane_wave_spinor: spin label must be 1 or 2");
  if (mass < 0.0) throw std::invalid_argument("plane_wave_spinor: negative mass");
  if (momentum.energy <= 0.0)
    throw OffShellError("plane_wave_spinor: energy must be positive");
  const double scale = std::max(1.0, momentum.energy * momentum.energy);
  if (std::abs(momentum.mass_shell_gap(mass)) > 1e-9 * scale)
    throw OffShellError("plane_wave_spinor: momentum is off the mass shell");

  const std::array<C, 2> xi =
      spin_label == 1 ? std::array<C, 2>{C(1.0), C(0.0)} : std::array<C, 2>{C(0.0), C(1.0)};
  const std::array<double, 3> minus_p{-momentum.p[0], -momentum.p[1], -momentum.p[2]};

  // p.sigma = E - p.vec sigma, p.sigmabar = E + p.vec sigma.
  const Mat2 sqrt_ps = sqrt_scalar_plus_pauli(momentum.energy, minus_p);
  const Mat2 sqrt_psbar = sqrt_scalar_plus_pauli(momentum.energy, momentum.p);
  const auto upper = mat2_apply(sqrt_ps, xi);
  const auto lower = mat2_apply(sqrt_psbar, xi);

  PlaneWaveState state;
  state.u = BispinorC{{upper[0], upper[1], lower[0], lower[1]}};
  state.momentum = momentum;
  state.spin_label = spin_label;
  state.mass = mass;
  return state;
}

std::pair<BispinorC, SpacetimePoint> apply_parity_state(const BispinorC& psi,
                                                        const SpacetimePoint& at) {
  return {weyl_d().gamma[0] * psi, {at.t, {-at.x[0], -at.x[1], -at.x[2]}}};
}

std::pair<BispinorC, SpacetimePoint> apply_time_reversal_state(const BispinorC& psi,
                                                               const SpacetimePoint& at) {
  return {t_matrix() * conjugated(psi), {-at.t, at.x}};
}

namespace {

template <class S, class IsZero>
Bispinor<S> build_phi_impl(const Bispinor<S>& psi, IsZero is_zero) {
  if (!is_zero(psi[2]) || !is_zero(psi[3]))
    throw NotPureLeftError("build_phi: state populates the right-handed doublet");
  Bispinor<S> phi;
  phi[0] = -psi[1];
  phi[1] = psi[0];
  return phi;
}

}  // namespace

BispinorQ build_phi(const BispinorQ& pure_left) {
  return build_phi_impl(pure_left, [](const ExactComplex& z) { return z.is_zero(); });
}

BispinorC build_phi(const BispinorC& pure_left) {
  return build_phi_impl(pure_left, [](const C& z) { return std::abs(z) <= 1e-12; });
}

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Matrix4Q rotation_bispinor_pi(Axis axis) {
  const ExactComplex one(1), mi{Rational(0), Rational(-1)};
  Matrix4Q m;
  auto fill_block = [&m](int block, ExactComplex a, ExactComplex b, ExactComplex c,
                         ExactComplex d) {
    const int o = 2 * block;
    m.at(o, o) = a;
    m.at(o, o + 1) = b;
    m.at(o + 1, o) = c;
    m.at(o + 1, o + 1) = d;
  };
  for (int block = 0; block < 2; ++block) {
    switch (axis) {
      case Axis::X: fill_block(block, ExactComplex(0), mi, mi, ExactComplex(0)); break;
      case Axis::Y: fill_block(block, ExactComplex(0), -one, one, ExactComplex(0)); break;
      case Axis::Z: fill_block(block, mi, ExactComplex(0), ExactComplex(0), -mi); break;
    }
  }
  return m;
}

Matrix4C rotation_bispinor(Axis axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  std::array<double, 3> n{};
  n[static_cast<std::size_t>(axis)] = 1.0;
  const Mat2 sigma = pauli_dot(n);
  Matrix4C m;
  for (int block = 0; block < 2; ++block) {
    const int o = 2 * block;
    m.at(o, o) = C(c, 0.0) - C(0.0, s) * sigma[0];
    m.at(o, o + 1) = -C(0.0, s) * sigma[1];
    m.at(o + 1, o) = -C(0.0, s) * sigma[2];
    m.at(o + 1, o + 1) = C(c, 0.0) - C(0.0, s) * sigma[3];
  }
  return m;
}

bool proportional_up_to_phase(const BispinorQ& a, const BispinorQ& b) {
  int pivot = -1;
  for (int k = 0; k < 4; ++k) {
    if (!a[k].is_zero()) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) {
    for (int k = 0; k < 4; ++k)
      if (!b[k].is_zero()) return false;
    return true;
  }
  if (b[pivot].is_zero()) return false;
  const ExactComplex lambda = b[pivot] / a[pivot];
  for (int k = 0; k < 4; ++k)
    if (!(b[k] == lambda * a[k])) return false;
  return true;
}

CaseOutcome rotation_case_analysis(const BispinorQ& start, const BispinorQ& target) {
  if (proportional_up_to_phase(start, target)) return {RotationCase::Found, std::nullopt, true};

  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    if (proportional_up_to_phase(rotation_bispinor_pi(axis) * start, target))
      return {RotationCase::Found, axis, false};
  }

  // Rotations act block-diagonally, so they can never populate or empty a
  // chirality doublet; mismatched supports are unreachable outright.
  const auto support = [](const BispinorQ& v) {
    return std::pair{!v[0].is_zero() || !v[1].is_zero(), !v[2].is_zero() || !v[3].is_zero()};
  };
  if (support(start) != support(target)) return {RotationCase::BlockObstructed, std::nullopt, false};
  return {RotationCase::NoHalfTurnWorks, std::nullopt, false};
}

std::vector<Rational> axion_propagator_coefficients(const Rational& mass, int order) {
  if (mass.is_zero() || mass.to_double() < 0.0)
    throw std::domain_error("axion_propagator_coefficients: mass must be positive");
  if (order < 0) throw std::invalid_argument("axion_propagator_coefficients: negative order");
  const Rational inv_m2 = Rational(1) / (mass * mass);
  std::vector<Rational> coeffs;
  Rational c = -inv_m2;
  for (int k = 0; k <= order; ++k) {
    coeffs.push_back(c);
    c = c * inv_m2;
  }
  return coeffs;
}

namespace {

// gamma0 * Gamma for each structure kind; what sits between psi-dagger and psi.
const Matrix4C& bar_matrix(GammaKind kind, int component) {
  static const std::array<Matrix4C, 4> vector_m = [] {
    std::array<Matrix4C, 4> m;
    for (std::size_t mu = 0; mu < 4; ++mu) m[mu] = weyl_d().gamma[0] * weyl_d().gamma[mu];
    return m;
  }();
  static const std::array<Matrix4C, 4> axial_m = [] {
    std::array<Matrix4C, 4> m;
    for (std::size_t mu = 0; mu < 4; ++mu)
      m[mu] = weyl_d().gamma[0] * weyl_d().gamma[mu] * weyl_d().gamma5;
    return m;
  }();
  static const Matrix4C scalar_m = weyl_d().gamma[0];
  static const Matrix4C pseudo_m = weyl_d().gamma[0] * weyl_d().gamma5;
  switch (kind) {
    case GammaKind::Scalar: return scalar_m;
    case GammaKind::Pseudoscalar: return pseudo_m;
    case GammaKind::Vector: return vector_m[static_cast<std::size_t>(component)];
    case GammaKind::AxialVector: return axial_m[static_cast<std::size_t>(component)];
  }
  return scalar_m;
}

C bilinear(const BispinorC& psi, GammaKind kind, int component) {
  return inner(psi, bar_matrix(kind, component) * psi);
}

}  // namespace

std::complex<double> evaluate_density(const HamiltonianIR& ir, const BispinorC& electron,
                                      const BispinorC& nucleon, const CouplingMap& couplings) {
  const auto lookup = [&couplings](const std::string& name) {
    auto it = couplings.find(name);
    if (it == couplings.end())
      throw UnboundCouplingError("evaluate_density: no value bound for '" + name + "'");
    return it->second;
  };

  C total(0.0);
  for (const auto& signed_term : ir.terms) {
    const auto& term = signed_term.term;
    C value = lookup(term.coupling.name);
    if (term.coupling.imaginary_unit) value *= C(0.0, 1.0);
    if (!term.scalars_absorbed)
      for (const auto& name : term.scalar_fields) value *= lookup(name);

    std::vector<bool> contracted(term.bilinears.size(), false);
    for (const auto& c : term.contractions) {
      contracted[static_cast<std::size_t>(c.first_bilinear)] = true;
      contracted[static_cast<std::size_t>(c.second_bilinear)] = true;
      const auto& ba = term.bilinears[static_cast<std::size_t>(c.first_bilinear)];
      const auto& bb = term.bilinears[static_cast<std::size_t>(c.second_bilinear)];
      const BispinorC& sa = ba.species == Species::Electron ? electron : nucleon;
      const BispinorC& sb = bb.species == Species::Electron ? electron : nucleon;
      C sum(0.0);
      for (int mu = 0; mu < 4; ++mu) {
        const double eta = mu == 0 ? 1.0 : -1.0;
        sum += eta * bilinear(sa, ba.structure.kind, mu) * bilinear(sb, bb.structure.kind, mu);
      }
      value *= sum;
    }
    for (std::size_t k = 0; k < term.bilinears.size(); ++k) {
      const auto& b = term.bilinears[k];
      const bool has_index = b.structure.kind == GammaKind::Vector ||
                             b.structure.kind == GammaKind::AxialVector;
      if (has_index) {
        if (!contracted[k])
          throw FreeIndexError("evaluate_density: bilinear " + std::to_string(k) +
                               " has an uncontracted index");
        continue;
      }
      const BispinorC& s = b.species == Species::Electron ? electron : nucleon;
      value *= bilinear(s, b.structure.kind, 0);
    }
    total += static_cast<double>(signed_term.sign) * value;
  }
  return total;
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t mix64(std::uint64_t x) {
  SplitMix64 s{x};
  return s.next();
}

// Independent per-sample stream keyed on (seed, index).
SplitMix64 sample_stream(std::uint64_t seed, int index) {
  return SplitMix64{mix64(seed ^ mix64(0x632BE59BD9B4E019ull * (static_cast<std::uint64_t>(index) + 1)))};
}

struct SampleDraw {
  BispinorC pure_left_e, pure_left_n;  // projected plane-wave states
  BispinorC wave_e, wave_n;            // unprojected plane-wave spinors
  BispinorC super_e, super_n;          // generic superposition states
  std::string digest;
};

std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

SampleDraw draw_sample(std::uint64_t seed, int index) {
  SplitMix64 rng = sample_stream(seed, index);
  std::uint64_t digest = 0xcbf29ce484222325ull;
  const auto u = [&rng, &digest] {
    const std::uint64_t raw = rng.next();
    digest = (digest ^ raw) * 0x100000001b3ull;
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
  };

  const auto draw_wave = [&u](BispinorC& wave, BispinorC& pure_left) {
    const double mass = 0.5 + 1.5 * u();
    const double mag = 0.9 * mass * u();
    const double cos_theta = 2.0 * u() - 1.0;
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double phi = 2.0 * kPi * u();
    const int spin = u() < 0.5 ? 1 : 2;
    FourMomentum momentum;
    momentum.p = {mag * sin_theta * std::cos(phi), mag * sin_theta * std::sin(phi),
                  mag * cos_theta};
    momentum.energy = std::sqrt(mass * mass + mag * mag);
    wave = plane_wave_spinor(momentum, spin, mass).u;
    pure_left = chirality_project(wave, Hand::Left);
  };
  const auto draw_super = [&u](BispinorC& s) {
    for (int k = 0; k < 4; ++k) s[k] = C(2.0 * u() - 1.0, 2.0 * u() - 1.0);
  };

  SampleDraw d;
  draw_wave(d.wave_e, d.pure_left_e);
  draw_wave(d.wave_n, d.pure_left_n);
  draw_super(d.super_e);
  draw_super(d.super_n);
  d.digest = to_hex(digest);
  return d;
}

struct SignVote {
  int votes = 0;
  int sign = 0;  // 0 until the first vote; stays 0 after any disagreement
  bool disagreed = false;

  void offer(double lhs, double rhs) {
    if (std::abs(lhs) < 1e-12 || std::abs(rhs) < 1e-12) return;
    const int s = (lhs > 0) == (rhs > 0) ? +1 : -1;
    ++votes;
    if (sign == 0 && !disagreed)
      sign = s;
    else if (s != sign) {
      sign = 0;
      disagreed = true;
    }
  }
};

struct CaseSpec {
  std::string case_name;
  const HamiltonianIR* ir;
  CouplingMap couplings;
  int parity_sign;
  int chain_sign;
  bool diagonal_forced_zero;  // pseudoscalar case: plane-wave diagonals vanish
};

CheckReport run_case(const CaseSpec& spec, std::uint64_t seed, int n_samples, double tolerance) {
  if (n_samples <= 0) throw std::invalid_argument("sample count must be positive");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  CheckReport report;
  report.case_name = spec.case_name;
  report.seed = seed;
  report.samples = n_samples;
  report.tolerance = tolerance;
  report.expected_parity_sign = spec.parity_sign;
  report.expected_chain_sign = spec.chain_sign;

  const double sp = spec.parity_sign;
  const double st = spec.chain_sign;
  const Matrix4C half_turn_y = to_double(rotation_bispinor_pi(Axis::Y));
  SignVote parity_vote;
  SignVote chain_vote;

  const auto density = [&spec](const BispinorC& e, const BispinorC& n) {
    return evaluate_density(*spec.ir, e, n, spec.couplings);
  };

  for (int index = 0; index < n_samples; ++index) {
    const SampleDraw d = draw_sample(seed, index);
    bool sample_nonzero = true;

    const auto add_row = [&report](const std::string& check, const std::string& digest, C lhs,
                                   C rhs, double deviation, bool degenerate_eligible = true) {
      SampleRow row;
      row.digest = digest;
      row.check = check;
      row.lhs = lhs.real();
      row.rhs = rhs.real();
      row.deviation = deviation;
      // A row is degenerate when both densities vanish, so it constrains the
      // magnitude but not the sign. Gap rows compare residuals, not densities.
      row.degenerate = degenerate_eligible && std::abs(lhs) < 1e-12 && std::abs(rhs) < 1e-12;
      if (row.degenerate) ++report.degenerate_rows;
      report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
      report.per_sample.push_back(std::move(row));
    };

    {
      const C lhs = density(d.pure_left_e, d.pure_left_n);
      const C rhs = density(apply_parity_state(d.pure_left_e, {}).first,
                            apply_parity_state(d.pure_left_n, {}).first);
      add_row("parity_projected", d.digest, lhs, rhs, std::abs(rhs - sp * lhs));
    }
    {
      const C lhs = density(d.super_e, d.super_n);
      const C rhs = density(apply_parity_state(d.super_e, {}).first,
                            apply_parity_state(d.super_n, {}).first);
      add_row("parity_superposition", d.digest, lhs, rhs, std::abs(rhs - sp * lhs));
      parity_vote.offer(sp * lhs.real(), rhs.real());
      if (std::abs(lhs) < 1e-12) sample_nonzero = false;
    }
    {
      const C lhs = density(d.pure_left_e, d.pure_left_n);
      const C rhs = density(build_phi(d.pure_left_e), build_phi(d.pure_left_n));
      add_row("chain_projected", d.digest, lhs, rhs, std::abs(rhs - st * lhs));
    }
    {
      const C lhs = density(d.super_e, d.super_n);
      const C rhs = density(apply_time_reversal_state(d.super_e, {}).first,
                            apply_time_reversal_state(d.super_n, {}).first);
      add_row("motion_reversal_superposition", d.digest, lhs, rhs, std::abs(rhs - st * lhs));
      chain_vote.offer(st * lhs.real(), rhs.real());
      if (std::abs(lhs) < 1e-12) sample_nonzero = false;
    }
    {
      const C lhs = density(d.super_e, d.super_n);
      const C rhs = density(half_turn_y * d.super_e, half_turn_y * d.super_n);
      add_row("half_turn_invariance", d.digest, lhs, rhs, std::abs(rhs - lhs));
    }
    {
      const double gap_e = max_abs_diff(half_turn_y * d.pure_left_e, build_phi(d.pure_left_e));
      const double gap_n = max_abs_diff(half_turn_y * d.pure_left_n, build_phi(d.pure_left_n));
      add_row("half_turn_reaches_mirror", d.digest, C(gap_e), C(gap_n), std::max(gap_e, gap_n),
              false);
    }
    if (spec.diagonal_forced_zero) {
      const C projected = density(d.pure_left_e, d.pure_left_n);
      add_row("projected_density_vanishes", d.digest, projected, C(0.0), std::abs(projected));
      const C diagonal = density(d.wave_e, d.wave_n);
      add_row("plane_wave_diagonal_vanishes", d.digest, diagonal, C(0.0), std::abs(diagonal));
    }

    if (sample_nonzero) ++report.nonzero_samples;
  }

  report.measured_parity_sign = parity_vote.sign == 0 ? 0 : parity_vote.sign * spec.parity_sign;
  report.measured_chain_sign = chain_vote.sign == 0 ? 0 : chain_vote.sign * spec.chain_sign;
  report.passed = report.max_abs_deviation <= report.tolerance;
  return report;
}

}  // namespace

CheckReport run_nc_check(std::uint64_t seed, int n_samples, double tolerance) {
  CaseSpec spec;
  spec.case_name = "neutral_current_axial_vector";
  spec.ir = find_builtin("H_AV");
  spec.couplings = {{"GF", C(1.0)}};
  spec.parity_sign = -1;
  spec.chain_sign = +1;
  spec.diagonal_forced_zero = false;
  return run_case(spec, seed, n_samples, tolerance);
}

CheckReport run_axion_check(std::uint64_t seed, int n_samples, double tolerance) {
  CaseSpec spec;
  spec.case_name = "pseudoscalar_mediator";
  spec.ir = find_builtin("H_ax");
  spec.couplings = {{"Ka", C(1.0)}};
  spec.parity_sign = -1;
  spec.chain_sign = -1;
  spec.diagonal_forced_zero = true;
  return run_case(spec, seed, n_samples, tolerance);
}

}  // namespace chiralkit
