#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sngqc/gates.hpp"
#include "sngqc/states.hpp"

using namespace sngqc;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

TransmonParams paper_device() {
  TransmonParams tp;
  tp.omega_max = kTwoPi * 20e6;
  tp.delta = kTwoPi * 20e6;
  tp.alpha = kTwoPi * 220e6;
  tp.kappa1 = kTwoPi * 4e3;
  tp.kappa2 = kTwoPi * 4e3;
  return tp;
}

CoupledParams paper_pair(double deltap = kTwoPi * 30e6) {
  return CoupledParams::make(kTwoPi * 500e6, kTwoPi * 220e6, kTwoPi * 230e6, kTwoPi * 10e6,
                             1.2, 0.0, deltap);
}

}  // namespace

TEST_CASE("ideal gate matrices for the named gates") {
  {
    // S gate: gamma = pi/2, theta = 0.
    const auto g = ideal_single_gate(GateParams{0.0, 0.0, kPi / 2, Scheme::SNGQC});
    Matrix expected(2, 2);
    expected << std::exp(-kImag * kPi / 4.0), 0, 0, std::exp(kImag * kPi / 4.0);
    CHECK(max_abs_diff(g.matrix, expected) < 1e-15);
  }
  {
    // Hadamard: gamma = pi, theta = pi/4 -> -i H.
    const auto g = ideal_single_gate(GateParams{kPi / 4, 0.0, kPi, Scheme::SNGQC});
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    had /= std::sqrt(2.0);
    CHECK(max_abs_diff(g.matrix, Matrix(-kImag * had)) < 1e-15);
  }
  {
    const auto g = ideal_single_gate(GateParams{0.3, 0.4, 0.0, Scheme::SNGQC});
    CHECK(max_abs_diff(g.matrix, identity(2)) < 1e-15);
  }
  {
    // Orange-slice convention doubles the rotation angle.
    const auto a = ideal_single_gate(GateParams{kPi / 2, 0.0, kPi / 4, Scheme::NGQC_A});
    const auto b = ideal_single_gate(GateParams{kPi / 2, 0.0, kPi / 2, Scheme::SNGQC});
    CHECK(max_abs_diff(a.matrix, b.matrix) < 1e-15);
  }
}

TEST_CASE("control-phase matrices") {
  CHECK(max_abs_diff(ideal_cphase(0.0).matrix, identity(4)) < 1e-15);
  const auto u = ideal_cphase(kPi / 2).matrix;
  CHECK(std::abs(u(3, 3) - std::exp(-kImag * kPi / 4.0)) < 1e-15);
  const auto cz = ideal_cphase(2 * kPi).matrix;
  CHECK(std::abs(cz(3, 3) + 1.0) < 1e-12);
  CHECK(unitarity_error(ideal_cphase(1.234).matrix) < 1e-12);
}

TEST_CASE("cyclic evolution holds for valid schedules and phases match") {
  const auto tp = paper_device();
  {
    GateParams gp{0.0, 0.0, kPi / 4, Scheme::SNGQC};
    const auto rep = verify_cyclic(schedule_for(gp, tp), gp);
    CHECK(rep.projector_deviation < 1e-6);
    CHECK(rep.phase_error < 1e-6);  // phase on |mu+>=|0> equals e^{-i pi/8}
  }
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    GateParams gp{u01(rng) * kPi / 2, u01(rng) * 2 * kPi, 0.05 * kPi + u01(rng) * 1.9 * kPi,
                  Scheme::SNGQC};
    const auto rep = verify_cyclic(schedule_for(gp, tp), gp);
    CHECK(rep.projector_deviation < 1e-6);
    CHECK(rep.phase_error < 1e-6);
  }
}

TEST_CASE("corrupted third-segment area breaks cyclicity") {
  const auto tp = paper_device();
  GateParams gp{kPi / 3, 0.4, kPi / 2, Scheme::SNGQC};
  auto sched = schedule_for(gp, tp);
  sched.segments[2].duration *= 2.0 / 3.0;  // pi/2 -> pi/3 area
  const auto rep = verify_cyclic(sched, gp);
  CHECK(rep.projector_deviation > 1e-2);
}

TEST_CASE("parallel transport integrand vanishes on valid paths") {
  const auto tp = paper_device();
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    GateParams gp{u01(rng) * kPi / 2, u01(rng) * 2 * kPi, 0.05 * kPi + u01(rng) * 1.9 * kPi,
                  Scheme::SNGQC};
    CHECK(verify_parallel_transport(schedule_for(gp, tp), gp, 200) < 1e-6);
  }
  // The orange-slice path is geometric too.
  GateParams os{kPi / 3, 0.2, kPi / 4, Scheme::NGQC_A};
  CHECK(verify_parallel_transport(schedule_for(os, tp), os, 1000) < 1e-6);
}

TEST_CASE("dropping the gamma phase step breaks parallel transport") {
  const auto tp = paper_device();
  GateParams gp{kPi / 4, 0.0, 0.8 * kPi, Scheme::SNGQC};
  auto sched = schedule_for(gp, tp);
  sched.segments[1].phase_eta = gp.phi;
  sched.segments[2].phase_eta = gp.phi;
  CHECK(verify_parallel_transport(sched, gp, 1000) > 1e-2);
  CHECK(verify_cyclic(sched, gp).projector_deviation > 1e-2);
}

TEST_CASE("state fidelity basics") {
  const Vector target = basis_ket(2, 0);
  CHECK(state_fidelity(projector(basis_ket(3, 0)), target) == doctest::Approx(1.0));
  CHECK(state_fidelity(projector(basis_ket(3, 1)), target) == doctest::Approx(0.0));
}

TEST_CASE("noiseless two-level estimator returns unit fidelity") {
  auto tp = paper_device();
  tp.kappa1 = tp.kappa2 = 0.0;
  GateParams gp{kPi / 2, 0.0, kPi / 2, Scheme::SNGQC};
  SimOptions opts;
  opts.three_level = false;
  opts.with_drag = false;
  opts.n_states = 101;
  const auto rep = gate_fidelity_single(gp, tp, opts);
  CHECK(rep.gate_fidelity > 1.0 - 1e-8);
  CHECK(rep.leakage == 0.0);
  CHECK(rep.duration == doctest::Approx(62.5e-9));
}

TEST_CASE("matrix-unit reconstruction agrees with direct per-state simulation") {
  // The averaged estimator rebuilds arbitrary initial states from evolved
  // matrix units. Recompute that reconstruction here from public pieces and
  // pit it against the per-state path.
  const auto tp = paper_device();
  GateParams gp{0.0, 0.0, kPi / 2, Scheme::SNGQC};  // S gate
  SimOptions opts;

  const auto sched = drag_augment(schedule_for(gp, tp), tp.alpha);
  const auto traj = single_qubit_trajectory(sched, tp, true);
  const auto channels = collapse_channels(tp);
  Matrix e00 = Matrix::Zero(3, 3), e11 = Matrix::Zero(3, 3), e01 = Matrix::Zero(3, 3);
  e00(0, 0) = e11(1, 1) = e01(0, 1) = 1.0;
  const Matrix s00 = lindblad_evolve(e00, traj, channels, opts.dt);
  const Matrix s11 = lindblad_evolve(e11, traj, channels, opts.dt);
  const Matrix s01 = lindblad_evolve(e01, traj, channels, opts.dt);
  const Matrix ideal = ideal_single_gate(gp).matrix;

  for (double v : {0.0, 0.3, 1.1, 2.5}) {
    const double c = std::cos(v), s = std::sin(v);
    const Matrix rebuilt = c * c * s00 + s * s * s11 + c * s * (s01 + Matrix(s01.adjoint()));
    Vector psi0(2);
    psi0 << c, s;
    const double f_rebuilt = state_fidelity(rebuilt, ideal * psi0);
    const auto direct = simulate_state(gp, tp, psi0, opts);
    CHECK(f_rebuilt == doctest::Approx(direct.gate_fidelity).epsilon(1e-10));
  }
}

TEST_CASE("lindblad generator is linear on the two-qubit model") {
  const auto plan = two_qubit_plan(Scheme::SNGQC, kPi / 2, paper_pair());
  const auto traj = two_qubit_trajectory(plan);
  const auto channels = coupled_collapse_channels(paper_device());
  std::mt19937_64 rng(61);
  std::normal_distribution<double> n(0.0, 1.0);
  auto random_state = [&](int a, int b) {
    Vector psi = Vector::Zero(9);
    psi(a) = Complex{n(rng), n(rng)};
    psi(b) = Complex{n(rng), n(rng)};
    psi.normalize();
    return projector(psi);
  };
  const Matrix rho_a = random_state(1, 4);
  const Matrix rho_b = random_state(3, 4);
  const double dt = 2e-11;
  const Matrix mix = 0.3 * rho_a + 0.7 * rho_b;
  const Matrix lhs = lindblad_evolve(mix, traj, channels, dt);
  const Matrix rhs = 0.3 * lindblad_evolve(rho_a, traj, channels, dt) +
                     0.7 * lindblad_evolve(rho_b, traj, channels, dt);
  CHECK(max_abs_diff(lhs, rhs) < 1e-10);
}

TEST_CASE("two-qubit estimator sanity on the effective model and smoke grid") {
  const auto plan = two_qubit_plan(Scheme::SNGQC, kPi / 2, paper_pair());
  // Noiseless effective two-level model realizes the control phase exactly.
  TransmonParams eff;
  eff.omega_max = plan.effective.max_peak_amplitude();
  eff.alpha = 1.0;
  const auto eff_traj = single_qubit_trajectory(plan.effective, eff, false);
  const Matrix u = propagate_unitary(eff_traj, 0.0, eff_traj.total_duration(), 1e-12);
  CHECK(std::abs(u(0, 0) - std::exp(-kImag * kPi / 4.0)) < 1e-6);
  CHECK(std::abs(u(0, 1)) < 1e-6);
}
