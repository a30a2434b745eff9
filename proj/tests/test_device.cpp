#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sngqc/device.hpp"
#include "sngqc/dynamics.hpp"
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

TEST_CASE("zero-amplitude schedule yields the zero Hamiltonian") {
  PulseSchedule sched;
  PulseSegment seg;
  seg.envelope = Envelope::Constant;
  seg.peak_amplitude = 0.0;
  seg.detuning = 0.0;
  seg.duration = 30e-9;
  sched.segments.push_back(seg);
  const auto traj = single_qubit_trajectory(sched, paper_device(), false);
  for (double t : {0.0, 10e-9, 30e-9}) {
    CHECK(traj(t).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("detuning segment matches the analytic block structure") {
  GateParams gp{kPi / 2, 0.0, kPi / 2, Scheme::SNGQC};
  const auto tp = paper_device();
  const auto sched = sngqc_schedule(gp, tp.omega_max, tp.delta);
  const auto traj = single_qubit_trajectory(sched, tp, true);
  const Matrix h = traj(5e-9);  // inside segment 2 (first segment is empty)
  CHECK(std::abs(h(0, 0).real() - tp.delta / 2) < 1e-6);
  CHECK(std::abs(h(1, 1).real() + tp.delta / 2) < 1e-6);
  CHECK(std::abs(h(0, 1)) < 1e-12);
  CHECK(std::abs(h(2, 2).real() + tp.alpha + tp.delta / 2) < 1e-6);
}

TEST_CASE("trajectory samples stay Hermitian") {
  GateParams gp{kPi / 4, 1.1, kPi, Scheme::SNGQC};
  const auto tp = paper_device();
  const auto sched = drag_augment(sngqc_schedule(gp, tp.omega_max, tp.delta), tp.alpha);
  const auto traj = single_qubit_trajectory(sched, tp, true);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, traj.total_duration());
  for (int i = 0; i < 200; ++i) {
    const Matrix h = traj(u(rng));
    CHECK(hermiticity_error(h) < 1e-12 * (1.0 + h.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("collapse operators have the stated matrix elements") {
  const auto channels = collapse_channels(paper_device());
  const Vector two = basis_ket(3, 2);
  const Vector mapped = channels[0].op * two;
  CHECK(std::abs(mapped(1) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(channels[1].op(0, 0)) < 1e-15);
  CHECK(std::abs(channels[1].op(1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(channels[1].op(2, 2) - 2.0) < 1e-15);
}

TEST_CASE("decay channel reaches 1/e population at t = 1/kappa") {
  auto tp = paper_device();
  const double kappa = tp.kappa1;
  std::vector<HamiltonianTrajectory::Piece> pieces;
  pieces.push_back({0.0, 1.0 / kappa, [](double) { return Matrix::Zero(3, 3); }});
  const HamiltonianTrajectory traj(3, std::move(pieces));
  const auto channels = collapse_channels(tp);
  const Matrix rho_t =
      lindblad_evolve(projector(basis_ket(3, 1)), traj, {channels[0]}, 1.0 / kappa / 40000);
  CHECK(std::abs(rho_t(1, 1).real() - std::exp(-1.0)) < 1e-6);
}

TEST_CASE("bessel_j1 against the brute-force series and the C++17 special function") {
  // Independent oracle: direct series evaluation with long doubles.
  auto oracle = [](double x) {
    long double half = static_cast<long double>(x) / 2.0L;
    long double term = half, sum = half;
    for (int k = 1; k < 40; ++k) {
      term *= -half * half / (static_cast<long double>(k) * (k + 1));
      sum += term;
    }
    return static_cast<double>(sum);
  };
  CHECK(std::abs(bessel_j1(1.2) - 0.4982890575672156) < 1e-12);
  for (double x = -3.0; x <= 3.0; x += 0.125) {
    CHECK(std::abs(bessel_j1(x) - oracle(x)) < 1e-12);
    CHECK(std::abs(bessel_j1(x) - std::cyl_bessel_j(1, std::abs(x)) * (x < 0 ? -1.0 : 1.0)) <
          1e-12);
  }
}

TEST_CASE("effective coupling reproduces the operating point") {
  CHECK(effective_coupling(kTwoPi * 10e6, 0.0) == 0.0);
  const double gp = effective_coupling(kTwoPi * 10e6, 1.2);
  CHECK(std::abs(gp - kTwoPi * 14.0937e6) < kTwoPi * 0.01e6);
  CHECK(std::abs(gp - kTwoPi * 14e6) < 0.02 * kTwoPi * 14e6);  // within 2% of 2pi x 14 MHz
}

TEST_CASE("effective two-qubit Hamiltonian structure") {
  auto cp = paper_pair(0.0);
  cp.varphi = -kPi / 2;
  const Matrix h = effective_two_qubit_hamiltonian(cp);
  const double gp = effective_coupling(cp.g, cp.beta);
  CHECK(max_abs_diff(h, Matrix(0.5 * gp * pauli_x())) < 1e-9);

  auto cp2 = paper_pair();
  const Matrix h2 = effective_two_qubit_hamiltonian(cp2);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h2);
  const double gap = es.eigenvalues()(1) - es.eigenvalues()(0);
  CHECK(gap == doctest::Approx(std::sqrt(cp2.deltap * cp2.deltap + gp * gp)).epsilon(1e-12));
}

TEST_CASE("zero coupling and zero modulation behave as expected") {
  auto cp = paper_pair(0.0);
  cp.g = 0.0;
  const auto traj = coupled_trajectory(cp, [](double) { return 1.2; }, 100e-9);
  CHECK(traj(37e-9).cwiseAbs().maxCoeff() == 0.0);

  // Modulation off: the bare rotating terms time-average to < 1% of g.
  auto cp2 = paper_pair(0.0);
  const auto traj2 = coupled_trajectory(cp2, [](double) { return 0.0; }, 100e-9);
  Matrix avg = Matrix::Zero(9, 9);
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    avg += traj2(100e-9 * (i + 0.5) / n);
  }
  avg /= static_cast<double>(n);
  CHECK(avg.cwiseAbs().maxCoeff() < 0.01 * cp2.g);
}

TEST_CASE("effective model matches the full pair transfer within 2 percent") {
  // Compared where the transfer completes (half and full Rabi period); the
  // instantaneous mid-swing populations carry a few percent of fast dressing
  // that averages out over the cycle.
  auto cp = paper_pair(0.0);
  const double gp = effective_coupling(cp.g, cp.beta);
  const double period = kTwoPi / gp;
  const auto full = coupled_trajectory(cp, [&](double) { return cp.beta; }, period);
  const Matrix heff = effective_two_qubit_hamiltonian(cp);

  Vector psi = basis_ket(9, 4);  // |11>
  for (double t : {period / 2.0, period}) {
    const Matrix u_full = propagate_unitary(full, 0.0, t, 2e-12);
    const Vector evolved = u_full * psi;
    const Matrix u_eff = hermitian_propagator(heff, t);
    const double p02_full = std::norm(evolved(2));
    const double p02_eff = std::norm(u_eff(1, 0));
    CHECK(std::abs(p02_full - p02_eff) < 0.02);
    const double p11_full = std::norm(evolved(4));
    const double p11_eff = std::norm(u_eff(0, 0));
    CHECK(std::abs(p11_full - p11_eff) < 0.02);
  }
}

TEST_CASE("|00> is exactly decoupled") {
  const auto plan = two_qubit_plan(Scheme::SNGQC, kPi / 2, paper_pair());
  const auto traj = two_qubit_trajectory(plan);
  std::mt19937_64 rng(47);
  std::normal_distribution<double> n(0.0, 1.0);
  Vector psi(9);
  for (int i = 0; i < 9; ++i) {
    psi(i) = Complex{n(rng), n(rng)};
  }
  psi.normalize();
  const Complex a00 = psi(0);
  const Matrix u = propagate_unitary(traj, 0.0, traj.total_duration(), 5e-12);
  CHECK(std::abs((u * psi)(0) - a00) < 1e-10);
}

TEST_CASE("two-qubit plan geometry") {
  const auto cp = paper_pair();
  const auto plan = two_qubit_plan(Scheme::SNGQC, kPi / 2, cp);
  REQUIRE(plan.effective.segments.size() == 3);
  const double gp = effective_coupling(cp.g, cp.beta);
  CHECK(plan.effective.segments[0].area() == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(plan.effective.segments[2].area() == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(plan.effective.segments[1].duration ==
        doctest::Approx((kPi / 2) / cp.deltap).epsilon(1e-12));
  // Constant-envelope coupling segments reproduce the ~44 ns total.
  CHECK(plan.duration() == doctest::Approx(2 * (kPi / 2) / gp + (kPi / 2) / cp.deltap));
  CHECK(plan.duration() > 43e-9);
  CHECK(plan.duration() < 45e-9);

  const auto slice = two_qubit_plan(Scheme::NGQC_A, kPi / 2, paper_pair(0.0));
  CHECK(slice.effective.segments.size() == 2);
  CHECK(slice.duration() > plan.duration());
}

TEST_CASE("composite plan realizes the control phase on the computational block") {
  const auto plan = two_qubit_plan(Scheme::SNGQC, kPi / 2, paper_pair());
  const auto traj = two_qubit_trajectory(plan);
  const Matrix u = propagate_unitary(traj, 0.0, traj.total_duration(), 2e-12);
  const auto& comp = computational_indices();
  const Matrix u2 = ideal_cphase(kPi / 2).matrix;
  // |11> phase lands on e^{-i pi/4} up to residual rotating-term dust.
  const Complex u11 = u(comp[3], comp[3]);
  CHECK(std::abs(u11 - u2(3, 3)) < 0.05);
  CHECK(std::abs(u(comp[0], comp[0]) - 1.0) < 1e-9);
  CHECK(std::abs(std::arg(u11) - (-kPi / 4)) < 0.05);
}
