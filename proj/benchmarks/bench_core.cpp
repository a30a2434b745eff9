#include <benchmark/benchmark.h>

#include <numbers>

#include "sngqc/device.hpp"
#include "sngqc/gates.hpp"
#include "sngqc/states.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

sngqc::TransmonParams paper_device() {
  sngqc::TransmonParams tp;
  tp.omega_max = kTwoPi * 20e6;
  tp.delta = kTwoPi * 20e6;
  tp.alpha = kTwoPi * 220e6;
  tp.kappa1 = kTwoPi * 4e3;
  tp.kappa2 = kTwoPi * 4e3;
  return tp;
}

sngqc::CoupledParams paper_pair() {
  return sngqc::CoupledParams::make(kTwoPi * 500e6, kTwoPi * 220e6, kTwoPi * 230e6,
                                    kTwoPi * 10e6, 1.2, 0.0, kTwoPi * 30e6);
}

void BM_ScheduleBuild(benchmark::State& state) {
  const sngqc::GateParams gp{kPi / 2, 0.0, kPi / 2, sngqc::Scheme::SNGQC};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sngqc::sngqc_schedule(gp, kTwoPi * 20e6, kTwoPi * 20e6));
  }
}
BENCHMARK(BM_ScheduleBuild);

void BM_BesselJ1(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    benchmark::DoNotOptimize(sngqc::bessel_j1(1.2 + x * 1e-9));
  }
}
BENCHMARK(BM_BesselJ1);

void BM_LindbladRx90(benchmark::State& state) {
  const auto tp = paper_device();
  const sngqc::GateParams gp{kPi / 2, 0.0, kPi / 2, sngqc::Scheme::SNGQC};
  const auto sched = sngqc::drag_augment(sngqc::sngqc_schedule(gp, tp.omega_max, tp.delta),
                                         tp.alpha);
  const auto traj = sngqc::single_qubit_trajectory(sched, tp, true);
  const auto channels = sngqc::collapse_channels(tp);
  sngqc::Vector start = sngqc::Vector::Zero(3);
  start(0) = 1.0;
  const auto rho0 = sngqc::projector(start);
  const double dt = state.range(0) * 1e-12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sngqc::lindblad_evolve(rho0, traj, channels, dt));
  }
  state.counters["steps"] = traj.total_duration() / dt;
}
BENCHMARK(BM_LindbladRx90)->Arg(5)->Arg(20);

void BM_PropagateTwoQubit(benchmark::State& state) {
  const auto plan = sngqc::two_qubit_plan(sngqc::Scheme::SNGQC, kPi / 2, paper_pair());
  const auto traj = sngqc::two_qubit_trajectory(plan);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sngqc::propagate_unitary(traj, 0.0, traj.total_duration(), 20e-12));
  }
}
BENCHMARK(BM_PropagateTwoQubit);

void BM_GateFidelitySmallGrid(benchmark::State& state) {
  const auto tp = paper_device();
  const sngqc::GateParams gp{0.0, 0.0, kPi / 2, sngqc::Scheme::SNGQC};
  sngqc::SimOptions opts;
  opts.n_states = 101;
  opts.dt = 20e-12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sngqc::gate_fidelity_single(gp, tp, opts));
  }
}
BENCHMARK(BM_GateFidelitySmallGrid);

}  // namespace

BENCHMARK_MAIN();
