#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sngqc/experiment.hpp"
#include "sngqc/gates.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  double dt_ps = 0.0;           // > 0 overrides the config
  std::string scheme_override;  // non-empty overrides the config
  int parallel = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "experiment config file")->required();
  cmd->add_option("--out", args.out_path,
                  "output CSV path (default: the config's output_path, or stdout)");
  cmd->add_option("--dt", args.dt_ps, "integrator step in ps (overrides config)");
  cmd->add_option("--scheme", args.scheme_override, "gate scheme (overrides config)");
  cmd->add_option("--parallel", args.parallel, "worker threads (default: hardware)");
}

sngqc::ExperimentConfig load(CommonArgs& args, sngqc::RunMode mode) {
  auto cfg = sngqc::parse_config(args.config_path, mode);
  if (args.dt_ps > 0) {
    cfg.dt = args.dt_ps * 1e-12;
  }
  if (!args.scheme_override.empty()) {
    cfg.gate.scheme = sngqc::scheme_from_string(args.scheme_override);
  }
  if (args.out_path.empty()) {
    args.out_path = cfg.output_path;
  }
  return cfg;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << content;
}

int run_verify(CommonArgs& args) {
  using namespace sngqc;
  auto cfg = load(args, RunMode::SingleQubit);
  std::ostringstream report;
  char buf[200];

  auto check_schedule = [&](const PulseSchedule& sched, const GateParams& gp,
                            const std::string& label) {
    const auto cyc = verify_cyclic(sched, gp);
    const double pt = verify_parallel_transport(sched, gp, 1000);
    std::snprintf(buf, sizeof(buf),
                  "%-24s cyclic_deviation=%.3e phase_error=%.3e transport_integrand=%.3e\n",
                  label.c_str(), cyc.projector_deviation, cyc.phase_error, pt);
    report << buf;
  };

  const PulseSchedule sched = schedule_for(cfg.gate, cfg.transmon);
  check_schedule(sched, cfg.gate, "configured gate");

  if (cfg.gate.scheme == Scheme::SNGQC) {
    PulseSchedule bad_area = sched;
    bad_area.segments[2].duration *= 2.0 / 3.0;  // area pi/2 -> pi/3
    check_schedule(bad_area, cfg.gate, "corrupted area (ctrl)");
    PulseSchedule bad_phase = sched;
    bad_phase.segments[1].phase_eta = cfg.gate.phi;  // drop the gamma phase step
    bad_phase.segments[2].phase_eta = cfg.gate.phi;
    const double step = std::remainder(cfg.gate.gamma - kPi / 2, 2 * kPi);
    check_schedule(bad_phase, cfg.gate,
                   std::abs(step) < 1e-9 ? "corrupted phase (no-op at this gamma)"
                                         : "corrupted phase (ctrl)");
  }

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst_cyc = 0.0, worst_phase = 0.0, worst_pt = 0.0;
  const int draws = 50;
  for (int i = 0; i < draws; ++i) {
    GateParams gp;
    gp.scheme = Scheme::SNGQC;
    gp.theta = u01(rng) * kPi / 2;
    gp.phi = u01(rng) * 2 * kPi;
    gp.gamma = 0.05 * kPi + u01(rng) * 1.9 * kPi;
    const PulseSchedule s = sngqc_schedule(gp, cfg.transmon.omega_max, cfg.transmon.delta);
    const auto cyc = verify_cyclic(s, gp);
    worst_cyc = std::max(worst_cyc, cyc.projector_deviation);
    worst_phase = std::max(worst_phase, cyc.phase_error);
    worst_pt = std::max(worst_pt, verify_parallel_transport(s, gp, 200));
  }
  std::snprintf(buf, sizeof(buf),
                "%d random gates (worst)  cyclic_deviation=%.3e phase_error=%.3e "
                "transport_integrand=%.3e\n",
                draws, worst_cyc, worst_phase, worst_pt);
  report << buf;

  write_output(args.out_path, report.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pulse-level simulator for short-path geometric gates on transmons"};
  app.require_subcommand(1);

  CommonArgs dyn_args, kappa_args, err_args, two_args, verify_args;

  auto* dyn = app.add_subcommand("dynamics", "state populations and fidelity vs time");
  add_common(dyn, dyn_args);

  auto* swk = app.add_subcommand("sweep-kappa", "gate fidelity vs uniform decoherence rate");
  add_common(swk, kappa_args);

  auto* swe = app.add_subcommand("sweep-error", "gate fidelity vs Rabi or detuning error");
  add_common(swe, err_args);

  auto* two = app.add_subcommand("two-qubit", "control-phase gate dynamics / fidelity / sweep");
  add_common(two, two_args);

  auto* ver = app.add_subcommand("verify", "cyclic-evolution and parallel-transport checks");
  add_common(ver, verify_args);

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace sngqc;
    if (dyn->parsed()) {
      auto cfg = load(dyn_args, RunMode::SingleQubit);
      std::ostringstream os;
      run_state_dynamics(cfg, os);
      write_output(dyn_args.out_path, os.str());
    } else if (swk->parsed()) {
      auto cfg = load(kappa_args, RunMode::SingleQubit);
      auto result = run_decoherence_sweep(cfg, kappa_args.parallel);
      std::ostringstream os;
      write_sweep_csv(result, os);
      write_output(kappa_args.out_path, os.str());
    } else if (swe->parsed()) {
      auto cfg = load(err_args, RunMode::SingleQubit);
      auto result = run_error_sweep(cfg, err_args.parallel);
      std::ostringstream os;
      write_sweep_csv(result, os);
      write_output(err_args.out_path, os.str());
    } else if (two->parsed()) {
      auto cfg = load(two_args, RunMode::TwoQubit);
      std::ostringstream os;
      if (cfg.sweep == SweepKind::Kappa) {
        auto result = run_decoherence_sweep(cfg, two_args.parallel);
        write_sweep_csv(result, os);
      } else {
        run_state_dynamics(cfg, os);
        const auto plan = two_qubit_plan(cfg.gate.scheme, cfg.gate.gamma, cfg.coupled);
        SimOptions opts;
        opts.dt = cfg.dt;
        opts.n_states = cfg.resolved_n_states();
        opts.workers = two_args.parallel;
        const auto rep = gate_fidelity_two(plan, cfg.transmon, opts);
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "# gate_fidelity = %.9g  leakage = %.9g  duration_ns = %.9g  n_states = %d\n",
                      rep.gate_fidelity, rep.leakage, rep.duration * 1e9, opts.n_states);
        os << buf;
      }
      write_output(two_args.out_path, os.str());
    } else if (ver->parsed()) {
      return run_verify(verify_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
