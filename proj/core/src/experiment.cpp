#include "sngqc/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "sngqc/states.hpp"
#include "sngqc/threading.hpp"

namespace sngqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kSampleSpacing = 0.5e-9;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::vector<std::string> base_metadata(const ExperimentConfig& cfg) {
  std::vector<std::string> md;
  md.push_back("scheme = " + to_string(cfg.gate.scheme));
  md.push_back("gamma_pi = " + fmt(cfg.gate.gamma / kPi));
  if (cfg.mode == RunMode::SingleQubit) {
    md.push_back("theta_pi = " + fmt(cfg.gate.theta / kPi));
    md.push_back("phi_pi = " + fmt(cfg.gate.phi / kPi));
    md.push_back("omega_max_mhz = " + fmt(cfg.transmon.omega_max / kTwoPi / 1e6));
    md.push_back("delta_mhz = " + fmt(cfg.transmon.delta / kTwoPi / 1e6));
    md.push_back("alpha_mhz = " + fmt(cfg.transmon.alpha / kTwoPi / 1e6));
  } else {
    md.push_back("zeta_mhz = " + fmt(cfg.coupled.zeta / kTwoPi / 1e6));
    md.push_back("g_mhz = " + fmt(cfg.coupled.g / kTwoPi / 1e6));
    md.push_back("beta = " + fmt(cfg.coupled.beta));
    md.push_back("deltap_mhz = " + fmt(cfg.coupled.deltap / kTwoPi / 1e6));
    md.push_back("comparator_zeta_mhz = " + fmt(cfg.comparator_zeta / kTwoPi / 1e6));
  }
  md.push_back("kappa1_khz = " + fmt(cfg.transmon.kappa1 / kTwoPi / 1e3));
  md.push_back("kappa2_khz = " + fmt(cfg.transmon.kappa2 / kTwoPi / 1e3));
  md.push_back("dt_ps = " + fmt(cfg.dt * 1e12));
  md.push_back(std::string("drag = ") + (cfg.drag ? "on (all schemes)" : "off"));
  return md;
}

SimOptions options_from(const ExperimentConfig& cfg, int workers) {
  SimOptions opts;
  opts.dt = cfg.dt;
  opts.n_states = cfg.resolved_n_states();
  opts.with_drag = cfg.drag;
  opts.three_level = true;
  opts.workers = workers;
  return opts;
}

GateParams comparator_gate(const GateParams& base, Scheme scheme) {
  GateParams gp = base;
  gp.scheme = scheme;
  gp.gamma = base.gamma / 2.0;  // orange-slice operator is exp(-i gamma n.sigma)
  return gp;
}

void emit_metadata(const std::vector<std::string>& md, std::ostream& out) {
  for (const auto& line : md) {
    out << "# " << line << "\n";
  }
}

void dynamics_single(const ExperimentConfig& cfg, std::ostream& out) {
  const GateParams& gp = cfg.gate;
  const TransmonParams& tp = cfg.transmon;
  PulseSchedule sched = schedule_for(gp, tp);
  if (cfg.drag) {
    sched = drag_augment(sched, tp.alpha);
  }
  const auto traj = single_qubit_trajectory(sched, tp, true);
  const auto channels = collapse_channels(tp);
  Vector psi0(2);
  psi0 << std::cos(cfg.init_theta), std::sin(cfg.init_theta);

  // Ideal two-level reference on the same step grid.
  const PulseSchedule bare = schedule_for(gp, tp);
  TransmonParams ideal_dev = tp;
  ideal_dev.kappa1 = ideal_dev.kappa2 = 0.0;
  const auto ideal_traj = single_qubit_trajectory(bare, ideal_dev, false);
  std::vector<Vector> ideal_states;
  std::vector<double> sample_times;
  double next_sample = 0.0;
  propagate_unitary_observed(ideal_traj, 0.0, ideal_traj.total_duration(), cfg.dt,
                             [&](double t, const Matrix& u) {
                               if (t >= next_sample ||
                                   t >= ideal_traj.total_duration() - 1e-15) {
                                 ideal_states.push_back(u * psi0);
                                 sample_times.push_back(t);
                                 next_sample += kSampleSpacing;
                               }
                             });

  emit_metadata(base_metadata(cfg), out);
  out << "t_ns,P0,P1,P2,F\n";
  Vector start = Vector::Zero(3);
  start.head(2) = psi0;
  std::size_t idx = 0;
  lindblad_evolve(projector(start), traj, channels, cfg.dt, [&](double t, const Matrix& rho) {
    if (idx < sample_times.size() && t >= sample_times[idx] - 1e-15) {
      const double f = state_fidelity(rho, ideal_states[idx]);
      out << fmt(t * 1e9) << ',' << fmt(rho(0, 0).real()) << ',' << fmt(rho(1, 1).real()) << ','
          << fmt(rho(2, 2).real()) << ',' << fmt(f) << "\n";
      ++idx;
    }
  });
}

void dynamics_two(const ExperimentConfig& cfg, std::ostream& out) {
  const auto plan = two_qubit_plan(cfg.gate.scheme, cfg.gate.gamma, cfg.coupled);
  const auto traj = two_qubit_trajectory(plan);
  const auto channels = coupled_collapse_channels(cfg.transmon);

  // Ideal reference: the effective two-level model of the plan, basis
  // {|11>, |02>}, evolved on the same grid.
  TransmonParams eff_dev;
  eff_dev.omega_max = plan.effective.max_peak_amplitude();
  eff_dev.alpha = 1.0;
  const auto eff_traj = single_qubit_trajectory(plan.effective, eff_dev, false);
  Vector eff0(2);
  eff0 << 1.0, 0.0;  // |11>
  std::vector<Vector> ideal_states;
  std::vector<double> sample_times;
  double next_sample = 0.0;
  propagate_unitary_observed(eff_traj, 0.0, eff_traj.total_duration(), cfg.dt,
                             [&](double t, const Matrix& u) {
                               if (t >= next_sample ||
                                   t >= eff_traj.total_duration() - 1e-15) {
                                 ideal_states.push_back(u * eff0);
                                 sample_times.push_back(t);
                                 next_sample += kSampleSpacing;
                               }
                             });

  emit_metadata(base_metadata(cfg), out);
  out << "t_ns,P11,P02,F\n";
  Matrix rho0 = Matrix::Zero(9, 9);
  rho0(4, 4) = 1.0;  // |11><11|
  std::size_t idx = 0;
  lindblad_evolve(rho0, traj, channels, cfg.dt, [&](double t, const Matrix& rho) {
    if (idx < sample_times.size() && t >= sample_times[idx] - 1e-15) {
      Vector target = Vector::Zero(9);
      target(4) = ideal_states[idx](0);
      target(2) = ideal_states[idx](1);
      const double f = state_fidelity(rho, target);
      out << fmt(t * 1e9) << ',' << fmt(rho(4, 4).real()) << ',' << fmt(rho(2, 2).real()) << ','
          << fmt(f) << "\n";
      ++idx;
    }
  });
}

}  // namespace

void run_state_dynamics(const ExperimentConfig& cfg, std::ostream& out) {
  if (cfg.sweep != SweepKind::None) {
    throw std::invalid_argument("run_state_dynamics requires sweep = none");
  }
  if (cfg.mode == RunMode::SingleQubit) {
    dynamics_single(cfg, out);
  } else {
    dynamics_two(cfg, out);
  }
}

SweepResult run_decoherence_sweep(const ExperimentConfig& cfg, int workers) {
  if (cfg.sweep != SweepKind::Kappa) {
    throw std::invalid_argument("run_decoherence_sweep requires sweep = kappa");
  }
  if (cfg.gate.scheme != Scheme::SNGQC) {
    throw std::invalid_argument("decoherence sweeps take the short-path gate as the base");
  }
  SweepResult result;
  result.metadata = base_metadata(cfg);
  result.metadata.push_back("sweep = kappa (values in kHz)");
  result.metadata.push_back("n_states = " + std::to_string(cfg.resolved_n_states()));

  const int n = cfg.sweep_n;
  std::vector<double> kappas(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    kappas[static_cast<std::size_t>(i)] =
        cfg.sweep_lo + (cfg.sweep_hi - cfg.sweep_lo) * i / (n - 1);
  }

  if (cfg.mode == RunMode::SingleQubit) {
    const std::vector<GateParams> gates = {cfg.gate, comparator_gate(cfg.gate, Scheme::NGQC_A)};
    std::vector<FidelityReport> reports(static_cast<std::size_t>(2 * n));
    parallel_for(2 * n, workers, [&](int job) {
      const int scheme_idx = job / n;
      const int point = job % n;
      SimOptions opts = options_from(cfg, 1);
      opts.kappa_override = kappas[static_cast<std::size_t>(point)];
      reports[static_cast<std::size_t>(job)] =
          gate_fidelity_single(gates[static_cast<std::size_t>(scheme_idx)], cfg.transmon, opts);
    });
    for (int scheme_idx = 0; scheme_idx < 2; ++scheme_idx) {
      for (int point = 0; point < n; ++point) {
        const auto& rep = reports[static_cast<std::size_t>(scheme_idx * n + point)];
        result.rows.push_back(SweepRow{kappas[static_cast<std::size_t>(point)] / kTwoPi / 1e3,
                                       rep.gate_fidelity, rep.leakage, rep.duration,
                                       to_string(gates[static_cast<std::size_t>(scheme_idx)].scheme)});
      }
    }
    return result;
  }

  // Two-qubit sweep: short path at the configured zeta, orange-slice
  // comparator at its own operating point.
  CoupledParams cp_cmp = CoupledParams::make(cfg.comparator_zeta, cfg.coupled.alpha_a,
                                             cfg.coupled.alpha_b, cfg.coupled.g,
                                             cfg.coupled.beta, cfg.coupled.varphi, 0.0);
  const std::vector<TwoQubitPlan> plans = {
      two_qubit_plan(Scheme::SNGQC, cfg.gate.gamma, cfg.coupled),
      two_qubit_plan(Scheme::NGQC_A, cfg.gate.gamma, cp_cmp)};
  std::vector<FidelityReport> reports(static_cast<std::size_t>(2 * n));
  parallel_for(2 * n, workers, [&](int job) {
    const int plan_idx = job / n;
    const int point = job % n;
    SimOptions opts = options_from(cfg, 1);
    opts.kappa_override = kappas[static_cast<std::size_t>(point)];
    reports[static_cast<std::size_t>(job)] =
        gate_fidelity_two(plans[static_cast<std::size_t>(plan_idx)], cfg.transmon, opts);
  });
  const char* names[2] = {"SNGQC", "NGQC_A"};
  for (int plan_idx = 0; plan_idx < 2; ++plan_idx) {
    for (int point = 0; point < n; ++point) {
      const auto& rep = reports[static_cast<std::size_t>(plan_idx * n + point)];
      result.rows.push_back(SweepRow{kappas[static_cast<std::size_t>(point)] / kTwoPi / 1e3,
                                     rep.gate_fidelity, rep.leakage, rep.duration,
                                     names[plan_idx]});
    }
  }
  return result;
}

SweepResult run_error_sweep(const ExperimentConfig& cfg, int workers) {
  if (cfg.sweep != SweepKind::RabiEps && cfg.sweep != SweepKind::DetuningDelta) {
    throw std::invalid_argument("run_error_sweep requires sweep = rabi_eps or detuning_delta");
  }
  if (cfg.mode != RunMode::SingleQubit) {
    throw std::invalid_argument("error sweeps are single-qubit experiments");
  }
  if (cfg.gate.scheme != Scheme::SNGQC) {
    throw std::invalid_argument("error sweeps take the short-path gate as the base");
  }
  SweepResult result;
  result.metadata = base_metadata(cfg);
  result.metadata.push_back("sweep = " + to_string(cfg.sweep) + " (fraction)");
  result.metadata.push_back("n_states = " + std::to_string(cfg.resolved_n_states()));

  const int n = cfg.sweep_n;
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        cfg.sweep_lo + (cfg.sweep_hi - cfg.sweep_lo) * i / (n - 1);
  }
  const std::vector<GateParams> gates = {cfg.gate, comparator_gate(cfg.gate, Scheme::NGQC_A),
                                         comparator_gate(cfg.gate, Scheme::NGQC_B)};
  std::vector<FidelityReport> reports(static_cast<std::size_t>(3 * n));
  parallel_for(3 * n, workers, [&](int job) {
    const int scheme_idx = job / n;
    const int point = job % n;
    SimOptions opts = options_from(cfg, 1);
    if (cfg.sweep == SweepKind::RabiEps) {
      opts.errors.rabi_epsilon = values[static_cast<std::size_t>(point)];
    } else {
      opts.errors.detuning_delta = values[static_cast<std::size_t>(point)];
    }
    reports[static_cast<std::size_t>(job)] =
        gate_fidelity_single(gates[static_cast<std::size_t>(scheme_idx)], cfg.transmon, opts);
  });
  for (int scheme_idx = 0; scheme_idx < 3; ++scheme_idx) {
    for (int point = 0; point < n; ++point) {
      const auto& rep = reports[static_cast<std::size_t>(scheme_idx * n + point)];
      result.rows.push_back(SweepRow{values[static_cast<std::size_t>(point)], rep.gate_fidelity,
                                     rep.leakage, rep.duration,
                                     to_string(gates[static_cast<std::size_t>(scheme_idx)].scheme)});
    }
  }
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  emit_metadata(result.metadata, out);
  out << "sweep_value,fidelity,leakage,duration_ns,scheme\n";
  for (const auto& row : result.rows) {
    out << fmt(row.sweep_value) << ',' << fmt(row.fidelity) << ',' << fmt(row.leakage) << ','
        << fmt(row.duration * 1e9) << ',' << row.scheme << "\n";
  }
}

SweepResult read_sweep_csv(std::istream& in) {
  SweepResult result;
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    if (line[0] == '#') {
      result.metadata.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    if (!header_seen) {
      if (line != "sweep_value,fidelity,leakage,duration_ns,scheme") {
        throw std::runtime_error("unexpected csv header at line " + std::to_string(lineno));
      }
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    SweepRow row;
    std::string field;
    std::getline(ls, field, ',');
    row.sweep_value = std::stod(field);
    std::getline(ls, field, ',');
    row.fidelity = std::stod(field);
    std::getline(ls, field, ',');
    row.leakage = std::stod(field);
    std::getline(ls, field, ',');
    row.duration = std::stod(field) * 1e-9;
    std::getline(ls, row.scheme, ',');
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace sngqc
