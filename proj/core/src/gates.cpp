#include "sngqc/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sngqc/states.hpp"
#include "sngqc/threading.hpp"

namespace sngqc {

namespace {
constexpr double kPi = std::numbers::pi;

Matrix rotation(double theta, double phi, double half_angle) {
  Matrix ns(2, 2);
  ns << std::cos(theta), std::sin(theta) * std::exp(-kImag * phi),
      std::sin(theta) * std::exp(kImag * phi), -std::cos(theta);
  return std::cos(half_angle) * Matrix::Identity(2, 2) - kImag * std::sin(half_angle) * ns;
}

/// Two-level drive model of a schedule, no device constants involved.
HamiltonianTrajectory ideal_two_level(const PulseSchedule& sched) {
  TransmonParams tp;
  tp.omega_max = std::max(sched.max_peak_amplitude(), 1.0);
  tp.alpha = 1.0;
  return single_qubit_trajectory(sched, tp, false);
}

Vector embed(const Vector& v, int dim) {
  Vector out = Vector::Zero(dim);
  out.head(v.size()) = v;
  return out;
}

}  // namespace

IdealGate ideal_single_gate(const GateParams& gp) {
  gp.validate();
  const double half = gp.scheme == Scheme::SNGQC ? gp.gamma / 2.0 : gp.gamma;
  return IdealGate{rotation(gp.theta, gp.phi, half), to_string(gp.scheme)};
}

IdealGate ideal_cphase(double gamma_p) {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = std::exp(-kImag * gamma_p / 2.0);
  return IdealGate{m, "CPHASE"};
}

PulseSchedule schedule_for(const GateParams& gp, const TransmonParams& tp) {
  return gp.scheme == Scheme::SNGQC ? sngqc_schedule(gp, tp.omega_max, tp.delta)
                                    : ngqc_schedule(gp, tp.omega_max);
}

CyclicReport verify_cyclic(const PulseSchedule& sched, const GateParams& gp, double dt) {
  const auto traj = ideal_two_level(sched);
  const Matrix u = propagate_unitary(traj, 0.0, traj.total_duration(), dt);
  const auto [plus, minus] = dressed_states(gp.theta, gp.phi);
  const double half = gp.scheme == Scheme::SNGQC ? gp.gamma / 2.0 : gp.gamma;
  CyclicReport rep{0.0, 0.0};
  const Vector* mus[2] = {&plus, &minus};
  for (int m = 0; m < 2; ++m) {
    const Matrix p = projector(*mus[m]);
    rep.projector_deviation =
        std::max(rep.projector_deviation, max_abs_diff(u * p * u.adjoint(), p));
    const Complex expected = std::exp((m == 0 ? -kImag : kImag) * half);
    const Complex got = (mus[m]->adjoint() * u * (*mus[m]))(0);
    rep.phase_error = std::max(rep.phase_error, std::abs(got - expected));
  }
  return rep;
}

double verify_parallel_transport(const PulseSchedule& sched, const GateParams& gp, int samples,
                                 double dt) {
  if (samples < 1) {
    throw std::invalid_argument("verify_parallel_transport: samples must be >= 1");
  }
  const auto traj = ideal_two_level(sched);
  const double total = traj.total_duration();
  const double norm = sched.max_peak_amplitude();
  const auto [plus, minus] = dressed_states(gp.theta, gp.phi);
  const double sample_spacing = total / samples;

  double max_abs = 0.0;
  Matrix u = Matrix::Identity(2, 2);
  double next_sample = 0.0;
  for (const auto& p : traj.pieces()) {
    if (p.duration <= 0) {
      continue;
    }
    const long long n =
        std::max(1LL, static_cast<long long>(std::llround(p.duration / dt)));
    const double step = p.duration / static_cast<double>(n);
    for (long long i = 0; i < n; ++i) {
      const double tl_mid = (static_cast<double>(i) + 0.5) * step;
      const Matrix h = p.eval(tl_mid);
      const double t_mid = p.start + tl_mid;
      if (t_mid >= next_sample) {
        // U at the step midpoint: half-step advance of the running product.
        const Matrix u_mid = hermitian_propagator(h, step / 2.0) * u;
        const Matrix hu = u_mid.adjoint() * h * u_mid;
        const double v = std::max(std::abs((plus.adjoint() * hu * plus)(0)),
                                  std::abs((minus.adjoint() * hu * minus)(0)));
        max_abs = std::max(max_abs, v);
        next_sample += sample_spacing;
      }
      u = hermitian_propagator(h, step) * u;
    }
  }
  return max_abs / norm;
}

double state_fidelity(const Matrix& rho, const Vector& target) {
  if (target.size() > rho.rows()) {
    throw std::invalid_argument("state_fidelity: target larger than rho");
  }
  const Vector t = embed(target, static_cast<int>(rho.rows()));
  const double f = (t.adjoint() * rho * t)(0).real();
  return std::clamp(f, 0.0, 1.0);
}

namespace {

TransmonParams with_kappa(const TransmonParams& tp, double kappa_override) {
  TransmonParams out = tp;
  if (kappa_override >= 0) {
    out.kappa1 = kappa_override;
    out.kappa2 = kappa_override;
  }
  return out;
}

bool has_errors(const ErrorModel& em) {
  return em.rabi_epsilon != 0.0 || em.detuning_delta != 0.0;
}

struct SingleGateModel {
  HamiltonianTrajectory traj;
  std::vector<CollapseChannel> channels;
  Matrix ideal;  // 2x2
  double duration;
  int dim;
};

SingleGateModel build_single(const GateParams& gp, const TransmonParams& tp,
                             const SimOptions& opts) {
  PulseSchedule sched = schedule_for(gp, tp);
  if (opts.with_drag && opts.three_level) {
    sched = drag_augment(sched, tp.alpha);
  }
  const TransmonParams dev = with_kappa(tp, opts.kappa_override);
  HamiltonianTrajectory traj = single_qubit_trajectory(sched, dev, opts.three_level);
  if (has_errors(opts.errors)) {
    traj = inject_errors(traj, opts.errors, tp.omega_max);
  }
  auto channels =
      opts.three_level ? collapse_channels(dev) : collapse_channels_two_level(dev);
  return SingleGateModel{std::move(traj), std::move(channels),
                         ideal_single_gate(gp).matrix, sched.total_duration(),
                         opts.three_level ? 3 : 2};
}

}  // namespace

FidelityReport simulate_state(const GateParams& gp, const TransmonParams& tp,
                              const Vector& psi0, const SimOptions& opts) {
  if (psi0.size() != 2) {
    throw std::invalid_argument("simulate_state: psi0 must be a qubit state");
  }
  const auto model = build_single(gp, tp, opts);
  const Vector start = embed(psi0.normalized(), model.dim);
  const Matrix rho_t =
      lindblad_evolve(projector(start), model.traj, model.channels, opts.dt);
  const Vector target = model.ideal * psi0.normalized();

  FidelityReport rep;
  rep.gate_fidelity = rep.state_fidelity = state_fidelity(rho_t, target);
  rep.leakage = model.dim == 3 ? rho_t(2, 2).real() : 0.0;
  rep.duration = model.duration;
  return rep;
}

FidelityReport gate_fidelity_single(const GateParams& gp, const TransmonParams& tp,
                                    const SimOptions& opts) {
  if (opts.n_states < 2) {
    throw std::invalid_argument("gate_fidelity_single: n_states must be >= 2");
  }
  const auto model = build_single(gp, tp, opts);
  const int d = model.dim;

  // The master equation is linear in rho, so the qubit-subspace matrix units
  // determine every initial state on the grid exactly.
  Matrix e00 = Matrix::Zero(d, d), e11 = Matrix::Zero(d, d), e01 = Matrix::Zero(d, d);
  e00(0, 0) = 1.0;
  e11(1, 1) = 1.0;
  e01(0, 1) = 1.0;
  Matrix s00, s11, s01;
  std::vector<Matrix*> in = {&e00, &e11, &e01};
  std::vector<Matrix*> out = {&s00, &s11, &s01};
  parallel_for(3, std::min(3, resolve_workers(opts.workers)), [&](int i) {
    *out[static_cast<std::size_t>(i)] =
        lindblad_evolve(*in[static_cast<std::size_t>(i)], model.traj, model.channels, opts.dt);
  });
  const Matrix s10 = s01.adjoint();

  const int n = opts.n_states;
  KahanSum fsum, lsum;
  double fmin = 1.0;
  Matrix rho_t(d, d);
  for (int i = 0; i < n; ++i) {
    const double v = 2.0 * kPi * static_cast<double>(i) / (n - 1);
    const double w = (i == 0 || i == n - 1) ? 0.5 / (n - 1) : 1.0 / (n - 1);
    const double c = std::cos(v);
    const double s = std::sin(v);
    rho_t = c * c * s00 + s * s * s11 + c * s * (s01 + s10);
    Vector psi0(2);
    psi0 << c, s;
    const double f = state_fidelity(rho_t, model.ideal * psi0);
    fsum.add(w * f);
    fmin = std::min(fmin, f);
    if (d == 3) {
      lsum.add(w * rho_t(2, 2).real());
    }
  }

  FidelityReport rep;
  rep.gate_fidelity = std::clamp(fsum.value(), 0.0, 1.0);
  rep.state_fidelity = fmin;
  rep.leakage = lsum.value();
  rep.duration = model.duration;
  return rep;
}

FidelityReport gate_fidelity_two(const TwoQubitPlan& plan, const TransmonParams& tp,
                                 const SimOptions& opts) {
  if (opts.n_states < 4) {
    throw std::invalid_argument("gate_fidelity_two: n_states must be >= 4");
  }
  const TransmonParams dev = with_kappa(tp, opts.kappa_override);
  const HamiltonianTrajectory traj = two_qubit_trajectory(plan);
  const auto channels = coupled_collapse_channels(dev);
  const auto& comp = computational_indices();

  // Upper-triangle matrix units of the computational subspace; the adjoint
  // pairs follow from linearity and adjoint covariance of the generator.
  struct BasisJob {
    int a, b;
  };
  std::vector<BasisJob> jobs;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      jobs.push_back({a, b});
    }
  }
  std::vector<Matrix> evolved(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), opts.workers, [&](int i) {
    Matrix e = Matrix::Zero(9, 9);
    e(comp[static_cast<std::size_t>(jobs[static_cast<std::size_t>(i)].a)],
      comp[static_cast<std::size_t>(jobs[static_cast<std::size_t>(i)].b)]) = 1.0;
    evolved[static_cast<std::size_t>(i)] = lindblad_evolve(e, traj, channels, opts.dt);
  });
  Matrix s[4][4];
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    s[jobs[i].a][jobs[i].b] = evolved[i];
    if (jobs[i].a != jobs[i].b) {
      s[jobs[i].b][jobs[i].a] = evolved[i].adjoint();
    }
  }

  const Matrix u2 = ideal_cphase(plan.gamma_p).matrix;
  const int m = static_cast<int>(std::floor(std::sqrt(static_cast<double>(opts.n_states))));
  const bool corner = opts.n_states > m * m;
  const int total = m * m + (corner ? 1 : 0);

  KahanSum fsum, lsum;
  double fmin = 1.0;
  Matrix rho_t(9, 9);
  auto eval_point = [&](double v1, double v2) {
    Eigen::Vector4d v;
    v << std::cos(v1) * std::cos(v2), std::cos(v1) * std::sin(v2),
        std::sin(v1) * std::cos(v2), std::sin(v1) * std::sin(v2);
    rho_t.setZero();
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (v(a) * v(b) != 0.0) {
          rho_t += (v(a) * v(b)) * s[a][b];
        }
      }
    }
    Vector target4 = u2 * v.cast<Complex>();
    Vector target9 = Vector::Zero(9);
    for (int k = 0; k < 4; ++k) {
      target9(comp[static_cast<std::size_t>(k)]) = target4(k);
    }
    const double f = std::clamp((target9.adjoint() * rho_t * target9)(0).real(), 0.0, 1.0);
    double pop_comp = 0.0;
    for (int k = 0; k < 4; ++k) {
      pop_comp += rho_t(comp[static_cast<std::size_t>(k)], comp[static_cast<std::size_t>(k)]).real();
    }
    const double leak = std::max(0.0, rho_t.trace().real() - pop_comp);
    fsum.add(f);
    lsum.add(leak);
    fmin = std::min(fmin, f);
  };

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      eval_point(2.0 * kPi * (i + 0.5) / m, 2.0 * kPi * (j + 0.5) / m);
    }
  }
  if (corner) {
    eval_point(0.0, 0.0);
  }

  FidelityReport rep;
  rep.gate_fidelity = std::clamp(fsum.value() / total, 0.0, 1.0);
  rep.state_fidelity = fmin;
  rep.leakage = lsum.value() / total;
  rep.duration = plan.duration();
  return rep;
}

}  // namespace sngqc
