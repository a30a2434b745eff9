#include "sngqc/device.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "sngqc/states.hpp"

namespace sngqc {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

void TransmonParams::validate() const {
  if (omega_max < 0 || delta < 0 || kappa1 < 0 || kappa2 < 0 || alpha <= 0) {
    throw std::invalid_argument("transmon parameters out of range");
  }
}

CoupledParams CoupledParams::make(double zeta, double alpha_a, double alpha_b, double g,
                                  double beta, double varphi, double deltap) {
  CoupledParams cp;
  cp.zeta = zeta;
  cp.alpha_a = alpha_a;
  cp.alpha_b = alpha_b;
  cp.g = g;
  cp.beta = beta;
  cp.varphi = varphi;
  cp.deltap = deltap;
  cp.nu = zeta - alpha_b + deltap;
  const double margins[] = {cp.nu, zeta - cp.nu, zeta + alpha_a - cp.nu};
  for (double m : margins) {
    if (g > std::abs(m) / 10.0) {
      std::cerr << "coupled-pair warning: g is not small against the rotating-term "
                   "separations; the effective two-level reduction degrades\n";
      break;
    }
  }
  return cp;
}

HamiltonianTrajectory single_qubit_trajectory(const PulseSchedule& sched,
                                              const TransmonParams& tp, bool with_leakage) {
  tp.validate();
  if (sched.max_peak_amplitude() > tp.omega_max * (1.0 + 1e-9)) {
    throw std::invalid_argument("schedule peak exceeds device omega_max");
  }
  const int dim = with_leakage ? 3 : 2;
  const double alpha = tp.alpha;
  std::vector<HamiltonianTrajectory::Piece> pieces;
  for (const auto& seg : sched.segments) {
    if (seg.duration <= 0) {
      continue;
    }
    pieces.push_back(HamiltonianTrajectory::Piece{
        0.0, seg.duration, [seg, dim, alpha](double tl) {
          const double om = seg.amplitude(tl);
          const double omd = -seg.drag_inv_alpha * seg.amplitude_derivative(tl);
          const Complex env = 0.5 * Complex{om, omd} * std::exp(-kImag * seg.phase_eta);
          Matrix h = Matrix::Zero(dim, dim);
          h(0, 0) = seg.detuning / 2.0;
          h(1, 1) = -seg.detuning / 2.0;
          h(0, 1) = env;
          h(1, 0) = std::conj(env);
          if (dim == 3) {
            h(2, 2) = -alpha - seg.detuning / 2.0;
            h(1, 2) = kSqrt2 * env;
            h(2, 1) = std::conj(h(1, 2));
            if (seg.drag_inv_alpha > 0) {
              h(1, 1) += 0.5 * om * om * seg.drag_inv_alpha;
            }
          }
          return h;
        }});
  }
  return HamiltonianTrajectory(dim, std::move(pieces));
}

std::vector<CollapseChannel> collapse_channels(const TransmonParams& tp) {
  Matrix l1 = Matrix::Zero(3, 3);
  l1(0, 1) = 1.0;
  l1(1, 2) = kSqrt2;
  Matrix l2 = Matrix::Zero(3, 3);
  l2(1, 1) = 1.0;
  l2(2, 2) = 2.0;
  return {CollapseChannel(l1, tp.kappa1), CollapseChannel(l2, tp.kappa2)};
}

std::vector<CollapseChannel> collapse_channels_two_level(const TransmonParams& tp) {
  Matrix l1 = Matrix::Zero(2, 2);
  l1(0, 1) = 1.0;
  Matrix l2 = Matrix::Zero(2, 2);
  l2(1, 1) = 1.0;
  return {CollapseChannel(l1, tp.kappa1), CollapseChannel(l2, tp.kappa2)};
}

double bessel_j1(double x) {
  // sum_k (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
  const double half = x / 2.0;
  double term = half;
  double sum = term;
  for (int k = 1; k <= 30; ++k) {
    term *= -half * half / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

double effective_coupling(double g, double beta) {
  if (beta < 0) {
    throw std::invalid_argument("effective_coupling: beta must be >= 0");
  }
  return 2.0 * kSqrt2 * g * bessel_j1(beta);
}

Matrix effective_two_qubit_hamiltonian(const CoupledParams& cp) {
  const double gp = effective_coupling(cp.g, cp.beta);
  const double etap = cp.varphi + kPi / 2;
  Matrix h(2, 2);
  h(0, 0) = cp.deltap / 2.0;
  h(1, 1) = -cp.deltap / 2.0;
  h(0, 1) = 0.5 * gp * std::exp(kImag * etap);
  h(1, 0) = std::conj(h(0, 1));
  return h;
}

namespace {

// |jk> index 3j+k; couplings |01><10|, sqrt2 |11><20|, sqrt2 |02><11|.
struct CoupledTerms {
  int r, c;
  double weight;
  double freq;  // phase e^{i freq t}
};

std::vector<CoupledTerms> coupled_terms(const CoupledParams& cp) {
  return {{1, 3, 1.0, cp.zeta},
          {4, 6, kSqrt2, cp.zeta + cp.alpha_a},
          {2, 4, kSqrt2, cp.zeta - cp.alpha_b}};
}

Matrix coupled_sample(const CoupledParams& cp, double t_global, double beta, double nu,
                      double phase) {
  Matrix h = Matrix::Zero(9, 9);
  const Complex mod = std::exp(-kImag * beta * std::cos(nu * t_global + phase));
  for (const auto& term : coupled_terms(cp)) {
    const Complex v = cp.g * term.weight * std::exp(kImag * term.freq * t_global) * mod;
    h(term.r, term.c) += v;
    h(term.c, term.r) += std::conj(v);
  }
  return h;
}

}  // namespace

HamiltonianTrajectory coupled_trajectory(const CoupledParams& cp,
                                         std::function<double(double)> beta_of_t,
                                         double duration) {
  std::vector<HamiltonianTrajectory::Piece> pieces;
  pieces.push_back(HamiltonianTrajectory::Piece{
      0.0, duration, [cp, beta_of_t](double tl) {
        return coupled_sample(cp, tl, beta_of_t(tl), cp.nu, cp.varphi);
      }});
  return HamiltonianTrajectory(9, std::move(pieces));
}

TwoQubitPlan two_qubit_plan(Scheme scheme, double gamma_p, const CoupledParams& cp) {
  TwoQubitPlan plan;
  plan.scheme = scheme;
  plan.gamma_p = gamma_p;
  plan.cp = cp;
  const double gp_max = effective_coupling(cp.g, cp.beta);
  if (gp_max <= 0) {
    throw std::invalid_argument("two_qubit_plan: effective coupling must be > 0");
  }

  auto coupling_segment = [&](double area, double eta_eff) {
    PulseSegment s;
    s.envelope = Envelope::Constant;
    s.peak_amplitude = gp_max;
    s.detuning = 0.0;
    s.phase_eta = eta_eff;
    s.duration = area / gp_max;
    return s;
  };
  // The physical modulation phase realizing an effective drive phase eta:
  // the static Jacobi-Anger term carries e^{i(varphi+pi/2)} on |11><02|, so
  // varphi = -eta - pi/2 (+ the gate's base offset).
  auto mod_phase_for = [&](double eta_eff) { return cp.varphi - eta_eff - kPi / 2; };

  if (scheme == Scheme::SNGQC) {
    const double g2 = std::abs(gamma_p);
    const double dsign = gamma_p >= 0 ? 1.0 : -1.0;
    if (cp.deltap <= 0) {
      throw std::invalid_argument("two_qubit_plan: deltap must be > 0 for the short path");
    }
    const double eta1 = kPi / 2;
    const double eta2 = gamma_p - kPi / 2;
    plan.effective.segments.push_back(coupling_segment(kPi / 2, eta1));
    PulseSegment z;
    z.envelope = Envelope::Constant;
    z.peak_amplitude = 0.0;
    z.detuning = dsign * cp.deltap;
    z.phase_eta = eta2;
    z.duration = g2 / cp.deltap;
    plan.effective.segments.push_back(z);
    plan.effective.segments.push_back(coupling_segment(kPi / 2, eta2));
    plan.mod_phases = {mod_phase_for(eta1), 0.0, mod_phase_for(eta2)};
  } else {
    // Orange-slice z-path, theta = 0: areas (pi, pi) at gamma_n = gamma_p/2.
    const double gn = gamma_p / 2.0;
    const double eta_mid = scheme == Scheme::NGQC_A ? -gn + kPi / 2 : -gn - kPi / 2;
    const double eta_last = -kPi / 2;
    plan.effective.segments.push_back(coupling_segment(kPi, eta_mid));
    plan.effective.segments.push_back(coupling_segment(kPi, eta_last));
    plan.mod_phases = {mod_phase_for(eta_mid), mod_phase_for(eta_last)};
  }
  return plan;
}

HamiltonianTrajectory two_qubit_trajectory(const TwoQubitPlan& plan) {
  std::vector<HamiltonianTrajectory::Piece> pieces;
  double start = 0.0;
  for (std::size_t k = 0; k < plan.effective.segments.size(); ++k) {
    const PulseSegment& seg = plan.effective.segments[k];
    if (seg.duration <= 0) {
      continue;
    }
    const bool coupling_on = seg.peak_amplitude > 0;
    const double mod_phase = plan.mod_phases[k];
    const CoupledParams cp = plan.cp;
    const double zsplit = seg.detuning;
    pieces.push_back(HamiltonianTrajectory::Piece{
        0.0, seg.duration, [cp, coupling_on, mod_phase, zsplit, start](double tl) {
          const double tg = start + tl;
          Matrix h = coupled_sample(cp, tg, coupling_on ? cp.beta : 0.0, cp.zeta - cp.alpha_b,
                                    mod_phase);
          if (zsplit != 0.0) {
            // Effective-frame splitting of the driven pair {|11>, |02>}.
            h(4, 4) += zsplit / 2.0;
            h(2, 2) -= zsplit / 2.0;
          }
          return h;
        }});
    start += seg.duration;
  }
  return HamiltonianTrajectory(9, std::move(pieces));
}

std::vector<CollapseChannel> coupled_collapse_channels(const TransmonParams& tp) {
  const auto single = collapse_channels(tp);
  const Matrix id3 = identity(3);
  std::vector<CollapseChannel> out;
  out.emplace_back(kron(single[0].op, id3), tp.kappa1);
  out.emplace_back(kron(id3, single[0].op), tp.kappa1);
  out.emplace_back(kron(single[1].op, id3), tp.kappa2);
  out.emplace_back(kron(id3, single[1].op), tp.kappa2);
  return out;
}

const std::vector<int>& computational_indices() {
  static const std::vector<int> idx = {0, 1, 3, 4};
  return idx;
}

}  // namespace sngqc
