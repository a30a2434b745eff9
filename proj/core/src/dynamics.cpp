#include "sngqc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace sngqc {

CollapseChannel::CollapseChannel(Matrix o, double r) : op(std::move(o)), rate(r) {
  if (rate < 0) {
    throw std::invalid_argument("collapse rate must be >= 0");
  }
}

HamiltonianTrajectory::HamiltonianTrajectory(int dim, std::vector<Piece> pieces)
    : dim_(dim), pieces_(std::move(pieces)) {
  double t = 0.0;
  for (auto& p : pieces_) {
    p.start = t;
    t += p.duration;
  }
  total_ = t;
}

Matrix HamiltonianTrajectory::operator()(double t) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    const bool last = (i + 1 == pieces_.size());
    if (t < p.start + p.duration || (last && t <= p.start + p.duration)) {
      return p.eval(std::clamp(t - p.start, 0.0, p.duration));
    }
  }
  if (pieces_.empty()) {
    return Matrix::Zero(dim_, dim_);
  }
  const Piece& p = pieces_.back();
  return p.eval(p.duration);
}

HamiltonianTrajectory HamiltonianTrajectory::transformed(
    std::function<Matrix(const Matrix&, double)> f) const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    out.push_back(Piece{p.start, p.duration, [eval = p.eval, f, start = p.start](double tl) {
                          return f(eval(tl), start + tl);
                        }});
  }
  return HamiltonianTrajectory(dim_, std::move(out));
}

std::vector<double> HamiltonianTrajectory::breakpoints() const {
  std::vector<double> b{0.0};
  for (const auto& p : pieces_) {
    if (p.duration > 0) {
      b.push_back(p.start + p.duration);
    }
  }
  return b;
}

namespace {

// Steps within [a, b] of one piece: count so the local step is ~dt.
long long step_count(double len, double dt) {
  if (len <= 0) {
    return 0;
  }
  return std::max(1LL, static_cast<long long>(std::llround(len / dt)));
}

void check_hermitian(const Matrix& h) {
  const double scale = 1.0 + h.cwiseAbs().maxCoeff();
  if (hermiticity_error(h) > 1e-9 * scale) {
    throw ModelError("trajectory evaluator returned a non-Hermitian matrix");
  }
}

}  // namespace

Matrix propagate_unitary_observed(const HamiltonianTrajectory& h, double t0, double t1,
                                  double dt,
                                  const std::function<void(double, const Matrix&)>& observer) {
  if (t1 < t0) {
    throw std::invalid_argument("propagate_unitary: t1 < t0");
  }
  if (dt <= 0) {
    throw std::invalid_argument("propagate_unitary: dt must be > 0");
  }
  Matrix u = Matrix::Identity(h.dim(), h.dim());
  if (observer) {
    observer(t0, u);
  }
  for (const auto& p : h.pieces()) {
    const double a = std::max(t0, p.start);
    const double b = std::min(t1, p.start + p.duration);
    if (b <= a) {
      continue;
    }
    const long long n = step_count(b - a, dt);
    const double step = (b - a) / static_cast<double>(n);
    for (long long i = 0; i < n; ++i) {
      const double tl = (a - p.start) + (static_cast<double>(i) + 0.5) * step;
      const Matrix hm = p.eval(tl);
      check_hermitian(hm);
      u = hermitian_propagator(hm, step) * u;
      if (observer) {
        observer(a + (static_cast<double>(i) + 1.0) * step, u);
      }
    }
  }
  return u;
}

Matrix propagate_unitary(const HamiltonianTrajectory& h, double t0, double t1, double dt) {
  return propagate_unitary_observed(h, t0, t1, dt, {});
}

namespace {

struct LindbladWorkspace {
  std::vector<Matrix> ldl;  // precomputed L^dag L per channel
  Matrix k1, k2, k3, k4, tmp, acc, h;

  LindbladWorkspace(int dim, const std::vector<CollapseChannel>& channels) {
    for (const auto& c : channels) {
      ldl.push_back(c.op.adjoint() * c.op);
    }
    k1 = k2 = k3 = k4 = tmp = acc = h = Matrix::Zero(dim, dim);
  }

  // out = i[rho, H] + sum rate (L rho L^dag - {L^dag L, rho}/2)
  void rhs(const Matrix& rho, const Matrix& ham, const std::vector<CollapseChannel>& channels,
           Matrix& out) {
    out.noalias() = kImag * (rho * ham);
    out.noalias() -= kImag * (ham * rho);
    for (std::size_t k = 0; k < channels.size(); ++k) {
      const double r = channels[k].rate;
      if (r == 0) {
        continue;
      }
      tmp.noalias() = channels[k].op * rho;
      out.noalias() += r * (tmp * channels[k].op.adjoint());
      tmp.noalias() = ldl[k] * rho;
      out.noalias() -= (0.5 * r) * tmp;
      tmp.noalias() = rho * ldl[k];
      out.noalias() -= (0.5 * r) * tmp;
    }
  }
};

}  // namespace

Matrix lindblad_evolve(const Matrix& rho0, const HamiltonianTrajectory& h,
                       const std::vector<CollapseChannel>& channels, double dt,
                       const std::function<void(double, const Matrix&)>& observer) {
  if (dt <= 0) {
    throw std::invalid_argument("lindblad_evolve: dt must be > 0");
  }
  for (const auto& c : channels) {
    if (c.op.rows() != h.dim()) {
      throw std::invalid_argument("lindblad_evolve: channel dimension mismatch");
    }
  }
  const int dim = h.dim();
  Matrix rho = rho0;
  LindbladWorkspace ws(dim, channels);
  const double trace0 = rho0.trace().real();
  if (observer) {
    observer(0.0, rho);
  }
  for (const auto& p : h.pieces()) {
    const long long n = step_count(p.duration, dt);
    const double step = p.duration / static_cast<double>(n);
    for (long long i = 0; i < n; ++i) {
      const double tl = static_cast<double>(i) * step;
      ws.h = p.eval(tl);
      check_hermitian(ws.h);
      ws.rhs(rho, ws.h, channels, ws.k1);
      ws.h = p.eval(tl + 0.5 * step);
      ws.acc.noalias() = rho + (0.5 * step) * ws.k1;
      ws.rhs(ws.acc, ws.h, channels, ws.k2);
      ws.acc.noalias() = rho + (0.5 * step) * ws.k2;
      ws.rhs(ws.acc, ws.h, channels, ws.k3);
      ws.h = p.eval(tl + step);
      ws.acc.noalias() = rho + step * ws.k3;
      ws.rhs(ws.acc, ws.h, channels, ws.k4);
      rho.noalias() += (step / 6.0) * (ws.k1 + 2.0 * ws.k2 + 2.0 * ws.k3 + ws.k4);
      if (std::abs(rho.trace().real() - trace0) > 1e-6) {
        throw IntegratorError("lindblad_evolve: trace drift exceeds 1e-6, reduce dt");
      }
      if (observer) {
        observer(p.start + (static_cast<double>(i) + 1.0) * step, rho);
      }
    }
  }
  return rho;
}

Complex expectation(const Matrix& rho, const Matrix& op) {
  if (rho.rows() != op.rows()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return (rho * op).trace();
}

}  // namespace sngqc
