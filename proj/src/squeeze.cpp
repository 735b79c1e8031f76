#include "sympexp/squeeze.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace sympexp {

namespace {

PhaseSample apply(const Mat4& m, const PhaseSample& s) {
  const double x[4] = {s.q1, s.p1, s.q2, s.p2};
  double y[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) y[i] += m(i, j) * x[j];
  return {s.t, y[0], y[1], y[2], y[3]};
}

}  // namespace

void SqueezeParams::validate() const {
  if (!std::isfinite(r) || r < 0.0) throw std::invalid_argument("squeeze magnitude r must be finite and >= 0");
  if (!std::isfinite(phi)) throw std::invalid_argument("squeeze angle phi must be finite");
  if (!std::isfinite(l1) || l1 <= 0.0) throw std::invalid_argument("l1 must be finite and > 0");
  if (!std::isfinite(l2) || l2 <= 0.0) throw std::invalid_argument("l2 must be finite and > 0");
  if (!std::isfinite(hbar) || hbar <= 0.0) throw std::invalid_argument("hbar must be finite and > 0");
}

double SqueezeParams::zeta_x() const { return r * std::cos(2.0 * phi); }
double SqueezeParams::zeta_y() const { return r * std::sin(2.0 * phi); }

Mat2 squeeze_b(const SqueezeParams& p) {
  p.validate();
  const double zx = p.zeta_x();
  const double zy = p.zeta_y();
  const double l12 = p.l1 * p.l2;
  return Mat2{{p.hbar * zy / l12, -p.l2 * zx / p.l1}, {-p.l1 * zx / p.l2, -l12 * zy / p.hbar}};
}

Mat4 squeeze_matrix(const SqueezeParams& p) {
  p.validate();
  const double ch = std::cosh(p.r);
  const double sh = std::sinh(p.r);
  const double cs = sh * std::cos(2.0 * p.phi);
  const double sn = sh * std::sin(2.0 * p.phi);
  const double l12 = p.l1 * p.l2;
  return Mat4{
      {ch, 0.0, -cs * p.l1 / p.l2, -sn * l12 / p.hbar},
      {0.0, ch, -sn * p.hbar / l12, cs * p.l2 / p.l1},
      {-cs * p.l2 / p.l1, -sn * l12 / p.hbar, ch, 0.0},
      {-sn * p.hbar / l12, cs * p.l1 / p.l2, 0.0, ch},
  };
}

Mat4 correlation_matrix(double r) {
  if (!std::isfinite(r) || r < 0.0) throw std::invalid_argument("squeeze magnitude r must be finite and >= 0");
  const double ch = 0.25 * std::cosh(2.0 * r);
  const double sh = 0.25 * std::sinh(2.0 * r);
  return Mat4{
      {ch, 0.0, sh, 0.0},
      {0.0, ch, 0.0, -sh},
      {sh, 0.0, ch, 0.0},
      {0.0, -sh, 0.0, ch},
  };
}

double factor_two_check(double r) {
  const SqueezeParams doubled{2.0 * r, std::numbers::pi / 2.0, 1.0, 1.0, 1.0};
  return max_abs_diff(4.0 * correlation_matrix(r), squeeze_matrix(doubled));
}

Trajectory circular_trajectory(std::array<double, 2> q, std::array<double, 2> p, double t0, double t1, int steps) {
  if (steps < 2) throw std::invalid_argument("trajectory needs at least 2 steps");
  if (!(t1 > t0)) throw std::invalid_argument("trajectory needs t1 > t0");
  Trajectory out;
  out.samples.resize(static_cast<std::size_t>(steps));
  const double dt = (t1 - t0) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = (i == steps - 1) ? t1 : t0 + dt * i;
    const double ct = std::cos(t);
    const double st = std::sin(t);
    out.samples[static_cast<std::size_t>(i)] = {t,
                                                ct * q[0] + st * p[0],
                                                -st * q[0] + ct * p[0],
                                                ct * q[1] + st * p[1],
                                                -st * q[1] + ct * p[1]};
  }
  return out;
}

Trajectory transform_trajectory(const Trajectory& traj, const Mat4& m) {
  Trajectory out;
  out.samples.resize(traj.samples.size());
  const auto n = static_cast<std::int64_t>(traj.samples.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.samples[k] = apply(m, traj.samples[k]);
  }
  return out;
}

Trajectory transform_trajectory_serial(const Trajectory& traj, const Mat4& m) {
  Trajectory out;
  out.samples.reserve(traj.samples.size());
  for (const PhaseSample& s : traj.samples) out.samples.push_back(apply(m, s));
  return out;
}

}  // namespace sympexp
