#ifndef SYMPEXP_SQUEEZE_HPP
#define SYMPEXP_SQUEEZE_HPP

// Classical two-mode squeeze matrix and its phase-space action.
//
// The squeeze amplitude is zeta = r e^{2 i phi}. The generator has a = c = 0
// and a coupling block b built from zeta, the oscillator lengths
// l_j = sqrt(hbar / (m_j w_j)) and hbar.

#include <array>
#include <vector>

#include "sympexp/linalg.hpp"

namespace sympexp {

struct SqueezeParams {
  double r = 0.0;
  double phi = 0.0;
  double l1 = 1.0;
  double l2 = 1.0;
  double hbar = 1.0;

  /// Throws std::invalid_argument unless r >= 0 and l1, l2, hbar > 0 (all finite).
  void validate() const;

  double zeta_x() const;
  double zeta_y() const;
};

struct PhaseSample {
  double t = 0.0;
  double q1 = 0.0;
  double p1 = 0.0;
  double q2 = 0.0;
  double p2 = 0.0;
};

struct Trajectory {
  std::vector<PhaseSample> samples;  // t strictly increasing
};

Mat2 squeeze_b(const SqueezeParams& p);

/// The explicit squeeze matrix M_s(r, phi).
Mat4 squeeze_matrix(const SqueezeParams& p);

/// Two-mode squeezed-vacuum correlation matrix V(r). The (4,4) entry is
/// cosh(2r)/4, matching the other diagonal entries.
Mat4 correlation_matrix(double r);

/// ||4 V(r) - M_s(2r, pi/2)|| at l1 = l2 = hbar = 1.
double factor_two_check(double r);

/// Uniform endpoint-inclusive samples of q_j(t) = cos t q_j + sin t p_j,
/// p_j(t) = -sin t q_j + cos t p_j. Throws std::invalid_argument unless
/// steps >= 2 and t1 > t0.
Trajectory circular_trajectory(std::array<double, 2> q, std::array<double, 2> p, double t0, double t1, int steps);

/// Left-multiplies every (q1, p1, q2, p2) by m. OpenMP-parallel over samples.
Trajectory transform_trajectory(const Trajectory& traj, const Mat4& m);

Trajectory transform_trajectory_serial(const Trajectory& traj, const Mat4& m);

}  // namespace sympexp

#endif  // SYMPEXP_SQUEEZE_HPP
