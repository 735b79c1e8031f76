// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sympexp/cli.hpp"
#include "sympexp/expmap.hpp"
#include "sympexp/oracle.hpp"
#include "sympexp/squeeze.hpp"
#include "test_support.hpp"

using namespace sympexp;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::uint64_t kCount = 1000;
constexpr double kNormCap = 3.0;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string measured(double value, double tol) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "max %.3e, tol %.0e", value, tol);
  return buf;
}

void oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const FuzzReport r = fuzz_expmap(kSeed, kCount, kNormCap);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max dev %.3e, tol 1e-09; %.3f s, limit 5 s", r.max_dev, seconds);
  report(1, r.max_dev <= 1e-9 && seconds < 5.0,
         "closed form vs scaling-and-squaring series, 1000 seeded generators, ||m||_inf <= 3", buf);
}

void symplecticity() {
  double residual = 0.0;
  double blocks = 0.0;
  double block_mismatch = 0.0;
  for (std::uint64_t i = 0; i < kCount; ++i) {
    const Generator g = random_generator(kSeed, i, kNormCap);
    const Mat4 m = exp_sp4(g);
    const Blocks abcd = blocks_ABCD(g);
    const Mat4 assembled = from_blocks(abcd.a, abcd.b, abcd.c, abcd.d);
    residual = std::max(residual, symplectic_residual(m));
    blocks = std::max(blocks, block_condition_residual(assembled));
    block_mismatch = std::max(block_mismatch, max_abs_diff(assembled, m));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "M Omega M^T residual %.3e; block conditions %.3e; A/B/C/D vs exp %.3e; tol 1e-09",
                residual, blocks, block_mismatch);
  report(2, residual <= 1e-9 && blocks <= 1e-9 && block_mismatch <= 1e-9,
         "symplectic residual and A/B/C/D block conditions on the same 1000 matrices", buf);
}

double coeff_relative_error(const PowerCoeffs& x, const PowerCoeffs& ref) {
  const double scale = std::max({std::abs(ref.alpha), std::abs(ref.beta), std::abs(ref.gamma)});
  const double diff = std::max({std::abs(x.alpha - ref.alpha), std::abs(x.beta - ref.beta), std::abs(x.gamma - ref.gamma)});
  return scale > 0.0 ? diff / scale : diff;
}

void coefficient_closed_form() {
  testing::RandomSource rs(3);
  double worst = 0.0;
  int degenerate = 0;
  int confluent = 0;
  const auto check = [&](const Generator& g) {
    const SpectralData sd = spectral_data(g);
    for (std::uint32_t n = 1; n <= 12; ++n)
      worst = std::max(worst, coeff_relative_error(coeffs_closed(sd, n), coeffs_recursive(sd, n)));
    return sd;
  };
  for (int i = 0; i < 200; ++i) check(rs.generator(1.0));
  for (int i = 0; i < 24; ++i) {
    const SpectralData sd = check(Generator(zero<2>(), rs.matrix<2>(1.0), zero<2>()));
    ++degenerate;
    if (sd.discriminant == 0.0) ++confluent;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max relative error %.3e, tol 1e-10; %d a=c=0 cases, %d with zero discriminant", worst,
                degenerate, confluent);
  report(3, worst <= 1e-10 && confluent >= 20, "coeffs_closed = coeffs_recursive for n = 1..12, 200 random + degenerate",
         buf);
}

void special_cases() {
  testing::RandomSource rs(4);
  double b_zero = 0.0;
  double ac_zero = 0.0;
  double det_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Mat2 a = rs.symmetric2(1.5);
    const Mat2 c = rs.symmetric2(1.5);
    const Mat4 m = exp_sp4_b_zero(a, c);
    b_zero = std::max(b_zero, max_abs_diff(m, exp_sp4(Generator(a, zero<2>(), c))));
    det_dev = std::max({det_dev, std::abs(det2(block(m, 0, 0)) - 1.0), std::abs(det2(block(m, 1, 1)) - 1.0)});
  }
  for (int i = 0; i < 200; ++i) {
    const Mat2 b = rs.matrix<2>(1.5);
    ac_zero = std::max(ac_zero, max_abs_diff(exp_sp4_ac_zero(b), exp_sp4(Generator(zero<2>(), b, zero<2>()))));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "b=0 %.3e, a=c=0 %.3e, tol 1e-11; |det - 1| %.3e, tol 1e-12", b_zero, ac_zero,
                det_dev);
  report(4, b_zero <= 1e-11 && ac_zero <= 1e-11 && det_dev <= 1e-12,
         "special cases agree with exp_sp4; b=0 diagonal blocks in Sp(2,R)", buf);
}

void squeeze_reproduction() {
  const double pi = std::numbers::pi;
  const double scales[3][3] = {{1.0, 1.0, 1.0}, {0.5, 2.0, 1.0}, {1.0, 1.0, 3.0}};
  double worst = 0.0;
  for (double r : {0.0, 0.3, 0.6, 1.0, 2.0})
    for (double phi : {0.0, pi / 8, pi / 4, pi / 2})
      for (const auto& s : scales) {
        const SqueezeParams p{r, phi, s[0], s[1], s[2]};
        worst = std::max(worst, max_abs_diff(exp_sp4(Generator(zero<2>(), squeeze_b(p), zero<2>())), squeeze_matrix(p)));
      }
  report(5, worst <= 1e-12, "exp_sp4(0, squeeze_b, 0) equals the explicit squeeze matrix over 60 grid points",
         measured(worst, 1e-12));
}

void factor_two() {
  double worst = 0.0;
  for (double r : {0.0, 0.1, 0.3, 0.6, 1.0}) worst = std::max(worst, factor_two_check(r));
  report(6, worst <= 1e-12, "||4 V(r) - M_s(2r, pi/2)||_inf for r in {0, 0.1, 0.3, 0.6, 1}", measured(worst, 1e-12));
}

bool run_trajectory(const cli::TrajectoryOptions& opt, Trajectory& moved, Trajectory& circle) {
  std::ostringstream out;
  std::ostringstream err;
  if (cli::cmd_trajectory(opt, out, err) != cli::kOk) {
    std::printf("trajectory command failed: %s", err.str().c_str());
    return false;
  }
  moved = cli::parse_trajectory_csv(cli::read_file(opt.out));
  circle = cli::parse_trajectory_csv(cli::read_file(opt.out + ".orig.csv"));
  return true;
}

void trajectory_regeneration() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sympexp_acceptance";
  fs::create_directories(dir);

  cli::TrajectoryOptions opt;
  opt.q1 = 1.0;
  opt.p1 = 0.5;
  opt.params = {0.0, 0.0, 1.0, 1.0, 1.0};
  opt.out = (dir / "r0.csv").string();
  Trajectory moved;
  Trajectory circle;
  bool ok = run_trajectory(opt, moved, circle);
  double identity_dev = ok ? 0.0 : INFINITY;
  const Trajectory expected = circular_trajectory({opt.q1, opt.q2}, {opt.p1, opt.p2}, opt.t0, opt.t1, opt.steps);
  ok = ok && moved.samples.size() == expected.samples.size() && circle.samples.size() == expected.samples.size();
  for (std::size_t i = 0; ok && i < moved.samples.size(); ++i) {
    const PhaseSample& a = moved.samples[i];
    const PhaseSample& e = expected.samples[i];
    identity_dev = std::max({identity_dev, std::abs(a.q1 - e.q1), std::abs(a.p1 - e.p1), std::abs(a.q2 - e.q2),
                             std::abs(a.p2 - e.p2), std::abs(circle.samples[i].q1 - e.q1)});
  }

  opt.params.r = 0.6;
  opt.out = (dir / "r06.csv").string();
  ok = run_trajectory(opt, moved, circle) && ok;
  double max_radius = 0.0;
  for (const PhaseSample& s : moved.samples) max_radius = std::max(max_radius, std::hypot(s.q1, s.p1));
  const double radius_dev = std::abs(max_radius - std::cosh(0.6) * std::hypot(opt.q1, opt.p1));
  fs::remove_all(dir);

  char buf[160];
  std::snprintf(buf, sizeof buf, "r=0 deviation %.3e, tol 1e-12; r=0.6 radius deviation %.3e, tol 1e-10", identity_dev,
                radius_dev);
  report(7, ok && identity_dev <= 1e-12 && radius_dev <= 1e-10,
         "cmd_trajectory reproduces the circle at r=0 and scales mode 1 by cosh(0.6)", buf);
}

void degenerate_continuity() {
  testing::RandomSource rs(8);
  std::vector<Generator> confluent;
  for (int i = 0; i < 10; ++i) confluent.emplace_back(zero<2>(), rs.matrix<2>(1.0), zero<2>());
  for (double theta : {0.3, 1.0, 2.0}) confluent.emplace_back(theta * identity<2>(), zero<2>(), theta * identity<2>());
  confluent.emplace_back(zero<2>(), zero<2>(), zero<2>());

  constexpr double kDelta = 1e-7;
  double worst = 0.0;
  double vs_series = 0.0;
  int cases = 0;
  for (const Generator& g : confluent) {
    const Mat4 base = exp_sp4(g);
    // One free entry at a time: a11, a22, each entry of b, c11, c22.
    for (int k = 0; k < 8; ++k) {
      Mat2 a = g.a();
      Mat2 b = g.b();
      Mat2 c = g.c();
      if (k == 0) a(0, 0) += kDelta;
      else if (k == 1) a(1, 1) += kDelta;
      else if (k < 6) b((k - 2) / 2, (k - 2) % 2) += kDelta;
      else c(k - 6, k - 6) += kDelta;
      const Generator h(a, b, c);
      const Mat4 moved = exp_sp4(h);
      worst = std::max(worst, max_abs_diff(moved, base));
      vs_series = std::max(vs_series, max_abs_diff(moved, exp_series(lie_matrix(h))));
      ++cases;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max change %.3e, tol 1e-05; perturbed vs series %.3e, tol 1e-09; %d perturbations",
                worst, vs_series, cases);
  report(8, worst <= 1e-5 && vs_series <= 1e-9, "1e-7 perturbations of confluent generators stay continuous", buf);
}

void hbar_cancellation() {
  const double pi = std::numbers::pi;
  double worst = 0.0;
  for (double r : {0.0, 0.3, 0.6, 1.0, 2.0})
    for (double phi : {0.0, pi / 8, pi / 4, pi / 2, 1.0}) {
      const auto at = [&](double hbar) {
        const double l = std::sqrt(hbar);
        return squeeze_matrix({r, phi, l, l, hbar});
      };
      const Mat4 ref = at(1.0);
      for (double hbar : {0.1, 10.0}) worst = std::max(worst, max_abs_diff(at(hbar), ref));
    }
  report(9, worst <= 1e-12, "M_s independent of hbar for l_j = sqrt(hbar), hbar in {0.1, 1, 10}",
         measured(worst, 1e-12));
}

}  // namespace

int main() {
  oracle_equivalence();
  symplecticity();
  coefficient_closed_form();
  special_cases();
  squeeze_reproduction();
  factor_two();
  trajectory_regeneration();
  degenerate_continuity();
  hbar_cancellation();
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
