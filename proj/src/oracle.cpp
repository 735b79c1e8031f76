#include "sympexp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sympexp/format.hpp"

namespace sympexp {

namespace {

void check_fuzz_args(std::uint64_t count, double norm_cap) {
  if (count == 0) throw std::invalid_argument("fuzz count must be >= 1");
  if (!std::isfinite(norm_cap) || norm_cap < 0.0) throw std::invalid_argument("norm cap must be finite and >= 0");
}

struct SampleResult {
  double dev;
  double residual;
};

SampleResult fuzz_sample(std::uint64_t seed, std::uint64_t index, double norm_cap) {
  const Generator g = random_generator(seed, index, norm_cap);
  const Mat4 closed = exp_sp4(g);
  const Mat4 series = exp_series(lie_matrix(g));
  return {max_abs_diff(closed, series), symplectic_residual(closed)};
}

}  // namespace

void ExpOracleConfig::validate() const {
  if (!(squaring_threshold > 0.0)) throw std::invalid_argument("squaring_threshold must be > 0");
  if (max_terms < 20) throw std::invalid_argument("max_terms must be >= 20");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
}

Mat4 exp_series(const Mat4& m, const ExpOracleConfig& cfg) {
  cfg.validate();
  if (!all_finite(m)) throw std::invalid_argument("exp_series: non-finite input");

  int squarings = 0;
  double scale = 1.0;
  double norm = norm_inf(m);
  while (norm > cfg.squaring_threshold) {
    norm *= 0.5;
    scale *= 0.5;
    ++squarings;
  }
  const Mat4 x = scale * m;

  Mat4 sum = identity<4>();
  Mat4 term = identity<4>();
  for (int k = 1; k <= cfg.max_terms; ++k) {
    term = (1.0 / k) * (term * x);
    sum += term;
    if (max_abs(term) <= cfg.tol * max_abs(sum)) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

double symplectic_residual(const Mat4& m) {
  const Mat4 omega = omega4();
  return max_abs_diff(m * omega * transpose(m), omega);
}

double block_condition_residual(const Mat4& m) {
  const Mat2 j = j2();
  const Mat2 a = block(m, 0, 0);
  const Mat2 b = block(m, 0, 1);
  const Mat2 c = block(m, 1, 0);
  const Mat2 d = block(m, 1, 1);
  const double r1 = max_abs_diff(a * j * transpose(a) + b * j * transpose(b), j);
  const double r2 = max_abs_diff(c * j * transpose(c) + d * j * transpose(d), j);
  const double r3 = max_abs(a * j * transpose(c) + b * j * transpose(d));
  return std::max({r1, r2, r3});
}

Generator random_generator(std::uint64_t seed, std::uint64_t index, double norm_cap) {
  SplitMix64 rng(SplitMix64::mix64(seed ^ SplitMix64::mix64(index)));
  double v[10];
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  const Mat2 a{{v[0], v[1]}, {v[1], v[2]}};
  const Mat2 b{{v[3], v[4]}, {v[5], v[6]}};
  const Mat2 c{{v[7], v[8]}, {v[8], v[9]}};
  const Generator g(a, b, c);
  const double norm = norm_inf(lie_matrix(g));
  if (norm > norm_cap) return g.scaled(norm_cap / norm);
  return g;
}

std::string FuzzReport::to_text() const {
  std::string out;
  out += "max_dev=" + format_double(max_dev) + "\n";
  out += "max_residual=" + format_double(max_residual) + "\n";
  out += "count=" + std::to_string(count) + "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  return out;
}

FuzzReport fuzz_expmap(std::uint64_t seed, std::uint64_t count, double norm_cap) {
  check_fuzz_args(count, norm_cap);
  double max_dev = 0.0;
  double max_residual = 0.0;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(max : max_dev, max_residual)
  for (std::int64_t i = 0; i < n; ++i) {
    const SampleResult r = fuzz_sample(seed, static_cast<std::uint64_t>(i), norm_cap);
    max_dev = std::max(max_dev, r.dev);
    max_residual = std::max(max_residual, r.residual);
  }
  return {max_dev, max_residual, count, seed};
}

FuzzReport fuzz_expmap_serial(std::uint64_t seed, std::uint64_t count, double norm_cap) {
  check_fuzz_args(count, norm_cap);
  FuzzReport report{0.0, 0.0, count, seed};
  for (std::uint64_t i = 0; i < count; ++i) {
    const SampleResult r = fuzz_sample(seed, i, norm_cap);
    report.max_dev = std::max(report.max_dev, r.dev);
    report.max_residual = std::max(report.max_residual, r.residual);
  }
  return report;
}

}  // namespace sympexp
