#ifndef SYMPEXP_ORACLE_HPP
#define SYMPEXP_ORACLE_HPP

// Brute-force matrix exponential and symplecticity checks, independent of the
// closed form in expmap.hpp.

#include <cstdint>
#include <string>

#include "sympexp/expmap.hpp"
#include "sympexp/linalg.hpp"

namespace sympexp {

struct ExpOracleConfig {
  double squaring_threshold = 0.5;  // induced inf-norm of m / 2^k
  int max_terms = 30;
  double tol = 1e-17;  // Taylor loop stops once max|term| <= tol * max|sum|

  /// Throws std::invalid_argument unless squaring_threshold > 0,
  /// max_terms >= 20 and tol > 0.
  void validate() const;
};

/// exp(m) by scaling and squaring of the truncated Taylor series.
/// Throws std::invalid_argument for non-finite input.
Mat4 exp_series(const Mat4& m, const ExpOracleConfig& cfg = {});

/// ||M Omega M^T - Omega|| (entrywise max).
double symplectic_residual(const Mat4& m);

/// Largest of the three block conditions on M = [[A, B], [C, D]]:
/// A J A^T + B J B^T = J, C J C^T + D J D^T = J, A J C^T + B J D^T = 0.
double block_condition_residual(const Mat4& m);

/// SplitMix64 (Steele, Lea, Flood 2014). Each fuzz sample i draws from its own
/// stream seeded with mix64(seed ^ mix64(i)), so reports do not depend on how
/// samples are partitioned across threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Generator number `index` of the fuzz stream: the ten free entries
/// (a11, a12, a22, b11, b12, b21, b22, c11, c12, c22) uniform in [-1, 1],
/// scaled down when needed so that ||lie_matrix(g)||_inf <= norm_cap.
Generator random_generator(std::uint64_t seed, std::uint64_t index, double norm_cap);

struct FuzzReport {
  double max_dev = 0.0;
  double max_residual = 0.0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  /// key=value lines: max_dev, max_residual, count, seed.
  std::string to_text() const;

  friend bool operator==(const FuzzReport&, const FuzzReport&) = default;
};

/// Compares exp_sp4 against exp_series over `count` random generators.
/// OpenMP-parallel over samples; throws std::invalid_argument if count == 0
/// or norm_cap is negative or non-finite.
FuzzReport fuzz_expmap(std::uint64_t seed, std::uint64_t count, double norm_cap);

/// Single-threaded reference for fuzz_expmap; returns an identical report.
FuzzReport fuzz_expmap_serial(std::uint64_t seed, std::uint64_t count, double norm_cap);

}  // namespace sympexp

#endif  // SYMPEXP_ORACLE_HPP
