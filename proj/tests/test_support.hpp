#ifndef SYMPEXP_TEST_SUPPORT_HPP
#define SYMPEXP_TEST_SUPPORT_HPP

// Random inputs for property tests. Uses std::mt19937_64, not the library's
// SplitMix64 stream, so the tests do not share randomness with fuzz_expmap.

#include <random>

#include "sympexp/expmap.hpp"
#include "sympexp/linalg.hpp"

namespace sympexp::testing {

class RandomSource {
 public:
  explicit RandomSource(unsigned long long seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  template <std::size_t N>
  Matrix<N> matrix(double bound) {
    Matrix<N> m;
    for (double& x : m.data) x = uniform(-bound, bound);
    return m;
  }

  Mat2 symmetric2(double bound) {
    const double x = uniform(-bound, bound);
    const double y = uniform(-bound, bound);
    const double z = uniform(-bound, bound);
    return Mat2{{x, y}, {y, z}};
  }

  Generator generator(double bound = 1.0) {
    return Generator(symmetric2(bound), matrix<2>(bound), symmetric2(bound));
  }

  /// Random generator rescaled to ||lie_matrix(g)||_inf == norm.
  Generator generator_with_norm(double norm) {
    const Generator g = generator();
    const double n = norm_inf(lie_matrix(g));
    return g.scaled(norm / n);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Brute-force S^n = (m^2)^n by repeated 4x4 products.
inline Mat4 brute_power_S(const Generator& g, unsigned n) {
  const Mat4 m = lie_matrix(g);
  const Mat4 s = m * m;
  Mat4 p = identity<4>();
  for (unsigned k = 0; k < n; ++k) p = p * s;
  return p;
}

}  // namespace sympexp::testing

#endif  // SYMPEXP_TEST_SUPPORT_HPP
