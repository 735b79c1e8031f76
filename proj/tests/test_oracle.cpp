#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sympexp/oracle.hpp"
#include "sympexp/squeeze.hpp"
#include "test_support.hpp"

namespace sympexp {
namespace {

using testing::RandomSource;

TEST(ExpSeries, Examples) {
  EXPECT_EQ(exp_series(zero<4>()), identity<4>());

  const double half_pi = std::numbers::pi / 2;
  const Mat4 rot = exp_series(lie_matrix(Generator(half_pi * identity<2>(), zero<2>(), zero<2>())));
  EXPECT_LE(max_abs_diff(rot, from_blocks(j2(), zero<2>(), zero<2>(), identity<2>())), 1e-12);

  // r = 0.6, phi = pi/2: (1,1) = cosh 0.6 and (1,3) = sinh 0.6, frozen from a 30-digit series.
  const Mat2 b = squeeze_b({0.6, half_pi, 1.0, 1.0, 1.0});
  const Mat4 sq = exp_series(lie_matrix(Generator(zero<2>(), b, zero<2>())));
  EXPECT_NEAR(sq(0, 0), 1.1854652182422677, 1e-14);
  EXPECT_NEAR(sq(0, 2), 0.63665358214824127, 1e-14);
  EXPECT_NEAR(sq(1, 3), -0.63665358214824127, 1e-14);
}

TEST(ExpSeries, RejectsNonFiniteInputAndBadConfig) {
  Mat4 m = zero<4>();
  m(2, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(exp_series(m), std::invalid_argument);
  EXPECT_THROW(exp_series(zero<4>(), {0.0, 30, 1e-17}), std::invalid_argument);
  EXPECT_THROW(exp_series(zero<4>(), {0.5, 19, 1e-17}), std::invalid_argument);
  EXPECT_THROW(exp_series(zero<4>(), {0.5, 30, 0.0}), std::invalid_argument);
}

TEST(ExpSeries, DiagonalMatrixGivesScalarExponentials) {
  Mat4 m = zero<4>();
  const double diag[4] = {-3.0, -0.5, 1.25, 4.0};
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = diag[i];
  const Mat4 e = exp_series(m);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(e(i, i), std::exp(diag[i]), 1e-12 * std::exp(diag[i]));
}

TEST(ExpSeriesProperty, InverseIsExpOfNegation) {
  RandomSource rs(21);
  for (int i = 0; i < 300; ++i) {
    Mat4 m = rs.matrix<4>(1.0);
    m = (rs.uniform(0.0, 5.0) / norm_inf(m)) * m;
    EXPECT_LE(max_abs_diff(exp_series(m) * exp_series(-m), identity<4>()), 1e-11);
  }
}

TEST(ExpSeriesProperty, LieElementsLandInTheGroup) {
  RandomSource rs(22);
  for (int i = 0; i < 300; ++i) {
    const Generator g = rs.generator_with_norm(rs.uniform(0.0, 3.0));
    EXPECT_LE(symplectic_residual(exp_series(lie_matrix(g))), 1e-10);
  }
}

TEST(SymplecticResidual, Examples) {
  EXPECT_EQ(symplectic_residual(identity<4>()), 0.0);
  EXPECT_EQ(symplectic_residual(omega4()), 0.0);
  Mat4 stretch = identity<4>();
  stretch(0, 0) = 2.0;  // (M Omega M^T)(0,1) = 2
  EXPECT_EQ(symplectic_residual(stretch), 1.0);
  EXPECT_EQ(block_condition_residual(identity<4>()), 0.0);
  EXPECT_EQ(block_condition_residual(stretch), 1.0);
}

TEST(SplitMix64, MatchesReferenceOutput) {
  // First output of the reference SplitMix64 from state 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  SplitMix64 u(123);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform01();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(RandomGenerator, RespectsNormCapAndIsDeterministic) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Generator g = random_generator(42, i, 3.0);
    EXPECT_LE(norm_inf(lie_matrix(g)), 3.0 * (1.0 + 1e-15));
    EXPECT_EQ(lie_matrix(g), lie_matrix(random_generator(42, i, 3.0)));
    EXPECT_TRUE(is_symmetric(g.a()));
    EXPECT_TRUE(is_symmetric(g.c()));
  }
  EXPECT_NE(lie_matrix(random_generator(42, 0, 3.0)), lie_matrix(random_generator(43, 0, 3.0)));
  EXPECT_EQ(lie_matrix(random_generator(9, 5, 0.0)), zero<4>());
}

TEST(Fuzz, ZeroCapGivesExactIdentity) {
  const FuzzReport r = fuzz_expmap(1, 1, 0.0);
  EXPECT_EQ(r.max_dev, 0.0);
  EXPECT_EQ(r.max_residual, 0.0);
  EXPECT_EQ(r.count, 1u);
  EXPECT_EQ(r.seed, 1u);
}

TEST(Fuzz, AcceptanceRunIsWithinTolerance) {
  const FuzzReport r = fuzz_expmap(42, 1000, 3.0);
  EXPECT_LE(r.max_dev, 1e-9);
  EXPECT_LE(r.max_residual, 1e-9);
}

TEST(Fuzz, DeterministicAndPartitionIndependent) {
  const FuzzReport a = fuzz_expmap(7, 500, 3.0);
  EXPECT_EQ(a, fuzz_expmap(7, 500, 3.0));
  EXPECT_EQ(a, fuzz_expmap_serial(7, 500, 3.0));
  EXPECT_EQ(a.to_text(), fuzz_expmap_serial(7, 500, 3.0).to_text());
}

TEST(Fuzz, RejectsBadArguments) {
  EXPECT_THROW(fuzz_expmap(1, 0, 3.0), std::invalid_argument);
  EXPECT_THROW(fuzz_expmap(1, 10, -1.0), std::invalid_argument);
  EXPECT_THROW(fuzz_expmap_serial(1, 10, std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(FuzzReport, TextFormat) {
  const FuzzReport r{0.5, 0.25, 3, 9};
  EXPECT_EQ(r.to_text(), "max_dev=0.5\nmax_residual=0.25\ncount=3\nseed=9\n");
}

}  // namespace
}  // namespace sympexp
