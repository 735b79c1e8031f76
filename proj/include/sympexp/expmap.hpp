#ifndef SYMPEXP_EXPMAP_HPP
#define SYMPEXP_EXPMAP_HPP

// Closed-form exponential map sp(4,R) -> Sp(4,R).
//
// A Lie-algebra element is m = Omega * L with L = [[a, b], [b^T, c]], a and c
// symmetric. Its square S = m^2 keeps the block shape
//
//   S = [[ alpha_1 I,   J d ],
//        [ -J d^T,  gamma_1 I ]],    d = a J b + b J c,
//
// and so does every power S^n, with scalar coefficients (alpha_n, beta_n,
// gamma_n) generated by a 3x3 linear recursion. Summing the even and odd parts
// of the exponential series in terms of the eigenvalues lambda_+- of the 2x2
// matrix U = [[alpha_1, det d], [1, gamma_1]] gives exp(m) = E + m O, where E
// and O carry the six series coefficients.

#include <complex>
#include <cstdint>

#include "sympexp/linalg.hpp"

namespace sympexp {

enum class Symmetry {
  strict,   // asymmetric a or c is rejected
  lenient,  // a and c are replaced by (x + x^T) / 2
};

class Generator {
 public:
  Generator() = default;

  /// Throws std::invalid_argument if a or c is not exactly symmetric in
  /// strict mode, or if any entry is not finite.
  Generator(const Mat2& a, const Mat2& b, const Mat2& c, Symmetry mode = Symmetry::strict);

  const Mat2& a() const { return a_; }
  const Mat2& b() const { return b_; }
  const Mat2& c() const { return c_; }

  /// The symmetric matrix L = [[a, b], [b^T, c]].
  Mat4 symmetric_form() const;

  Generator scaled(double s) const;
  Generator operator-() const { return scaled(-1.0); }

 private:
  Mat2 a_{};
  Mat2 b_{};
  Mat2 c_{};
};

/// Spectral quantities of S = m^2.
///
/// When the discriminant is negative the eigenvalues form a complex pair;
/// lambda_plus and lambda_minus then both hold the common real part and
/// lambda_imag holds +|Im|, with lambda_+ = re + i*imag.
struct SpectralData {
  double alpha1 = 0.0;
  double beta1 = 1.0;
  double gamma1 = 0.0;
  Mat2 d{};
  double det_d = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double lambda_imag = 0.0;
  double discriminant = 0.0;
  bool complex_pair = false;

  std::complex<double> lambda_plus_c() const { return {lambda_plus, lambda_imag}; }
  std::complex<double> lambda_minus_c() const { return {lambda_minus, -lambda_imag}; }
};

struct SquaredGenerator {
  Mat4 s;
  SpectralData spectral;
};

/// Coefficients of S^n = [[alpha I, beta J d], [-beta J d^T, gamma I]].
struct PowerCoeffs {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Even (e) and odd (o) series coefficients of exp(m) = E + m O.
struct SeriesCoeffs {
  double alpha_e = 0.0;
  double beta_e = 0.0;
  double gamma_e = 0.0;
  double alpha_o = 0.0;
  double beta_o = 0.0;
  double gamma_o = 0.0;
};

struct Blocks {
  Mat2 a;
  Mat2 b;
  Mat2 c;
  Mat2 d;
};

// Relative eigenvalue gap below which the confluent (derivative) formulas
// replace the divided differences.
inline constexpr double kConfluentThreshold = 1e-8;
// Relative gap below which the divided differences are summed as a series
// instead of subtracting nearly equal function values.
inline constexpr double kNearConfluentThreshold = 1e-3;
// |lambda| at or below which c, s, c1, s1 are evaluated by power series.
inline constexpr double kEntireSeriesEps = 1e-4;

/// m = Omega L.
Mat4 lie_matrix(const Generator& g);

/// S = m^2 assembled from its closed block form, together with the
/// spectral data of the coefficient recursion.
SquaredGenerator compute_S(const Generator& g);

SpectralData spectral_data(const Generator& g);

/// Reference route: (alpha_n, beta_n, gamma_n) = T^(n-1) (alpha_1, 1, gamma_1).
/// Throws std::invalid_argument for n == 0.
PowerCoeffs coeffs_recursive(const SpectralData& sd, std::uint32_t n);

/// Eigenvalue closed form for (alpha_n, beta_n, gamma_n), with the confluent
/// limit when lambda_+ ~ lambda_-. Throws std::invalid_argument for n == 0.
PowerCoeffs coeffs_closed(const SpectralData& sd, std::uint32_t n);

// c(x) = sum x^n/(2n)! = cosh(sqrt x), continued to x <= 0 as cos(sqrt(-x)).
double entire_c(double lambda);
// s(x) = sum x^n/(2n+1)! = sinh(sqrt x)/sqrt x.
double entire_s(double lambda);
// c1 = c', s1 = s' (the confluent limits of the divided differences).
double entire_c1(double lambda);
double entire_s1(double lambda);

SeriesCoeffs series_coeffs(const SpectralData& sd);

/// The same coefficients by direct summation of the even/odd series, with no
/// eigenvalues involved. Handles complex and nearly equal eigenvalue pairs.
SeriesCoeffs series_coeffs_summed(const SpectralData& sd);

/// exp(m) for m = lie_matrix(g), via the closed form.
Mat4 exp_sp4(const Generator& g);

/// The four blocks of exp(m) from their explicit expressions in a, b, c.
Blocks blocks_ABCD(const Generator& g);

/// exp(m) for b = 0: block-diagonal product of two Sp(2,R) elements.
/// Throws std::invalid_argument if a or c is not symmetric.
Mat4 exp_sp4_b_zero(const Mat2& a, const Mat2& c);

/// exp(m) for a = c = 0.
Mat4 exp_sp4_ac_zero(const Mat2& b);

}  // namespace sympexp

#endif  // SYMPEXP_EXPMAP_HPP
