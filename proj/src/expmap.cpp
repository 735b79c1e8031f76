#include "sympexp/expmap.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sympexp {

namespace {

Mat2 symmetrized(const Mat2& x) { return 0.5 * (x + transpose(x)); }

void require_finite(const Mat2& x, const char* name) {
  if (!all_finite(x)) throw std::invalid_argument(std::string("generator block '") + name + "' has non-finite entries");
}

void require_symmetric(const Mat2& x, const char* name) {
  if (!is_symmetric(x)) throw std::invalid_argument(std::string("generator block '") + name + "' is not symmetric");
}

constexpr Mat2 kJ = j2();
constexpr Mat2 kI2 = identity<2>();

double eigen_scale(const SpectralData& sd) {
  return std::max({1.0, std::abs(sd.lambda_plus_c()), std::abs(sd.lambda_minus_c())});
}

// Power coefficients from the eigenvalue pair, generic over real and complex
// eigenvalues. The divided difference of x^n is either taken literally or, for
// close eigenvalues, as the geometric sum sum_k lp^k lm^(n-1-k).
template <typename T>
PowerCoeffs power_coeffs_from_eigen(T lp, T lm, double gamma1, std::uint32_t n, double gap, double scale) {
  const T g{gamma1};
  T alpha, beta, gamma;
  if (gap < kConfluentThreshold * scale) {
    const T lam = 0.5 * (lp + lm);
    const T deriv = static_cast<double>(n) * std::pow(lam, static_cast<double>(n - 1));
    const T lam_n = std::pow(lam, static_cast<double>(n));
    alpha = lam_n + (lam - g) * deriv;
    beta = deriv;
    gamma = lam_n - (lam - g) * deriv;
  } else if (gap < kNearConfluentThreshold * scale) {
    T h{0.0};
    T lp_k{1.0};
    for (std::uint32_t k = 0; k < n; ++k) {
      h += lp_k * std::pow(lm, static_cast<double>(n - 1 - k));
      lp_k *= lp;
    }
    alpha = std::pow(lm, static_cast<double>(n)) + (lp - g) * h;
    beta = h;
    gamma = std::pow(lp, static_cast<double>(n)) - (lp - g) * h;
  } else {
    const T inv = T{1.0} / (lp - lm);
    const T lp_n = std::pow(lp, static_cast<double>(n));
    const T lm_n = std::pow(lm, static_cast<double>(n));
    alpha = inv * ((lp - g) * lp_n - (lm - g) * lm_n);
    beta = inv * (lp_n - lm_n);
    gamma = inv * ((lp - g) * lm_n - (lm - g) * lp_n);
  }
  if constexpr (std::is_same_v<T, double>) {
    return {alpha, beta, gamma};
  } else {
    return {alpha.real(), beta.real(), gamma.real()};
  }
}

// Truncated Taylor sums of C(V) = sum V^n/(2n)! and S(V) = sum V^n/(2n+1)!
// for a 2x2 matrix of norm <= 1.
void entire_pair_taylor(const Mat2& v, Mat2& c_out, Mat2& s_out) {
  constexpr int kTerms = 14;
  Mat2 power = kI2;
  Mat2 c = kI2;
  Mat2 s = kI2;
  double fact_even = 1.0;  // (2n)!
  double fact_odd = 1.0;   // (2n+1)!
  for (int n = 1; n < kTerms; ++n) {
    power = power * v;
    fact_even *= (2.0 * n - 1.0) * (2.0 * n);
    fact_odd *= (2.0 * n) * (2.0 * n + 1.0);
    c += (1.0 / fact_even) * power;
    s += (1.0 / fact_odd) * power;
  }
  c_out = c;
  s_out = s;
}

}  // namespace

Generator::Generator(const Mat2& a, const Mat2& b, const Mat2& c, Symmetry mode) : a_(a), b_(b), c_(c) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(c, "c");
  if (mode == Symmetry::lenient) {
    a_ = symmetrized(a);
    c_ = symmetrized(c);
  } else {
    require_symmetric(a, "a");
    require_symmetric(c, "c");
  }
}

Mat4 Generator::symmetric_form() const { return from_blocks(a_, b_, transpose(b_), c_); }

Generator Generator::scaled(double s) const {
  Generator r;
  r.a_ = s * a_;
  r.b_ = s * b_;
  r.c_ = s * c_;
  return r;
}

Mat4 lie_matrix(const Generator& g) { return omega4() * g.symmetric_form(); }

SpectralData spectral_data(const Generator& g) {
  const double det_a = det2(g.a());
  const double det_b = det2(g.b());
  const double det_c = det2(g.c());

  SpectralData sd;
  sd.alpha1 = -(det_a + det_b);
  sd.beta1 = 1.0;
  sd.gamma1 = -(det_c + det_b);
  sd.d = g.a() * kJ * g.b() + g.b() * kJ * g.c();
  sd.det_d = det2(sd.d);

  const double diff = sd.alpha1 - sd.gamma1;
  sd.discriminant = diff * diff + 4.0 * sd.beta1 * sd.beta1 * sd.det_d;
  const double mean = 0.5 * (sd.alpha1 + sd.gamma1);
  if (sd.discriminant >= 0.0) {
    // Larger-magnitude root first, the other from the product of roots.
    const double half_root = 0.5 * std::sqrt(sd.discriminant);
    const double product = sd.alpha1 * sd.gamma1 - sd.beta1 * sd.beta1 * sd.det_d;
    if (mean >= 0.0) {
      sd.lambda_plus = mean + half_root;
      sd.lambda_minus = sd.lambda_plus != 0.0 ? product / sd.lambda_plus : mean - half_root;
    } else {
      sd.lambda_minus = mean - half_root;
      sd.lambda_plus = product / sd.lambda_minus;
    }
    // Rounding in the product route must not reorder the pair.
    if (sd.lambda_minus > sd.lambda_plus) sd.lambda_minus = sd.lambda_plus;
  } else {
    sd.complex_pair = true;
    sd.lambda_plus = mean;
    sd.lambda_minus = mean;
    sd.lambda_imag = 0.5 * std::sqrt(-sd.discriminant);
  }
  return sd;
}

SquaredGenerator compute_S(const Generator& g) {
  SquaredGenerator out;
  out.spectral = spectral_data(g);
  const SpectralData& sd = out.spectral;
  const Mat2 jd = kJ * sd.d;
  out.s = from_blocks(sd.alpha1 * kI2, sd.beta1 * jd, -sd.beta1 * (kJ * transpose(sd.d)), sd.gamma1 * kI2);
  return out;
}

PowerCoeffs coeffs_recursive(const SpectralData& sd, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("coefficient index must be >= 1");
  PowerCoeffs v{sd.alpha1, sd.beta1, sd.gamma1};
  for (std::uint32_t k = 1; k < n; ++k) {
    const PowerCoeffs prev = v;
    v.alpha = sd.alpha1 * prev.alpha + sd.beta1 * sd.det_d * prev.beta;
    v.beta = sd.beta1 * prev.alpha + sd.gamma1 * prev.beta;
    v.gamma = sd.beta1 * sd.det_d * prev.beta + sd.gamma1 * prev.gamma;
  }
  return v;
}

PowerCoeffs coeffs_closed(const SpectralData& sd, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("coefficient index must be >= 1");
  const double scale = eigen_scale(sd);
  if (sd.complex_pair) {
    return power_coeffs_from_eigen(sd.lambda_plus_c(), sd.lambda_minus_c(), sd.gamma1, n, 2.0 * sd.lambda_imag,
                                   scale);
  }
  return power_coeffs_from_eigen(sd.lambda_plus, sd.lambda_minus, sd.gamma1, n, sd.lambda_plus - sd.lambda_minus,
                                 scale);
}

double entire_c(double lambda) {
  if (lambda > kEntireSeriesEps) return std::cosh(std::sqrt(lambda));
  if (lambda < -kEntireSeriesEps) return std::cos(std::sqrt(-lambda));
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 10; ++n) {
    term *= lambda / ((2.0 * n - 1.0) * (2.0 * n));
    sum += term;
  }
  return sum;
}

double entire_s(double lambda) {
  if (lambda > kEntireSeriesEps) {
    const double u = std::sqrt(lambda);
    return std::sinh(u) / u;
  }
  if (lambda < -kEntireSeriesEps) {
    const double u = std::sqrt(-lambda);
    return std::sin(u) / u;
  }
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 10; ++n) {
    term *= lambda / ((2.0 * n) * (2.0 * n + 1.0));
    sum += term;
  }
  return sum;
}

// d/dx cosh(sqrt x) = sinh(sqrt x) / (2 sqrt x).
double entire_c1(double lambda) { return 0.5 * entire_s(lambda); }

double entire_s1(double lambda) {
  if (std::abs(lambda) > 1.0) return (entire_c(lambda) - entire_s(lambda)) / (2.0 * lambda);
  // sum_{n>=1} n x^(n-1) / (2n+1)!
  double sum = 0.0;
  double power = 1.0;  // x^(n-1)
  double fact = 1.0;   // (2n+1)!
  for (int n = 1; n < 24; ++n) {
    fact *= (2.0 * n) * (2.0 * n + 1.0);
    sum += n * power / fact;
    power *= lambda;
  }
  return sum;
}

// Direct evaluation of the even/odd coefficient series. The powers U^n of
// U = [[alpha_1, det d], [1, gamma_1]] are [[alpha_n, det d beta_n],
// [beta_n, gamma_n]], so the sums are C(U) = sum U^n/(2n)! and
// S(U) = sum U^n/(2n+1)!. For large U the Taylor sums run on U / 4^k and are
// lifted back with C(4V) = 2 C(V)^2 - I and S(4V) = S(V) C(V).
SeriesCoeffs series_coeffs_summed(const SpectralData& sd) {
  const Mat2 u{{sd.alpha1, sd.beta1 * sd.det_d}, {sd.beta1, sd.gamma1}};
  int doublings = 0;
  double norm = norm_inf(u);
  double factor = 1.0;
  while (norm > 1.0 && doublings < 64) {
    norm *= 0.25;
    factor *= 0.25;
    ++doublings;
  }
  Mat2 c, s;
  entire_pair_taylor(factor * u, c, s);
  for (int k = 0; k < doublings; ++k) {
    s = s * c;
    c = 2.0 * (c * c) - kI2;
  }
  return {c(0, 0), c(1, 0), c(1, 1), s(0, 0), s(1, 0), s(1, 1)};
}

SeriesCoeffs series_coeffs(const SpectralData& sd) {
  if (sd.complex_pair) return series_coeffs_summed(sd);

  const double lp = sd.lambda_plus;
  const double lm = sd.lambda_minus;
  const double g1 = sd.gamma1;
  const double gap = lp - lm;
  const double scale = eigen_scale(sd);

  if (gap < kConfluentThreshold * scale) {
    const double lam = 0.5 * (lp + lm);
    const double c = entire_c(lam);
    const double c1 = entire_c1(lam);
    const double s = entire_s(lam);
    const double s1 = entire_s1(lam);
    return {c + (lam - g1) * c1, c1, c - (lam - g1) * c1, s + (lam - g1) * s1, s1, s - (lam - g1) * s1};
  }
  if (gap < kNearConfluentThreshold * scale) return series_coeffs_summed(sd);

  const double inv = 1.0 / gap;
  const double cp = entire_c(lp);
  const double cm = entire_c(lm);
  const double sp = entire_s(lp);
  const double sm = entire_s(lm);
  SeriesCoeffs r;
  r.alpha_e = inv * ((lp - g1) * cp - (lm - g1) * cm);
  r.alpha_o = inv * ((lp - g1) * sp - (lm - g1) * sm);
  r.beta_e = inv * (cp - cm);
  r.beta_o = inv * (sp - sm);
  r.gamma_e = inv * ((lp - g1) * cm - (lm - g1) * cp);
  r.gamma_o = inv * ((lp - g1) * sm - (lm - g1) * sp);
  return r;
}

Mat4 exp_sp4(const Generator& g) {
  const SpectralData sd = spectral_data(g);
  const SeriesCoeffs k = series_coeffs(sd);
  const Mat2 jd = kJ * sd.d;
  const Mat2 jdt = kJ * transpose(sd.d);
  const Mat4 even = from_blocks(k.alpha_e * kI2, k.beta_e * jd, -k.beta_e * jdt, k.gamma_e * kI2);
  const Mat4 odd = from_blocks(k.alpha_o * kI2, k.beta_o * jd, -k.beta_o * jdt, k.gamma_o * kI2);
  return even + lie_matrix(g) * odd;
}

Blocks blocks_ABCD(const Generator& g) {
  const SeriesCoeffs k = series_coeffs(spectral_data(g));
  const Mat2& a = g.a();
  const Mat2& b = g.b();
  const Mat2& c = g.c();
  const Mat2 bt = transpose(b);
  const Mat2 ja = kJ * a;
  const Mat2 jb = kJ * b;
  const Mat2 jc = kJ * c;
  const Mat2 jbt = kJ * bt;
  const double det_a = det2(a);
  const double det_b = det2(b);
  const double det_c = det2(c);

  Blocks out;
  out.a = k.alpha_e * kI2 + (k.alpha_o - k.beta_o * det_b) * ja + k.beta_o * (jb * jc * jbt);
  out.b = (k.gamma_o - k.beta_o * det_a) * jb + k.beta_e * (ja * jb + jb * jc) + k.beta_o * (ja * jb * jc);
  out.c = (k.alpha_o - k.beta_o * det_c) * jbt + k.beta_e * (jbt * ja + jc * jbt) + k.beta_o * (jc * jbt * ja);
  out.d = k.gamma_e * kI2 + (k.gamma_o - k.beta_o * det_b) * jc + k.beta_o * (jbt * ja * jb);
  return out;
}

Mat4 exp_sp4_b_zero(const Mat2& a, const Mat2& c) {
  require_symmetric(a, "a");
  require_symmetric(c, "c");
  const double la = -det2(a);
  const double lc = -det2(c);
  const Mat2 upper = entire_c(la) * kI2 + entire_s(la) * (kJ * a);
  const Mat2 lower = entire_c(lc) * kI2 + entire_s(lc) * (kJ * c);
  return from_blocks(upper, zero<2>(), zero<2>(), lower);
}

Mat4 exp_sp4_ac_zero(const Mat2& b) {
  const double lam = -det2(b);
  const double ch = entire_c(lam);
  const double sh = entire_s(lam);
  return from_blocks(ch * kI2, sh * (kJ * b), sh * (kJ * transpose(b)), ch * kI2);
}

}  // namespace sympexp
