#ifndef SYMPEXP_LINALG_HPP
#define SYMPEXP_LINALG_HPP

// Fixed-size dense real matrices for the 2x2 and 4x4 blocks of two-mode
// phase space. Storage is row-major; phase-space ordering is (q1, p1, q2, p2).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>

namespace sympexp {

template <std::size_t N>
struct Matrix {
  std::array<double, N * N> data{};

  static constexpr std::size_t size = N;

  constexpr Matrix() = default;

  // Row-major initializer: {{a, b}, {c, d}}.
  constexpr Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (double v : row) {
        if (i < N && j < N) data[i * N + j] = v;
        ++j;
      }
      ++i;
    }
  }

  constexpr double& operator()(std::size_t i, std::size_t j) { return data[i * N + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return data[i * N + j]; }

  friend constexpr bool operator==(const Matrix&, const Matrix&) = default;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
constexpr Matrix<N> identity() {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i) r(i, i) = 1.0;
  return r;
}

template <std::size_t N>
constexpr Matrix<N> zero() {
  return Matrix<N>{};
}

/// Single-mode symplectic form [[0, 1], [-1, 0]].
constexpr Mat2 j2() { return Mat2{{0.0, 1.0}, {-1.0, 0.0}}; }

/// Two-mode symplectic form diag(J, J).
constexpr Mat4 omega4() {
  Mat4 r;
  r(0, 1) = 1.0;
  r(1, 0) = -1.0;
  r(2, 3) = 1.0;
  r(3, 2) = -1.0;
  return r;
}

constexpr double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

constexpr double trace2(const Mat2& m) { return m(0, 0) + m(1, 1); }

template <std::size_t N>
constexpr Matrix<N> operator*(const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const double xik = x(i, k);
      for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

template <std::size_t N>
constexpr Matrix<N> operator+(const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.data[i] = x.data[i] + y.data[i];
  return r;
}

template <std::size_t N>
constexpr Matrix<N> operator-(const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.data[i] = x.data[i] - y.data[i];
  return r;
}

template <std::size_t N>
constexpr Matrix<N> operator-(const Matrix<N>& x) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.data[i] = -x.data[i];
  return r;
}

template <std::size_t N>
constexpr Matrix<N> operator*(double s, const Matrix<N>& x) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.data[i] = s * x.data[i];
  return r;
}

template <std::size_t N>
constexpr Matrix<N> operator*(const Matrix<N>& x, double s) {
  return s * x;
}

template <std::size_t N>
constexpr Matrix<N>& operator+=(Matrix<N>& x, const Matrix<N>& y) {
  for (std::size_t i = 0; i < N * N; ++i) x.data[i] += y.data[i];
  return x;
}

template <std::size_t N>
constexpr Matrix<N> add(const Matrix<N>& x, const Matrix<N>& y) {
  return x + y;
}

template <std::size_t N>
constexpr Matrix<N> scale(double s, const Matrix<N>& x) {
  return s * x;
}

template <std::size_t N>
constexpr Matrix<N> matmul(const Matrix<N>& x, const Matrix<N>& y) {
  return x * y;
}

template <std::size_t N>
constexpr Matrix<N> transpose(const Matrix<N>& x) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = x(i, j);
  return r;
}

/// Entrywise infinity norm of x - y.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& x, const Matrix<N>& y) {
  double r = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) r = std::max(r, std::abs(x.data[i] - y.data[i]));
  return r;
}

template <std::size_t N>
double max_abs(const Matrix<N>& x) {
  return max_abs_diff(x, zero<N>());
}

/// Induced infinity norm (maximum absolute row sum).
template <std::size_t N>
double norm_inf(const Matrix<N>& x) {
  double r = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < N; ++j) row += std::abs(x(i, j));
    r = std::max(r, row);
  }
  return r;
}

template <std::size_t N>
bool all_finite(const Matrix<N>& x) {
  return std::all_of(x.data.begin(), x.data.end(), [](double v) { return std::isfinite(v); });
}

template <std::size_t N>
bool is_symmetric(const Matrix<N>& x) {
  return x == transpose(x);
}

// 2x2 block access: (0,0) upper-left, (0,1) upper-right, (1,0) lower-left, (1,1) lower-right.
constexpr Mat2 block(const Mat4& m, std::size_t bi, std::size_t bj) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(2 * bi + i, 2 * bj + j);
  return r;
}

constexpr Mat4 from_blocks(const Mat2& ul, const Mat2& ur, const Mat2& ll, const Mat2& lr) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      r(i, j) = ul(i, j);
      r(i, j + 2) = ur(i, j);
      r(i + 2, j) = ll(i, j);
      r(i + 2, j + 2) = lr(i, j);
    }
  return r;
}

/// Determinant of a 4x4 matrix by cofactor expansion along the first row.
constexpr double det4(const Mat4& m) {
  auto minor3 = [&m](std::size_t skip) {
    std::array<std::size_t, 3> c{};
    for (std::size_t j = 0, k = 0; j < 4; ++j)
      if (j != skip) c[k++] = j;
    return m(1, c[0]) * (m(2, c[1]) * m(3, c[2]) - m(2, c[2]) * m(3, c[1])) -
           m(1, c[1]) * (m(2, c[0]) * m(3, c[2]) - m(2, c[2]) * m(3, c[0])) +
           m(1, c[2]) * (m(2, c[0]) * m(3, c[1]) - m(2, c[1]) * m(3, c[0]));
  };
  double r = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    r += sign * m(0, j) * minor3(j);
  }
  return r;
}

}  // namespace sympexp

#endif  // SYMPEXP_LINALG_HPP
