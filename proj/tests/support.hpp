#ifndef AUTOSPEC_TESTS_SUPPORT_HPP
#define AUTOSPEC_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <boost/rational.hpp>

#include "autospec/mobius.hpp"

namespace testsupport {

using autospec::Complex;
using autospec::DiskAutomorphism;

constexpr double kPi = std::numbers::pi;

// Fixed seeds keep every randomized suite reproducible.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed2024ULL + salt); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_unit(std::mt19937_64& rng) { return std::polar(1.0, uniform(rng, 0.0, 2.0 * kPi)); }

/// Uniform in the disk of radius rmax.
inline Complex random_disk_point(std::mt19937_64& rng, double rmax) {
  return std::polar(rmax * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, 0.0, 2.0 * kPi));
}

inline DiskAutomorphism random_automorphism(std::mt19937_64& rng, double rmax = 0.9) {
  return DiskAutomorphism::make(random_unit(rng), random_disk_point(rng, rmax));
}

inline std::vector<Complex> boundary_samples(int count) {
  std::vector<Complex> out;
  for (int j = 0; j < count; ++j) out.push_back(std::polar(1.0, 2.0 * kPi * j / count));
  return out;
}

/// 100 points spread over |z| <= 0.95.
inline std::vector<Complex> interior_grid() {
  std::vector<Complex> out;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 0; j < 10; ++j) out.push_back(std::polar(0.095 * i, 2.0 * kPi * (j + 0.5 * (i % 2)) / 10));
  }
  return out;
}

// Plain 2x2 model of z -> (A z + B) / (C z + D), built straight from the
// formula lambda (a - z) / (1 - conj(a) z).
struct Mat2 {
  Complex A, B, C, D;
};

inline Mat2 mat_of(Complex lambda, Complex a) { return {-lambda, lambda * a, -std::conj(a), 1.0}; }

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.A * y.A + x.B * y.C, x.A * y.B + x.B * y.D, x.C * y.A + x.D * y.C, x.C * y.B + x.D * y.D};
}

inline Complex mat_apply(const Mat2& m, Complex z) { return (m.A * z + m.B) / (m.C * z + m.D); }

// Exact complex rationals for evaluation oracles.
using Q = boost::rational<long long>;

struct QComplex {
  Q re{0}, im{0};
};

inline QComplex operator+(QComplex x, QComplex y) { return {x.re + y.re, x.im + y.im}; }
inline QComplex operator-(QComplex x, QComplex y) { return {x.re - y.re, x.im - y.im}; }
inline QComplex operator*(QComplex x, QComplex y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline QComplex operator/(QComplex x, QComplex y) {
  const Q n = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}
inline QComplex qconj(QComplex x) { return {x.re, -x.im}; }
inline Complex to_complex(QComplex x) { return {boost::rational_cast<double>(x.re), boost::rational_cast<double>(x.im)}; }

/// lambda (a - z) / (1 - conj(a) z) in exact arithmetic.
inline QComplex rational_eval(QComplex lambda, QComplex a, QComplex z) {
  return lambda * (a - z) / (QComplex{Q(1), Q(0)} - qconj(a) * z);
}

/// Laplace expansion along the first row.
inline Complex cofactor_det(const std::vector<std::vector<Complex>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Complex total{};
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == Complex{}) continue;
    std::vector<std::vector<Complex>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Complex> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const double sign = (c % 2 == 0) ? 1.0 : -1.0;
    total += sign * m[0][c] * cofactor_det(minor);
  }
  return total;
}

/// Cyclic system f(lambda^{j+1} z) - mu f(lambda^j z) = g(lambda^j z):
/// -mu on the diagonal, 1 on the superdiagonal and in the corner.
inline std::vector<std::vector<Complex>> cyclic_matrix(Complex mu, int m) {
  std::vector<std::vector<Complex>> a(m, std::vector<Complex>(m));
  for (int i = 0; i < m; ++i) {
    a[i][i] += -mu;
    a[i][(i + 1) % m] += 1.0;
  }
  return a;
}

/// Gaussian elimination with partial pivoting.
inline std::vector<Complex> dense_solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

/// Random polynomial with coefficients in the unit square.
struct RandomPolynomial {
  std::vector<Complex> coeffs;
  Complex operator()(Complex z) const {
    Complex acc{};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
  }
};

inline RandomPolynomial random_polynomial(std::mt19937_64& rng, int degree) {
  RandomPolynomial p;
  for (int k = 0; k <= degree; ++k) p.coeffs.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return p;
}

/// Trapezoid-rule Cauchy coefficients of f on |z| = rho.
template <class F>
std::vector<Complex> cauchy_coefficients(F f, int count, double rho, int nodes) {
  std::vector<Complex> c(count);
  for (int j = 0; j < nodes; ++j) {
    const Complex w = std::polar(1.0, 2.0 * kPi * j / nodes);
    const Complex fz = f(rho * w);
    Complex wk_inv{1.0, 0.0};
    for (int k = 0; k < count; ++k) {
      c[k] += fz * wk_inv;
      wk_inv /= w;
    }
  }
  for (int k = 0; k < count; ++k) c[k] /= static_cast<double>(nodes) * std::pow(rho, k);
  return c;
}

}  // namespace testsupport

#endif  // AUTOSPEC_TESTS_SUPPORT_HPP
