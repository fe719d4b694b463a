#pragma once

#include <optional>
#include <vector>

#include "asch/exact/polynomial.hpp"

namespace asch {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<T>(rows, std::vector<T>(cols, T(0)));
}

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
  auto m = zero_matrix<T>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t r = a.size(), c = b.empty() ? 0 : b[0].size(), inner = b.size();
  auto out = zero_matrix<T>(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (is_zero_value(a[i][k])) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

template <class T>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<T>& v) {
  std::vector<T> out(a.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += a[i][k] * v[k];
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.empty()) return a;
  auto out = zero_matrix<T>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Solves a x = b for square a; nullopt if a is singular.
template <class T>
std::optional<Matrix<T>> solve(Matrix<T> a, Matrix<T> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero_value(a[p][c])) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    T inv = T(1) / a[c][c];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero_value(a[r][c])) continue;
      T f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      for (std::size_t k = 0; k < m; ++k) b[r][k] -= f * b[c][k];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    T inv = T(1) / a[r][r];
    for (std::size_t k = 0; k < m; ++k) b[r][k] *= inv;
  }
  return b;
}

Rational determinant(Matrix<Rational> m);
int rank(Matrix<Rational> m);
// det(x I - m)
RationalPolynomial characteristic_polynomial(const Matrix<Rational>& m);
// Newton interpolation through (k, ys[k]) for k = 0..ys.size()-1.
RationalPolynomial interpolate_at_naturals(std::vector<Rational> ys);

}  // namespace asch
