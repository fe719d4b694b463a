#include "asch/exact/linalg.hpp"

namespace asch {

Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

int rank(Matrix<Rational> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

RationalPolynomial interpolate_at_naturals(std::vector<Rational> ys) {
  const std::size_t n = ys.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / Rational(static_cast<long>(level));
  RationalPolynomial p;
  for (std::size_t i = n; i-- > 0;)
    p = p * RationalPolynomial({Rational(-static_cast<long>(i)), Rational(1)}) + RationalPolynomial::constant(ys[i]);
  return p;
}

RationalPolynomial characteristic_polynomial(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  std::vector<Rational> ys;
  for (std::size_t x = 0; x <= n; ++x) {
    Matrix<Rational> a = m;
    for (auto& row : a)
      for (auto& v : row) v = -v;
    for (std::size_t i = 0; i < n; ++i) a[i][i] += Rational(static_cast<long>(x));
    ys.push_back(determinant(std::move(a)));
  }
  return interpolate_at_naturals(std::move(ys));
}

}  // namespace asch
