#pragma once

#include <optional>
#include <random>
#include <set>

#include "asch/embed/embedding.hpp"

// Random Gram matrices and an exact PSD-rank oracle for compute_embedding.

namespace gram_oracle {

using namespace asch;

inline GramSpec spec_from(const Matrix<Rational>& c, long m) {
  GramSpec g;
  g.n = static_cast<int>(c.size());
  g.m = m;
  std::set<Rational> values;
  g.C.assign(g.n, std::vector<AlgebraicReal>(g.n));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      g.C[x][y] = AlgebraicReal(c[x][y]);
      values.insert(c[x][y]);
    }
  for (const auto& v : values) g.ip_table.emplace_back(v);
  return g;
}

// Rank of a PSD matrix by symmetric-pivoted LDL^T; nullopt when not PSD.
inline std::optional<int> psd_rank(Matrix<Rational> a) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> done(n, false);
  int rank = 0;
  while (true) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && (p < 0 || a[i][i] > a[p][p])) p = i;
    if (p < 0) return rank;
    if (a[p][p] < 0) return std::nullopt;
    if (a[p][p] == 0) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a[i][j] != 0) return std::nullopt;
      return rank;
    }
    done[p] = true;
    ++rank;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!done[i] && !done[j]) a[i][j] -= a[i][p] * a[p][j] / a[p][p];
  }
}

// Rational unit vector in Q^r by inverse stereographic projection.
inline std::vector<Rational> rational_unit_vector(int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<Rational> t(r - 1);
  Rational t2 = 0;
  for (auto& v : t) {
    v = make_rational(num(rng), den(rng));
    t2 += v * v;
  }
  std::vector<Rational> out;
  for (const auto& v : t) out.push_back(2 * v / (t2 + 1));
  out.push_back((t2 - 1) / (t2 + 1));
  return out;
}

inline Matrix<Rational> random_gram(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 8), dim(1, 4), kind(0, 2);
  const int n = size(rng);
  Matrix<Rational> c(n, std::vector<Rational>(n));
  if (kind(rng) > 0) {
    const int r = dim(rng);
    std::vector<std::vector<Rational>> vs;
    for (int x = 0; x < n; ++x) vs.push_back(rational_unit_vector(r, rng));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Rational s = 0;
        for (int k = 0; k < r; ++k) s += vs[x][k] * vs[y][k];
        c[x][y] = s;
      }
  } else {
    static const long nums[] = {-1, -1, -1, 0, 1, 1, 1}, dens[] = {1, 2, 3, 1, 3, 2, 1};
    std::uniform_int_distribution<int> pick(0, 6);
    for (int x = 0; x < n; ++x) {
      c[x][x] = 1;
      for (int y = 0; y < x; ++y) {
        int k = pick(rng);
        c[x][y] = c[y][x] = make_rational(nums[k], dens[k]);
      }
    }
  }
  return c;
}

}  // namespace gram_oracle
