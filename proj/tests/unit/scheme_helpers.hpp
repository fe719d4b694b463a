#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "asch/schemes/relation_matrix.hpp"

// Small independent constructions used as oracles.

inline asch::RelationMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows, int d) {
  asch::RelationMatrix r(static_cast<int>(rows.size()), d);
  for (int x = 0; x < r.n(); ++x)
    for (int y = 0; y < r.n(); ++y) r(x, y) = rows[x][y];
  return r;
}

// Distance classes of a connected graph given by adjacency lists.
inline asch::RelationMatrix distance_matrix(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  asch::RelationMatrix r(n, 0);
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), queue{s};
    dist[s] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int w : adj[queue[q]])
        if (dist[w] < 0) dist[w] = dist[queue[q]] + 1, queue.push_back(w);
    for (int t = 0; t < n; ++t) {
      r(s, t) = dist[t];
      diam = std::max(diam, dist[t]);
    }
  }
  asch::RelationMatrix out(n, diam);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out(x, y) = r(x, y);
  return out;
}

inline std::vector<std::vector<int>> petersen_adjacency() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<int>> adj(10);
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y) {
      auto [a, b] = pairs[x];
      auto [c, d] = pairs[y];
      if (a != c && a != d && b != c && b != d) adj[x].push_back(y);
    }
  return adj;
}

inline std::vector<std::vector<int>> cycle_adjacency(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = {(i + 1) % n, (i + n - 1) % n};
  return adj;
}

// Cayley graph on Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1).
inline std::vector<std::vector<int>> shrikhande_adjacency() {
  std::vector<std::vector<int>> adj(16);
  const int steps[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& s : steps) adj[a * 4 + b].push_back(((a + s[0]) % 4) * 4 + (b + s[1]) % 4);
  return adj;
}

inline asch::RelationMatrix permute_vertices(const asch::RelationMatrix& r, const std::vector<int>& phi) {
  asch::RelationMatrix out(r.n(), r.d());
  for (int x = 0; x < r.n(); ++x)
    for (int y = 0; y < r.n(); ++y) out(phi[x], phi[y]) = r(x, y);
  return out;
}

// Brute-force count of vertex permutations preserving every relation (n <= 9).
inline long brute_force_automorphisms(const asch::RelationMatrix& r) {
  std::vector<int> p(r.n());
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int x = 0; x < r.n() && ok; ++x)
      for (int y = 0; y < r.n() && ok; ++y) ok = r(p[x], p[y]) == r(x, y);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Naive triangle count per pair compared across pairs of one relation.
inline bool brute_force_is_scheme(const asch::RelationMatrix& r) {
  const int n = r.n(), D = r.d() + 1;
  std::vector<std::vector<long>> seen(D);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<long> c(D * D, 0);
      for (int z = 0; z < n; ++z) c[r(x, z) * D + r(z, y)]++;
      auto& s = seen[r(x, y)];
      if (s.empty())
        s = c;
      else if (s != c)
        return false;
    }
  return true;
}
