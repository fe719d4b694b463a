#include "asch/schemes/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "asch/error.hpp"

namespace asch {
namespace {

// Colour refinement on a pair of relation matrices; b's relations are read
// through psi^-1 so that both sides count in a's index space.
class PairSearch {
 public:
  PairSearch(const RelationMatrix& a, const RelationMatrix& b, const std::vector<int>& psi)
      : a_(a), b_(b), psi_(psi), psi_inv_(psi.size()) {
    for (std::size_t i = 0; i < psi.size(); ++i) psi_inv_[psi[i]] = static_cast<int>(i);
  }

  struct Colours {
    std::vector<int> a, b;
    int count = 1;
  };

  Colours initial() const {
    Colours c;
    c.a.assign(a_.n(), 0);
    c.b.assign(b_.n(), 0);
    return c;
  }

  // False if the two colourings become incompatible.
  bool refine(Colours& c) const {
    const int n = a_.n();
    const int D = a_.d() + 1;
    std::vector<std::vector<int>> sig(2 * n);
    while (true) {
      for (int side = 0; side < 2; ++side) {
        const auto& col = side ? c.b : c.a;
        for (int v = 0; v < n; ++v) {
          auto& s = sig[side * n + v];
          s.clear();
          s.push_back(col[v]);
          for (int w = 0; w < n; ++w) {
            int rel = side ? psi_inv_[b_(v, w)] : a_(v, w);
            int rel_back = side ? psi_inv_[b_(w, v)] : a_(w, v);
            s.push_back((col[w] * D + rel) * D + rel_back);
          }
          std::sort(s.begin() + 1, s.end());
        }
      }
      std::map<std::vector<int>, int> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      int k = 0;
      for (auto& [s, id] : ids) id = k++;
      std::vector<int> hist(k, 0);
      for (int v = 0; v < n; ++v) ++hist[ids[sig[v]]];
      for (int v = 0; v < n; ++v)
        if (--hist[ids[sig[n + v]]] < 0) return false;
      const bool stable = k == c.count;
      for (int v = 0; v < n; ++v) {
        c.a[v] = ids[sig[v]];
        c.b[v] = ids[sig[n + v]];
      }
      c.count = k;
      if (stable) return true;
    }
  }

  static void individualize(Colours& c, int v, int w) {
    c.a[v] = c.count;
    c.b[w] = c.count;
    ++c.count;
  }

  // Smallest non-singleton colour class (lowest id on ties); -1 if discrete.
  static int target_cell(const Colours& c) {
    std::vector<int> size(c.count, 0);
    for (int x : c.a) ++size[x];
    int best = -1;
    for (int k = 0; k < c.count; ++k)
      if (size[k] > 1 && (best < 0 || size[k] < size[best])) best = k;
    return best;
  }

  bool is_isomorphism(const std::vector<int>& phi) const {
    const int n = a_.n();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (b_(phi[x], phi[y]) != psi_[a_(x, y)]) return false;
    return true;
  }

  // Visits every isomorphism below c; stops when visit returns false.
  template <class Visit>
  bool for_each(Colours c, Visit& visit) const {
    if (!refine(c)) return true;
    const int cell = target_cell(c);
    const int n = a_.n();
    if (cell < 0) {
      std::vector<int> at(c.count, -1), phi(n);
      for (int w = 0; w < n; ++w) at[c.b[w]] = w;
      for (int v = 0; v < n; ++v) phi[v] = at[c.a[v]];
      if (is_isomorphism(phi)) return visit(phi);
      return true;
    }
    int v = 0;
    while (c.a[v] != cell) ++v;
    for (int w = 0; w < n; ++w) {
      if (c.b[w] != cell) continue;
      Colours next = c;
      individualize(next, v, w);
      if (!for_each(std::move(next), visit)) return false;
    }
    return true;
  }

  std::optional<std::vector<int>> search(Colours c) const {
    if (!refine(c)) return std::nullopt;
    const int cell = target_cell(c);
    const int n = a_.n();
    if (cell < 0) {
      std::vector<int> at(c.count, -1), phi(n);
      for (int w = 0; w < n; ++w) at[c.b[w]] = w;
      for (int v = 0; v < n; ++v) phi[v] = at[c.a[v]];
      if (is_isomorphism(phi)) return phi;
      return std::nullopt;
    }
    int v = 0;
    while (c.a[v] != cell) ++v;
    for (int w = 0; w < n; ++w) {
      if (c.b[w] != cell) continue;
      Colours next = c;
      individualize(next, v, w);
      if (auto phi = search(std::move(next))) return phi;
    }
    return std::nullopt;
  }

 private:
  const RelationMatrix& a_;
  const RelationMatrix& b_;
  std::vector<int> psi_, psi_inv_;
};

std::vector<long> relation_sizes(const RelationMatrix& r) {
  std::vector<long> s(r.d() + 1, 0);
  for (int x = 0; x < r.n(); ++x)
    for (int y = 0; y < r.n(); ++y) ++s[r(x, y)];
  return s;
}

// Relation permutations psi (psi[0] = 0) with |R_i| = |R'_psi(i)|, identity first.
std::vector<std::vector<int>> candidate_psis(const RelationMatrix& a, const RelationMatrix& b, bool all) {
  std::vector<std::vector<int>> out;
  std::vector<int> psi(a.d() + 1);
  std::iota(psi.begin(), psi.end(), 0);
  auto sa = relation_sizes(a), sb = relation_sizes(b);
  do {
    bool ok = true;
    for (int i = 0; i <= a.d() && ok; ++i) ok = sa[i] == sb[psi[i]];
    if (ok) out.push_back(psi);
  } while (all && std::next_permutation(psi.begin() + 1, psi.end()));
  return out;
}

std::vector<int> orbit_of(int start, const std::vector<std::vector<int>>& gens) {
  std::vector<int> orbit{start};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : gens) {
      int y = g[orbit[k]];
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
    }
  return orbit;
}

bool fixes(const std::vector<int>& g, const std::vector<int>& points) {
  for (int p : points)
    if (g[p] != p) return false;
  return true;
}

// Orbit-stabilizer along a base chosen by individualization-refinement.
Integer count_automorphisms(const RelationMatrix& r) {
  std::vector<int> id(r.d() + 1);
  std::iota(id.begin(), id.end(), 0);
  PairSearch ps(r, r, id);
  std::vector<int> base;
  std::vector<std::vector<int>> cells;
  auto c = ps.initial();
  if (!ps.refine(c)) fail(ErrorKind::invariant, "refinement of a matrix against itself failed");
  while (true) {
    int cell = PairSearch::target_cell(c);
    if (cell < 0) break;
    std::vector<int> members;
    for (int v = 0; v < r.n(); ++v)
      if (c.a[v] == cell) members.push_back(v);
    base.push_back(members.front());
    cells.push_back(members);
    PairSearch::individualize(c, members.front(), members.front());
    ps.refine(c);
  }
  std::vector<std::vector<int>> gens;
  Integer order = 1;
  for (std::size_t lvl = base.size(); lvl-- > 0;) {
    const std::vector<int> prefix(base.begin(), base.begin() + lvl);
    std::vector<int> with_b = prefix;
    with_b.push_back(base[lvl]);
    auto level_gens = [&](const std::vector<int>& fixed) {
      std::vector<std::vector<int>> out;
      for (const auto& g : gens)
        if (fixes(g, fixed)) out.push_back(g);
      return out;
    };
    auto orbit = orbit_of(base[lvl], level_gens(prefix));
    std::vector<bool> rejected(r.n(), false);
    for (int cand : cells[lvl]) {
      if (rejected[cand] || std::find(orbit.begin(), orbit.end(), cand) != orbit.end()) continue;
      auto s = ps.initial();
      for (int p : prefix) PairSearch::individualize(s, p, p);
      PairSearch::individualize(s, base[lvl], cand);
      if (auto g = ps.search(std::move(s))) {
        gens.push_back(*g);
        orbit = orbit_of(base[lvl], level_gens(prefix));
      } else {
        for (int y : orbit_of(cand, level_gens(with_b))) rejected[y] = true;
      }
    }
    order *= static_cast<long>(orbit.size());
  }
  return order;
}

}  // namespace

std::optional<SchemeIsomorphism> are_isomorphic(const RelationMatrix& a, const RelationMatrix& b,
                                                bool allow_relation_permutation) {
  if (a.n() != b.n() || a.d() != b.d()) return std::nullopt;
  for (const auto& psi : candidate_psis(a, b, allow_relation_permutation)) {
    PairSearch ps(a, b, psi);
    if (auto phi = ps.search(ps.initial())) return SchemeIsomorphism{*phi, psi};
  }
  return std::nullopt;
}

Integer automorphism_count(const RelationMatrix& r, int vertex_bound) {
  if (r.n() > vertex_bound)
    fail(ErrorKind::refused, "automorphism count refused: " + std::to_string(r.n()) + " vertices exceed bound " +
                                 std::to_string(vertex_bound));
  return count_automorphisms(r);
}

std::vector<std::vector<int>> all_automorphisms(const RelationMatrix& r, std::size_t limit) {
  std::vector<int> id(r.d() + 1);
  std::iota(id.begin(), id.end(), 0);
  PairSearch ps(r, r, id);
  std::vector<std::vector<int>> out;
  auto visit = [&](const std::vector<int>& phi) {
    if (out.size() >= limit) fail(ErrorKind::refused, "more than " + std::to_string(limit) + " automorphisms");
    out.push_back(phi);
    return true;
  };
  ps.for_each(ps.initial(), visit);
  return out;
}

std::vector<std::vector<int>> relation_permutations_realized(const RelationMatrix& r) {
  std::vector<std::vector<int>> out;
  for (const auto& psi : candidate_psis(r, r, true)) {
    PairSearch ps(r, r, psi);
    if (ps.search(ps.initial())) out.push_back(psi);
  }
  return out;
}

Integer automorphism_count_with_relation_permutations(const RelationMatrix& r, int vertex_bound) {
  Integer base = automorphism_count(r, vertex_bound);
  return base * static_cast<long>(relation_permutations_realized(r).size());
}

}  // namespace asch
