#include <algorithm>
#include <array>
#include <numeric>

#include "asch/error.hpp"
#include "asch/families/families.hpp"
#include "asch/params/imprim.hpp"
#include "asch/schemes/isomorphism.hpp"
#include "common.hpp"

namespace asch::studies {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// Number of R_rel-neighbours a vertex has inside a block it does not belong to;
// invariant error if it depends on the relation to the block.
long per_block_count(const IntersectionTensor& t, const std::vector<int>& tilde0, int rel) {
  long count = -1;
  for (int h = 1; h <= t.d(); ++h) {
    if (std::find(tilde0.begin(), tilde0.end(), h) != tilde0.end()) continue;
    long s = 0;
    for (int i : tilde0) s += t.p(h, i, rel);
    require(count < 0 || count == s, ErrorKind::invariant, "per-block count depends on the relation");
    count = s;
  }
  return count;
}

// Spread-like structure: blocks are R_w-cliques of size s, and a vertex has
// e R_1-neighbours and s - e R_o-neighbours in every other block.
struct SpreadCase {
  int s = 0, e = 0, w = 2, o = 3;
};

// Relation matrix on blocks of size s with R1 given by per-vertex profiles:
// profiles[b][y] lists the R1-neighbours of vertex y of block b among all
// earlier blocks, as global indices.
RelationMatrix assemble(const SpreadCase& sc, int d, const std::vector<std::vector<int>>& r1) {
  const int n = static_cast<int>(r1.size());
  RelationMatrix r(n, d);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) r.set_symmetric(x, y, x / sc.s == y / sc.s ? sc.w : sc.o);
  for (int y = 0; y < n; ++y)
    for (int x : r1[y]) r.set_symmetric(x, y, 1);
  return r;
}

// Second blocks up to isomorphism: R1 profiles of its vertices against the
// first block, pruned by embeddability of every prefix. Leaves are rechecked
// with compute_embedding.
std::vector<RelationMatrix> second_blocks(const CaseContext& c, const SpreadCase& sc, long& nodes) {
  const int d = c.tensor.d();
  const auto& ip = c.ip();
  auto subs = subsets(sc.s, sc.e);
  const int ns = static_cast<int>(subs.size());
  IncrementalGram gram(c.m());
  for (int x = 0; x < sc.s; ++x) {
    std::vector<AlgebraicReal> col(x, ip[sc.w]);
    require(gram.push(col), ErrorKind::invariant, "first block does not embed");
  }
  std::vector<std::vector<AlgebraicReal>> against_first(ns, std::vector<AlgebraicReal>(sc.s, ip[sc.o]));
  for (int p = 0; p < ns; ++p)
    for (int x : subs[p]) against_first[p][x] = ip[1];
  auto push = [&](int p) {
    auto col = against_first[p];
    col.resize(gram.rows(), ip[sc.w]);
    return gram.push(col);
  };
  // Pairwise filter first: two vertices of the second block with profiles p <= q.
  std::vector<std::vector<char>> pair_ok(ns, std::vector<char>(ns, 0));
  for (int p = 0; p < ns; ++p) {
    if (!push(p)) continue;
    for (int q = p; q < ns; ++q)
      if (push(q)) {
        pair_ok[p][q] = pair_ok[q][p] = 1;
        gram.pop();
      }
    gram.pop();
  }

  std::vector<RelationMatrix> found;
  std::vector<int> chosen, column(sc.s, 0);
  nodes = 0;
  // Profiles in non-decreasing order; the first is {0..e-1} by symmetry of the first block.
  auto rec = [&](auto&& self, int start) -> void {
    ++nodes;
    if (static_cast<int>(chosen.size()) == sc.s) {
      if (std::all_of(column.begin(), column.end(), [&](int k) { return k == sc.e; })) {
        std::vector<std::vector<int>> r1(sc.s);
        for (int p : chosen) r1.push_back(subs[p]);
        found.push_back(assemble(sc, d, r1));
        require(bool(embed(c, found.back())), ErrorKind::invariant, "incremental Gram test and compute_embedding disagree");
      }
      return;
    }
    for (int p = start; p < ns; ++p) {
      bool ok = true;
      for (int q : chosen) ok = ok && pair_ok[q][p];
      for (int x : subs[p]) ok = ok && column[x] < sc.e;
      if (!ok || !push(p)) {
        if (chosen.empty()) break;
        continue;
      }
      chosen.push_back(p);
      for (int x : subs[p]) ++column[x];
      self(self, p);
      for (int x : subs[p]) --column[x];
      chosen.pop_back();
      gram.pop();
      if (chosen.empty()) break;
    }
  };
  rec(rec, 0);
  std::vector<RelationMatrix> reps;
  for (int i : isomorphism_representatives(found)) reps.push_back(found[i]);
  return reps;
}

// Disjoint sets of cliques of size s in `same`, pairwise joined only by `cross`.
std::vector<std::vector<int>> block_systems(const std::vector<std::vector<char>>& same,
                                            const std::vector<std::vector<char>>& cross, int s, int blocks) {
  const int n = static_cast<int>(same.size());
  std::vector<std::vector<int>> cliques;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == s) {
      cliques.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur) ok = ok && same[u][v];
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<std::vector<int>> systems;
  std::vector<int> pick;
  auto joinable = [&](int a, int b) {
    for (int u : cliques[a])
      for (int v : cliques[b])
        if (u == v || !cross[u][v]) return false;
    return true;
  };
  auto comb = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == blocks) {
      std::vector<int> all;
      for (int k : pick) all.insert(all.end(), cliques[k].begin(), cliques[k].end());
      systems.push_back(all);
      return;
    }
    for (int k = start; k < static_cast<int>(cliques.size()); ++k) {
      bool ok = true;
      for (int q : pick) ok = ok && joinable(q, k);
      if (!ok) continue;
      pick.push_back(k);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  comb(comb, 0);
  return systems;
}

CaseTranscript run_spread_case(const std::string& tag, const std::string& array, const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context(array, 1);
  const int d = c.tensor.d();
  require(d == 3, ErrorKind::invariant, tag + ": expected three classes");
  SpreadCase sc;
  sc.s = static_cast<int>(c.tensor.k(2)) + 1;
  sc.e = static_cast<int>(per_block_count(c.tensor, {0, 2}, 1));
  require(per_block_count(c.tensor, {0, 2}, 3) == sc.s - sc.e, ErrorKind::invariant, tag + ": block counts");
  const int nblocks = static_cast<int>(c.tensor.n() / sc.s);
  t.notes.push_back("blocks of " + std::to_string(sc.s) + ", " + std::to_string(sc.e) +
                    " R1-neighbours per block, m_1 = " + std::to_string(c.m()));

  progress(o, tag + ": second block");
  long nodes = 0;
  auto a2 = second_blocks(c, sc, nodes);
  t.notes.push_back(std::to_string(nodes) + " search nodes for the second block");
  std::vector<EmbeddingMatrix> embedded;
  for (const auto& r : a2)
    if (auto res = embed(c, r)) embedded.push_back(*res.matrix);
  t.stages.push_back({"A2", static_cast<long>(a2.size()), static_cast<long>(embedded.size())});

  auto subs = subsets(sc.s, sc.e);
  std::vector<std::vector<int>> profiles;
  for (const auto& p : subs)
    for (const auto& q : subs) {
      std::vector<int> prof(2 * sc.s, sc.o);
      for (int x : p) prof[x] = 1;
      for (int x : q) prof[sc.s + x] = 1;
      profiles.push_back(prof);
    }

  long hits_total = 0, systems_total = 0, assembled = 0;
  for (std::size_t k = 0; k < embedded.size(); ++k) {
    const auto& u = embedded[k];
    require(u.full_rank(), ErrorKind::invariant, tag + ": embedded A2 is not of full rank");
    progress(o, tag + ": extension " + std::to_string(k + 1) + "/" + std::to_string(embedded.size()));
    auto hits = extension_search(c, u, profiles, o.jobs);
    hits_total += static_cast<long>(hits.vectors.size());
    const int ny = static_cast<int>(hits.vectors.size());
    std::vector<std::vector<char>> same(ny, std::vector<char>(ny, 0)), cross = same;
    for (int a = 0; a < ny; ++a)
      for (int b = a + 1; b < ny; ++b) {
        auto ip = EmbeddingMatrix::inner(hits.vectors[a], hits.vectors[b]);
        same[a][b] = same[b][a] = ip == c.ip()[sc.w];
        cross[a][b] = cross[b][a] = ip == c.ip()[1] || ip == c.ip()[sc.o];
      }
    auto systems = block_systems(same, cross, sc.s, nblocks - 2);
    systems_total += static_cast<long>(systems.size());
    for (const auto& sys : systems) {
      auto rows = rows_of(u);
      for (int v : sys) rows.push_back(hits.vectors[v]);
      auto r = classify_all(c, rows);
      if (r && verify_assembly(c, *r)) ++assembled;
    }
  }
  t.stages.push_back({"extension", static_cast<long>(profiles.size()), hits_total,
                      static_cast<long>(embedded.size())});
  t.stages.push_back({"block systems", hits_total, systems_total, static_cast<long>(embedded.size())});
  t.stages.push_back({"assembly", systems_total, assembled});
  t.verdict = assembled == 0 ? Verdict::nonexistence : Verdict::example_reconstructed;
  return t;
}

}  // namespace

CaseTranscript run_qpg3_12_35_16(const CaseOptions& o) {
  return run_spread_case("qpg3_12_35_16", "[[12, 6, 16], [4, 3; 3]]", o);
}

CaseTranscript run_qpg3_18_40_12(const CaseOptions& o) {
  return run_spread_case("qpg3_18_40_12", "[[18, 9, 12], [10, 6; 6]]", o);
}

// Blocks of eight are two R3-cliques joined by R2. Since p^3_11 = 0 the R1
// edges between two blocks are four perfect matchings between their cliques.
CaseTranscript run_smith40_unique(const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context("[[8, 4, 3, 24], [2, 0, 2; 0, 1; 1]]", 4);
  const int d = c.tensor.d();
  require(c.tensor.p(3, 1, 1) == 0 && per_block_count(c.tensor, {0, 2, 3}, 1) == 2, ErrorKind::invariant,
          "smith40: unexpected block structure");
  auto in_block = [](int x, int y) { return x / 4 == y / 4 ? 3 : 2; };

  // Cliques 0-3, 4-7 | 8-11, 12-15. Three matchings are the identity after relabeling.
  std::vector<RelationMatrix> raw;
  std::array<int, 4> pi{0, 1, 2, 3};
  do {
    RelationMatrix r(16, d);
    for (int x = 0; x < 16; ++x)
      for (int y = x + 1; y < 16; ++y) r.set_symmetric(x, y, x / 8 == y / 8 ? in_block(x % 8, y % 8) : 4);
    for (int a = 0; a < 4; ++a) {
      r.set_symmetric(a, 8 + a, 1);
      r.set_symmetric(a, 12 + a, 1);
      r.set_symmetric(4 + a, 8 + a, 1);
      r.set_symmetric(4 + a, 12 + pi[a], 1);
    }
    raw.push_back(r);
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::vector<RelationMatrix> a2;
  for (int i : isomorphism_representatives(raw)) a2.push_back(raw[i]);
  std::vector<int> a2_ok;
  for (std::size_t i = 0; i < a2.size(); ++i) {
    auto res = embed(c, a2[i]);
    if (res) {
      a2_ok.push_back(static_cast<int>(i));
      t.notes.push_back("A2 candidate " + std::to_string(i) + " embeds with rank " + std::to_string(res.matrix->rank()));
    }
  }
  t.stages.push_back({"A2", static_cast<long>(a2.size()), static_cast<long>(a2_ok.size())});

  // Third block: every vertex meets each of the four cliques once, and the
  // picks of one new clique form a matching into each old clique.
  std::vector<std::vector<int>> picks;
  for (int code = 0; code < 256; ++code) {
    std::vector<int> p(4);
    for (int q = 0; q < 4; ++q) p[q] = (code >> (2 * (3 - q))) & 3;
    picks.push_back(p);
  }
  std::vector<RelationMatrix> a3_raw;
  long nodes = 0;
  for (int i : a2_ok) {
    progress(o, "smith40: third block over A2 candidate " + std::to_string(i));
    std::vector<int> chosen;
    auto build = [&]() {
      const int n = 16 + static_cast<int>(chosen.size());
      RelationMatrix r(n, d);
      for (int x = 0; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) r.set_symmetric(x, y, a2[i](x, y));
      for (int a = 0; a < static_cast<int>(chosen.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(chosen.size()); ++b) r.set_symmetric(16 + a, 16 + b, in_block(a, b));
        for (int x = 0; x < 16; ++x) r.set_symmetric(16 + a, x, 4);
        for (int q = 0; q < 4; ++q) r.set_symmetric(16 + a, 4 * q + picks[chosen[a]][q], 1);
      }
      return r;
    };
    auto rec = [&](auto&& self) -> void {
      ++nodes;
      const int k = static_cast<int>(chosen.size());
      if (k == 8) {
        a3_raw.push_back(build());
        return;
      }
      // increasing within each new clique
      int start = k % 4 == 0 ? 0 : chosen.back() + 1;
      for (int p = start; p < 256; ++p) {
        bool ok = true;
        for (int a = k - k % 4; a < k && ok; ++a)
          for (int q = 0; q < 4; ++q) ok = ok && picks[chosen[a]][q] != picks[p][q];
        if (!ok) continue;
        chosen.push_back(p);
        if (embed(c, build())) self(self);
        chosen.pop_back();
      }
    };
    rec(rec);
  }
  t.notes.push_back(std::to_string(nodes) + " search nodes for the third block");
  std::vector<RelationMatrix> a3;
  for (int i : isomorphism_representatives(a3_raw)) a3.push_back(a3_raw[i]);
  std::vector<EmbeddingMatrix> embedded;
  for (const auto& r : a3)
    if (auto res = embed(c, r)) embedded.push_back(*res.matrix);
  t.stages.push_back({"A3", static_cast<long>(a3.size()), static_cast<long>(embedded.size())});

  // One R1-neighbour in each of the six cliques, R4 elsewhere.
  std::vector<std::vector<int>> profiles;
  for (int code = 0; code < 4096; ++code) {
    std::vector<int> p(24, 4);
    for (int q = 0; q < 6; ++q) p[4 * q + ((code >> (2 * (5 - q))) & 3)] = 1;
    profiles.push_back(p);
  }
  std::vector<RelationMatrix> assembled;
  long hits_total = 0, systems_total = 0;
  for (std::size_t k = 0; k < embedded.size(); ++k) {
    const auto& u = embedded[k];
    require(u.full_rank(), ErrorKind::invariant, "smith40: embedded A3 is not of full rank");
    progress(o, "smith40: extension " + std::to_string(k + 1) + "/" + std::to_string(embedded.size()));
    auto hits = extension_search(c, u, profiles, o.jobs);
    const int ny = static_cast<int>(hits.vectors.size());
    hits_total += ny;
    std::vector<std::vector<char>> same(ny, std::vector<char>(ny, 0)), cross = same;
    for (int a = 0; a < ny; ++a)
      for (int b = a + 1; b < ny; ++b) {
        auto ip = EmbeddingMatrix::inner(hits.vectors[a], hits.vectors[b]);
        same[a][b] = same[b][a] = ip == c.ip()[2] || ip == c.ip()[3];
        cross[a][b] = cross[b][a] = ip == c.ip()[1] || ip == c.ip()[4];
      }
    auto systems = block_systems(same, cross, 8, 2);
    systems_total += static_cast<long>(systems.size());
    for (const auto& sys : systems) {
      auto rows = rows_of(u);
      for (int v : sys) rows.push_back(hits.vectors[v]);
      auto r = classify_all(c, rows);
      if (r && verify_assembly(c, *r)) assembled.push_back(*r);
    }
  }
  t.stages.push_back({"extension", static_cast<long>(profiles.size()), hits_total,
                      static_cast<long>(embedded.size())});
  t.stages.push_back({"block systems", hits_total, systems_total});
  t.stages.push_back({"assembly", systems_total, static_cast<long>(assembled.size())});
  if (assembled.empty()) {
    t.verdict = Verdict::nonexistence;
    return t;
  }
  auto classes = isomorphism_representatives(assembled);
  t.stages.push_back({"isomorphism classes", static_cast<long>(assembled.size()), static_cast<long>(classes.size())});
  if (classes.size() != 1) {
    t.verdict = Verdict::example_reconstructed;
    return t;
  }
  t.scheme = assembled[0];
  bool known = are_isomorphic(assembled[0], special_scheme("smith40").matrix).has_value();
  t.notes.push_back(std::string("isomorphic to smith40: ") + (known ? "yes" : "no"));
  t.automorphisms = automorphism_count(assembled[0]);
  t.verdict = Verdict::uniqueness;
  return t;
}

}  // namespace asch::studies
