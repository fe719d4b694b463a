#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "asch/error.hpp"
#include "asch/graphkit/graph.hpp"
#include "asch/schemes/isomorphism.hpp"

using namespace asch;

namespace {

SmallGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  SmallGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SmallGraph cycle(int n) {
  SmallGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SmallGraph complete_bipartite(int a, int b) {
  SmallGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SmallGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  SmallGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Isomorphism by trying every vertex permutation.
bool brute_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.n() != b.n()) return false;
  std::vector<int> p(a.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n() && ok; ++u)
      for (int v = 0; v < a.n() && ok; ++v) ok = a.has_edge(u, v) == b.has_edge(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Colourings normalized by first appearance, by exhausting k^n assignments.
std::set<std::vector<int>> brute_colourings(const SmallGraph& g, int k) {
  std::set<std::vector<int>> out;
  std::vector<int> c(g.n(), 0);
  while (true) {
    bool proper = true;
    for (int u = 0; u < g.n() && proper; ++u)
      for (int v : g.neighbours(u)) proper = proper && c[u] != c[v];
    if (proper) {
      std::vector<int> rename(k, -1), norm(g.n());
      int next = 0;
      for (int u = 0; u < g.n(); ++u) {
        if (rename[c[u]] < 0) rename[c[u]] = next++;
        norm[u] = rename[c[u]];
      }
      out.insert(norm);
    }
    int i = 0;
    while (i < g.n() && ++c[i] == k) c[i++] = 0;
    if (i == g.n()) break;
  }
  return out;
}

// Classes of (a, b, k)-biregular bipartite graphs by exhausting biadjacency matrices.
int brute_bipartite_classes(int a, int b, int k) {
  std::vector<unsigned> rows;
  for (unsigned s = 0; s < (1u << b); ++s)
    if (__builtin_popcount(s) == k) rows.push_back(s);
  std::vector<SmallGraph> reps;
  std::vector<unsigned> pick(a);
  auto rec = [&](auto&& self, int r) -> void {
    if (r == a) {
      std::vector<int> cs(b, 0);
      for (unsigned s : pick)
        for (int c = 0; c < b; ++c) cs[c] += s >> c & 1;
      for (int c = 1; c < b; ++c)
        if (cs[c] != cs[0]) return;
      SmallGraph g(a + b);
      for (int i = 0; i < a; ++i)
        for (int c = 0; c < b; ++c)
          if (pick[i] >> c & 1) g.add_edge(i, a + c);
      for (const auto& h : reps)
        if (brute_isomorphic(g, h)) return;
      reps.push_back(g);
      return;
    }
    for (unsigned s : rows) {
      pick[r] = s;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  return static_cast<int>(reps.size());
}

}  // namespace

TEST_CASE("basic graph operations") {
  SmallGraph g = cycle(5);
  CHECK(g.edge_count() == 5);
  CHECK(g.out_degree(0) == 2);
  CHECK(g.neighbours(0) == std::vector<int>{1, 4});
  g.remove_edge(0, 1);
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK(component_sizes(g) == std::vector<int>{5});
  g.remove_edge(2, 3);
  CHECK(component_sizes(g) == std::vector<int>{2, 3});
  CHECK_THROWS_AS(SmallGraph(65), Error);

  SmallGraph d(3, true);
  d.add_edge(0, 1);
  d.add_edge(1, 0);
  d.add_edge(1, 2);
  CHECK(d.edge_count() == 3);
  CHECK(d.in_degree(2) == 1);
  auto r = d.relation_matrix();
  CHECK(r.d() == 4);
  CHECK(r(0, 1) == 3);
  CHECK(r(1, 2) == 1);
  CHECK(r(2, 1) == 2);
  CHECK(r(0, 2) == 4);
}

TEST_CASE("relation matrix drops unused relations") {
  SmallGraph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK(k4.relation_matrix().d() == 1);
  CHECK(cycle(5).relation_matrix().d() == 2);
  SmallGraph tour(3, true);
  tour.add_edge(0, 1);
  tour.add_edge(1, 2);
  tour.add_edge(2, 0);
  CHECK(tour.relation_matrix().d() == 2);
}

TEST_CASE("distance powers") {
  // the distance-2 graph of K33 is two triangles
  auto k33 = complete_bipartite(3, 3);
  auto d2 = distance_power(k33, 2);
  CHECK(component_sizes(d2) == std::vector<int>{3, 3});
  CHECK(d2.edge_count() == 6);
  CHECK(component_sizes(distance_power(cycle(6), 2)) == std::vector<int>{3, 3});
  CHECK(distance_power(cycle(7), 3).edge_count() == 7);
  CHECK(distance_power(cycle(7), 4).edge_count() == 0);
}

TEST_CASE("colourability") {
  SmallGraph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK_FALSE(chromatic_at_most(k4, 3));
  CHECK(chromatic_at_most(k4, 4));
  CHECK_FALSE(chromatic_at_most(cycle(7), 2));
  auto c = chromatic_at_most(cycle(7), 3);
  REQUIRE(c);
  for (int u = 0; u < 7; ++u) CHECK((*c)[u] != (*c)[(u + 1) % 7]);
  CHECK(all_colourings(cycle(6), 2).size() == 1);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 6, k = 2 + trial % 3;
    auto g = random_graph(n, 0.45, rng);
    auto brute = brute_colourings(g, k);
    auto fast = all_colourings(g, k);
    CHECK(std::set<std::vector<int>>(fast.begin(), fast.end()) == brute);
    CHECK(fast.size() == brute.size());
    CHECK(chromatic_at_most(g, k).has_value() == !brute.empty());
  }
}

TEST_CASE("cliques and spreads") {
  // K3 x K3 rook graph: rows and columns are its two spreads
  SmallGraph rook(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) rook.add_edge(u, v);
  CHECK(maximal_cliques(rook).size() == 6);
  auto sp = spreads(rook);
  CHECK(sp.size() == 2);
  for (const auto& s : sp) CHECK(s.size() == 3);

  SmallGraph k5(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  CHECK(maximal_cliques(k5).size() == 1);
  CHECK(spreads(k5).size() == 1);

  // Petersen is triangle-free: 15 edge cliques
  auto pet = from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK(maximal_cliques(pet).size() == 15);
  CHECK(spreads(pet).size() == 6);  // perfect matchings of Petersen
}

TEST_CASE("maximal cliques match a subset oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + trial % 6;
    auto g = random_graph(n, 0.5, rng);
    std::set<std::vector<int>> oracle;
    for (unsigned s = 1; s < (1u << n); ++s) {
      std::vector<int> vs;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1) vs.push_back(v);
      bool clique = true;
      for (std::size_t i = 0; i < vs.size() && clique; ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) clique = clique && g.has_edge(vs[i], vs[j]);
      if (!clique) continue;
      bool maximal = true;
      for (int w = 0; w < n && maximal; ++w) {
        if (s >> w & 1) continue;
        bool all = true;
        for (int v : vs) all = all && g.has_edge(v, w);
        maximal = !all;
      }
      if (maximal) oracle.insert(vs);
    }
    auto mc = maximal_cliques(g);
    CHECK(std::set<std::vector<int>>(mc.begin(), mc.end()) == oracle);
  }
}

TEST_CASE("biregular bipartite generation") {
  CHECK(gen_regular_bipartite(3, 3, 3).size() == 1);
  CHECK(gen_regular_bipartite(2, 2, 1).size() == 1);
  CHECK(gen_regular_bipartite(4, 4, 2).size() == 2);  // C8 and 2C4
  CHECK(gen_regular_bipartite(3, 4, 2).size() == 0);  // 6 != 8 edges
  for (auto [a, b, k] : std::vector<std::tuple<int, int, int>>{
           {3, 3, 1}, {3, 3, 2}, {4, 4, 2}, {4, 4, 3}, {2, 4, 2}, {4, 2, 1}, {3, 6, 2}, {4, 4, 1}})
    CHECK_MESSAGE(static_cast<int>(gen_regular_bipartite(a, b, k).size()) == brute_bipartite_classes(a, b, k),
                  a << "," << b << "," << k);
  CHECK_THROWS_AS(gen_regular_bipartite(10, 10, 3), Error);
}

TEST_CASE("cubic bipartite graphs on 12 and 14 vertices") {
  // connected counts 5 and 13; disconnected K33 + K33 adds one on 12
  auto g12 = gen_regular_bipartite(6, 6, 3);
  CHECK(g12.size() == 6);
  auto connected = [](const SmallGraph& g) { return component_sizes(g).size() == 1; };
  CHECK(gen_regular_bipartite(6, 6, 3, connected).size() == 5);
  CHECK(gen_regular_bipartite(7, 7, 3, connected).size() == 13);
  for (const auto& g : g12)
    for (int v = 0; v < 12; ++v) CHECK(g.out_degree(v) == 3);
}

TEST_CASE("one-factors of digraphs") {
  // directed 3-cycle: one factor; complete digraph on 3: derangements
  SmallGraph tour(3, true);
  tour.add_edge(0, 1);
  tour.add_edge(1, 2);
  tour.add_edge(2, 0);
  CHECK(all_one_factors(tour).size() == 1);
  SmallGraph k3(3, true);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v) k3.add_edge(u, v);
  CHECK(all_one_factors(k3).size() == 2);
  auto census = enumerate_one_factors(k3);
  CHECK(census.total == 2);
  CHECK(census.group_order == 6);
  CHECK(census.factors.size() == 1);

  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + trial % 5;
    SmallGraph d(n, true);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng)) d.add_edge(u, v);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::size_t brute = 0;
    do {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) ok = d.has_edge(v, p[v]);
      brute += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(all_one_factors(d).size() == brute);
  }
}

TEST_CASE("one-factor orbits of a directed cycle of triangles") {
  // vertices (i, a) for i in Z4, a in Z3, arcs (i, a) -> (i+1, b) for all b:
  // 6^4 factors, automorphisms S3^4 x Z4
  SmallGraph d(12, true);
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) d.add_edge(i * 3 + a, ((i + 1) % 4) * 3 + b);
  auto census = enumerate_one_factors(d);
  CHECK(census.total == 1296);
  CHECK(census.group_order == 1296 * 4);
  // orbits follow the conjugacy class of the composed return map on one
  // triangle; the rotation preserves classes
  CHECK(census.factors.size() == 3);
}

TEST_CASE("graph file round trip") {
  std::vector<SmallGraph> gs{cycle(5), complete_bipartite(2, 3), SmallGraph(1)};
  std::stringstream ss;
  write_graphs(ss, gs);
  auto back = read_graphs(ss);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == gs[i]);
  std::stringstream bad("01\n00\n");
  CHECK_THROWS_AS(read_graphs(bad), Error);
  std::stringstream ragged("011\n10\n");
  CHECK_THROWS_AS(read_graphs(ragged), Error);
}

TEST_CASE("graph isomorphism agrees with brute force") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + trial % 4;
    auto a = random_graph(n, 0.5, rng), b = random_graph(n, 0.5, rng);
    CHECK(graphs_isomorphic(a, b) == brute_isomorphic(a, b));
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    SmallGraph c(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (a.has_edge(u, v)) c.add_edge(p[u], p[v]);
    CHECK(graphs_isomorphic(a, c));
  }
}
