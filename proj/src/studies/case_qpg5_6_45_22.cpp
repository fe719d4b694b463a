#include <algorithm>
#include <deque>
#include <fstream>

#include "asch/error.hpp"
#include "common.hpp"

namespace asch::studies {

namespace {

bool distance2_three_colourable(const SmallGraph& g) { return chromatic_at_most(distance_power(g, 2), 3).has_value(); }

// Side of each vertex; the smallest vertex of every component goes to side 0.
std::vector<int> bipartition(const SmallGraph& g) {
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : g.neighbours(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          q.push_back(y);
        } else if (side[y] == side[x]) {
          fail(ErrorKind::invariant, "census graph is not bipartite");
        }
      }
    }
  }
  return side;
}

// X1 + X2 from a census graph and a colouring of its sides into R3-cliques.
RelationMatrix build_a2(const SmallGraph& g, const std::vector<int>& order, const std::vector<int>& side,
                        const std::vector<int>& colour, int d) {
  RelationMatrix r(18, d);
  for (int a = 0; a < 18; ++a)
    for (int b = a + 1; b < 18; ++b) {
      int x = order[a], y = order[b];
      int rel;
      if (side[x] != side[y]) rel = g.has_edge(x, y) ? 1 : 5;
      else rel = colour[x] == colour[y] ? 3 : 4;
      r.set_symmetric(a, b, rel);
    }
  return r;
}

// Adds a third triclique in R2 to the first two.
RelationMatrix extend_a3(const RelationMatrix& a2) {
  RelationMatrix r(27, a2.d());
  for (int x = 0; x < 18; ++x)
    for (int y = x + 1; y < 18; ++y) r.set_symmetric(x, y, a2(x, y));
  for (int x = 0; x < 9; ++x) {
    for (int y = x + 1; y < 9; ++y) r.set_symmetric(18 + x, 18 + y, x / 3 == y / 3 ? 3 : 4);
    for (int z = 0; z < 18; ++z) r.set_symmetric(18 + x, z, 2);
  }
  return r;
}

}  // namespace

// Cubic bipartite graphs on 18 vertices as R1 between two tricliques.
CaseTranscript run_qpg5_6_45_22(const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context("[[6, 18, 2, 6, 12], [1, 0, 2, 0; 0, 0, 3; 0, 1; 2]]", 1);
  const int d = c.tensor.d();

  std::vector<SmallGraph> census;
  long examined = 0;
  if (o.allow_slow_generation) {
    progress(o, "qpg5_6_45_22: generating cubic bipartite graphs on 18 vertices");
    census = gen_regular_bipartite(9, 9, 3, distance2_three_colourable);
    examined = static_cast<long>(census.size());
    t.notes.push_back("census regenerated");
  } else {
    std::string path = o.cache_path.empty() ? default_census_path() : o.cache_path;
    census = load_graphs(path);
    examined = static_cast<long>(census.size());
    t.notes.push_back("census read from " + path);
  }

  // Every graph must be cubic, bipartite, pass the colouring test and be new.
  std::vector<SmallGraph> valid;
  for (const auto& g : census) {
    bool ok = g.n() == 18 && !g.directed();
    for (int x = 0; ok && x < g.n(); ++x) ok = g.out_degree(x) == 3;
    ok = ok && distance2_three_colourable(g);
    if (ok) {
      // a cubic bipartite component on 6 vertices is K33
      int non_k33 = 0;
      for (int s : component_sizes(g))
        if (s != 6) ++non_k33;
      ok = non_k33 <= 1;
    }
    for (const auto& h : valid)
      if (ok && graphs_isomorphic(g, h)) ok = false;
    if (ok) valid.push_back(g);
  }
  t.stages.push_back({"census", examined, static_cast<long>(valid.size())});

  // 6-colourings of K_{9,9} plus the distance-2 graph, one per isomorphism class of A2.
  std::vector<RelationMatrix> candidates;
  long single = 0, total_colourings = 0;
  for (const auto& g : valid) {
    auto side = bipartition(g);
    std::vector<int> order;
    for (int s = 0; s < 2; ++s)
      for (int x = 0; x < 18; ++x)
        if (side[x] == s) order.push_back(x);
    require(std::count(side.begin(), side.end(), 0) == 9, ErrorKind::invariant, "unbalanced bipartition");
    SmallGraph h = distance_power(g, 2);
    for (int x = 0; x < 18; ++x)
      for (int y = 0; y < 18; ++y)
        if (side[x] != side[y] && !h.has_edge(x, y)) h.add_edge(x, y);
    // Colour in bipartition order so side 0 takes the first colours.
    SmallGraph ho(18);
    for (int a = 0; a < 18; ++a)
      for (int b = a + 1; b < 18; ++b)
        if (h.has_edge(order[a], order[b])) ho.add_edge(a, b);
    auto colourings = all_colourings(ho, 6);
    total_colourings += static_cast<long>(colourings.size());
    std::vector<RelationMatrix> mine;
    for (const auto& col : colourings) {
      std::vector<int> colour(18);
      for (int a = 0; a < 18; ++a) colour[order[a]] = col[a];
      mine.push_back(build_a2(g, order, side, colour, d));
    }
    auto reps = isomorphism_representatives(mine);
    if (reps.size() == 1) ++single;
    for (int i : reps) candidates.push_back(mine[i]);
  }
  t.notes.push_back(std::to_string(total_colourings) + " colourings before isomorphism");
  t.stages.push_back({"colourings", static_cast<long>(valid.size()), single});

  progress(o, "qpg5_6_45_22: embedding A2 candidates");
  auto a2 = parallel_map<EmbedResult>(static_cast<long>(candidates.size()), o.jobs,
                                      [&](long i) { return embed(c, candidates[i]); });
  std::vector<int> good;
  for (std::size_t i = 0; i < a2.size(); ++i)
    if (a2[i]) good.push_back(static_cast<int>(i));
  t.stages.push_back({"A2", static_cast<long>(candidates.size()), static_cast<long>(good.size())});

  progress(o, "qpg5_6_45_22: embedding A3 candidates");
  auto a3 = parallel_map<EmbedResult>(static_cast<long>(good.size()), o.jobs,
                                      [&](long i) { return embed(c, extend_a3(candidates[good[i]])); });
  long survived = std::count_if(a3.begin(), a3.end(), [](const EmbedResult& e) { return bool(e); });
  t.stages.push_back({"A3", static_cast<long>(good.size()), survived});
  t.verdict = survived == 0 ? Verdict::nonexistence : Verdict::example_reconstructed;
  return t;
}

}  // namespace asch::studies
