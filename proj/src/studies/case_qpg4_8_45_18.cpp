#include <array>

#include "asch/error.hpp"
#include "common.hpp"

namespace asch::studies {

namespace {

// Three R3-cliques of five; vertex b*5 + a. Gamma_1 runs (0,a) - (1,a) - (2,a) - (0,pi(a)).
std::vector<std::array<int, 2>> gamma1_edges(const std::array<int, 5>& pi) {
  std::vector<std::array<int, 2>> e;
  for (int a = 0; a < 5; ++a) {
    e.push_back({a, 5 + a});
    e.push_back({5 + a, 10 + a});
    e.push_back({10 + a, pi[a]});
  }
  return e;
}

struct Shape {
  std::string name;
  std::array<int, 5> pi;
};

}  // namespace

// Gamma_1 on three cliques is C15 or C9 + C6; Gamma_2 comes from a 1-factor of the
// forward digraph of non-R1 pairs.
CaseTranscript run_qpg4_8_45_18(const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context("[[8, 8, 4, 24], [1, 0, 2; 2, 1; 1]]", 1);
  const int d = c.tensor.d();
  if (c.eigen.local_field[1]) t.notes.push_back("S_1 inner products lie in " + c.eigen.local_field[1]->describe());

  const std::vector<Shape> shapes = {{"C15", {1, 2, 3, 4, 0}}, {"C9+C6", {1, 2, 0, 4, 3}}};
  // one R1 and one distinct R2 vertex in each clique
  std::vector<std::vector<int>> profiles;
  for (int code = 0; code < 8000; ++code) {
    std::vector<int> p(15, 4);
    int rest = code;
    for (int b = 2; b >= 0; --b) {
      int pick = rest % 20;
      rest /= 20;
      int r1 = pick / 4, r2 = pick % 4;
      if (r2 >= r1) ++r2;
      p[5 * b + r1] = 1;
      p[5 * b + r2] = 2;
    }
    profiles.push_back(p);
  }

  bool any = false;
  for (const auto& shape : shapes) {
    RelationMatrix base(15, d);
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) base.set_symmetric(5 * b + x, 5 * b + y, 3);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        for (int b = 0; b < 3; ++b) base.set_symmetric(5 * b + x, 5 * ((b + 1) % 3) + y, 4);
    for (auto [x, y] : gamma1_edges(shape.pi)) base.set_symmetric(x, y, 1);

    SmallGraph arcs(15, true);
    for (int x = 0; x < 15; ++x) {
      int nb = (x / 5 + 1) % 3;
      for (int a = 0; a < 5; ++a)
        if (base(x, 5 * nb + a) != 1) arcs.add_edge(x, 5 * nb + a);
    }
    progress(o, "qpg4_8_45_18[" + shape.name + "]: 1-factors");
    auto census = enumerate_one_factors(arcs);
    t.stages.push_back({"one-factors[" + shape.name + "]", census.total, static_cast<long>(census.factors.size())});

    std::vector<const std::vector<int>*> with_triangle;
    for (const auto& f : census.factors) {
      bool tri = false;
      for (int x = 0; x < 15 && !tri; ++x) tri = f[f[f[x]]] == x;
      if (tri) with_triangle.push_back(&f);
    }
    t.stages.push_back({"triangles[" + shape.name + "]", static_cast<long>(census.factors.size()),
                        static_cast<long>(with_triangle.size())});

    progress(o, "qpg4_8_45_18[" + shape.name + "]: embedding " + std::to_string(with_triangle.size()) + " candidates");
    auto results = parallel_map<EmbedResult>(static_cast<long>(with_triangle.size()), o.jobs, [&](long i) {
      RelationMatrix r = base;
      const auto& f = *with_triangle[i];
      for (int x = 0; x < 15; ++x) r.set_symmetric(x, f[x], 2);
      return embed(c, r);
    });
    std::vector<const EmbeddingMatrix*> embedded;
    for (const auto& res : results)
      if (res) embedded.push_back(&*res.matrix);
    t.stages.push_back({"A3[" + shape.name + "]", static_cast<long>(with_triangle.size()),
                        static_cast<long>(embedded.size())});

    long hits = 0;
    for (std::size_t k = 0; k < embedded.size(); ++k) {
      require(embedded[k]->full_rank(), ErrorKind::invariant, "qpg4_8_45_18: embedded A3 is not of full rank");
      progress(o, "qpg4_8_45_18[" + shape.name + "]: extension " + std::to_string(k + 1) + "/" +
                      std::to_string(embedded.size()));
      hits += static_cast<long>(extension_search(c, *embedded[k], profiles, o.jobs).index.size());
    }
    t.stages.push_back({"extension[" + shape.name + "]", static_cast<long>(profiles.size()), hits,
                        static_cast<long>(embedded.size())});
    any = any || hits > 0;
  }
  t.verdict = any ? Verdict::example_reconstructed : Verdict::nonexistence;
  return t;
}

}  // namespace asch::studies
