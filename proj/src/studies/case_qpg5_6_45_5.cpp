#include <algorithm>
#include <array>

#include "asch/error.hpp"
#include "asch/families/families.hpp"
#include "asch/schemes/isomorphism.hpp"
#include "common.hpp"

namespace asch::studies {

namespace {

int vertex(int b, int row, int col) { return b * 9 + row * 3 + col; }

std::array<int, 3> line(int b, int s, int i) {
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = s == 0 ? vertex(b, i, k) : vertex(b, k, i);
  return out;
}

}  // namespace

// Rook blocks X1 ~ X2 joined by a spread coupling, X3 in R5 to both.
CaseTranscript run_qpg5_6_45_5(const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context("[[6, 4, 4, 12, 18], [3, 0, 0, 1; 0, 1, 0; 2, 0; 2]]", 1);
  const int d = c.tensor.d();

  std::vector<RelationMatrix> raw;
  for (int sa = 0; sa < 2; ++sa)
    for (int sb = 0; sb < 2; ++sb) {
      std::array<int, 3> pi{0, 1, 2};
      do {
        RelationMatrix r(27, d);
        for (int b = 0; b < 3; ++b)
          for (int x = 0; x < 9; ++x)
            for (int y = x + 1; y < 9; ++y)
              r.set_symmetric(b * 9 + x, b * 9 + y, x / 3 == y / 3 || x % 3 == y % 3 ? 2 : 3);
        for (int x = 0; x < 9; ++x)
          for (int y = 0; y < 9; ++y) {
            r.set_symmetric(x, 9 + y, 4);
            r.set_symmetric(x, 18 + y, 5);
            r.set_symmetric(9 + x, 18 + y, 5);
          }
        for (int i = 0; i < 3; ++i)
          for (int x : line(0, sa, i))
            for (int y : line(1, sb, pi[i])) r.set_symmetric(x, y, 1);
        raw.push_back(r);
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
  auto reps = isomorphism_representatives(raw);
  std::vector<EmbedResult> results;
  for (int i : reps) results.push_back(embed(c, raw[i]));
  long embedded = std::count_if(results.begin(), results.end(), [](const EmbedResult& e) { return bool(e); });
  t.stages.push_back({"A3", static_cast<long>(reps.size()), embedded});
  if (reps.size() != 1 || embedded != 1) {
    t.verdict = embedded == 0 ? Verdict::nonexistence : Verdict::example_reconstructed;
    return t;
  }
  const EmbeddingMatrix& u = *results[0].matrix;
  require(u.full_rank(), ErrorKind::invariant, "qpg5_6_45_5: embedded A3 is not of full rank");

  // R5 to all of X1 or X2; one R1 line in each of the two other blocks; R4 elsewhere.
  std::vector<std::vector<int>> profiles;
  for (int far = 0; far < 2; ++far)
    for (int la = 0; la < 6; ++la)
      for (int lb = 0; lb < 6; ++lb) {
        std::vector<int> p(27, 4);
        for (int x = 0; x < 9; ++x) p[far * 9 + x] = 5;
        const int near = 1 - far;
        for (int x : line(near, la / 3, la % 3)) p[x] = 1;
        for (int x : line(2, lb / 3, lb % 3)) p[x] = 1;
        profiles.push_back(p);
      }
  progress(o, "qpg5_6_45_5: extension");
  auto hits = extension_search(c, u, profiles, o.jobs);
  const int ny = static_cast<int>(hits.vectors.size());
  t.stages.push_back({"extension", static_cast<long>(profiles.size()), ny});

  // Vertices of X4 and X5 are pairwise in R2, R3 or R5.
  SmallGraph g(ny);
  for (int a = 0; a < ny; ++a)
    for (int b = a + 1; b < ny; ++b) {
      auto ip = EmbeddingMatrix::inner(hits.vectors[a], hits.vectors[b]);
      if (ip == c.ip()[2] || ip == c.ip()[3] || ip == c.ip()[5]) g.add_edge(a, b);
    }
  const int need = static_cast<int>(c.tensor.n()) - 27;
  std::vector<std::vector<int>> cliques;
  for (auto& q : maximal_cliques(g))
    if (static_cast<int>(q.size()) == need) cliques.push_back(q);
  std::vector<int> cover(ny, 0);
  for (const auto& q : cliques)
    for (int v : q) ++cover[v];
  bool disjoint = std::all_of(cover.begin(), cover.end(), [](int k) { return k <= 1; });
  t.notes.push_back(std::string("cliques of size ") + std::to_string(need) + (disjoint ? " are disjoint" : " overlap"));
  t.stages.push_back({"cliques", ny, static_cast<long>(cliques.size())});

  std::vector<RelationMatrix> assembled;
  for (const auto& q : cliques) {
    auto rows = rows_of(u);
    for (int v : q) rows.push_back(hits.vectors[v]);
    auto r = classify_all(c, rows);
    std::string why;
    if (r && verify_assembly(c, *r, &why)) assembled.push_back(*r);
    else if (!why.empty()) t.notes.push_back("assembly: " + why);
  }
  t.stages.push_back({"assembly", static_cast<long>(cliques.size()), static_cast<long>(assembled.size())});
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
  bool c352 = are_isomorphic(assembled[0], special_scheme("c352").matrix).has_value();
  t.notes.push_back(std::string("isomorphic to c352: ") + (c352 ? "yes" : "no"));
  t.automorphisms = automorphism_count(assembled[0]);
  t.verdict = Verdict::uniqueness;
  return t;
}

}  // namespace asch::studies
