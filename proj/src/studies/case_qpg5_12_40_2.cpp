#include <algorithm>

#include "asch/error.hpp"
#include "asch/schemes/isomorphism.hpp"
#include "common.hpp"

namespace asch::studies {

namespace {

// Blocks of four with parts {0, 2} and {1, 3}: R2 across parts, R3 within.
int in_block(int x, int y) { return (x + y) % 2 ? 2 : 3; }

// The four R2-pairs of a block and their complements.
constexpr int kPairs[4][2] = {{0, 1}, {0, 3}, {2, 1}, {2, 3}};
int complement(int p) { return 3 - p; }

}  // namespace

// Three R2-bicliques X1, X2, X3 with X1 ~ X2 in the quotient and X3 far from both.
CaseTranscript run_qpg5_12_40_2(const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context("[[12, 2, 1, 12, 12], [6, 0, 4, 1; 0, 0, 1; 0, 1; 4]]", 1);
  const int d = c.tensor.d();

  // R1 between X1 and X2: each vertex meets an R2-pair on the other side.
  std::vector<RelationMatrix> raw;
  for (int code = 0; code < 256; ++code) {
    int nb[4][4] = {};
    for (int x = 0; x < 4; ++x) {
      int p = (code >> (2 * x)) & 3;
      nb[x][kPairs[p][0]] = nb[x][kPairs[p][1]] = 1;
    }
    bool ok = true;
    for (int y = 0; y < 4 && ok; ++y) {
      std::vector<int> s;
      for (int x = 0; x < 4; ++x)
        if (nb[x][y]) s.push_back(x);
      ok = s.size() == 2 && in_block(s[0], s[1]) == 2;
    }
    if (!ok) continue;
    RelationMatrix r(12, d);
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) r.set_symmetric(4 * b + x, 4 * b + y, in_block(x, y));
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        r.set_symmetric(x, 4 + y, nb[x][y] ? 1 : 5);
        r.set_symmetric(x, 8 + y, 4);
        r.set_symmetric(4 + x, 8 + y, 4);
      }
    raw.push_back(r);
  }
  auto reps = isomorphism_representatives(raw);
  for (int i : reps) {
    auto sizes = component_sizes(relation_graph(raw[i], 1));
    sizes.erase(std::remove(sizes.begin(), sizes.end(), 1), sizes.end());
    std::string name = sizes.size() == 1 ? "C8" : "2C4";
    t.notes.push_back("candidate " + name);
  }

  std::vector<EmbedResult> results;
  for (int i : reps) results.push_back(embed(c, raw[i]));
  std::vector<int> good;
  for (std::size_t k = 0; k < results.size(); ++k)
    if (results[k]) good.push_back(static_cast<int>(k));
  t.stages.push_back({"A3", static_cast<long>(reps.size()), static_cast<long>(good.size())});
  for (int k : good) t.notes.push_back("embeds: " + t.notes[k].substr(10));
  if (good.size() != 1) {
    t.verdict = good.empty() ? Verdict::nonexistence : Verdict::example_reconstructed;
    return t;
  }
  const EmbeddingMatrix& u = *results[good[0]].matrix;
  require(u.full_rank(), ErrorKind::invariant, "qpg5_12_40_2: embedded A3 is not of full rank");

  // At most one block entirely R4; elsewhere R1 to an R2-pair and R5 to the other pair.
  std::vector<std::vector<int>> profiles;
  auto fill = [](std::vector<int>& p, int b, int pair) {
    p[4 * b + kPairs[pair][0]] = p[4 * b + kPairs[pair][1]] = 1;
    int q = complement(pair);
    p[4 * b + kPairs[q][0]] = p[4 * b + kPairs[q][1]] = 5;
  };
  for (int far = 0; far < 3; ++far)
    for (int p1 = 0; p1 < 4; ++p1)
      for (int p2 = 0; p2 < 4; ++p2) {
        std::vector<int> p(12, 4);
        int ch[2] = {p1, p2}, k = 0;
        for (int b = 0; b < 3; ++b)
          if (b != far) fill(p, b, ch[k++]);
        profiles.push_back(p);
      }
  for (int code = 0; code < 64; ++code) {
    std::vector<int> p(12, 4);
    for (int b = 0; b < 3; ++b) fill(p, b, (code >> (2 * (2 - b))) & 3);
    profiles.push_back(p);
  }
  progress(o, "qpg5_12_40_2: extension");
  auto hits = extension_search(c, u, profiles, o.jobs);
  t.stages.push_back({"extension", static_cast<long>(profiles.size()), static_cast<long>(hits.index.size())});

  // Survivors are pairwise compatible when their inner product is some Q_i1/m_1, i >= 1.
  const long ny = static_cast<long>(hits.vectors.size());
  long compatible = 0;
  for (long a = 0; a < ny; ++a)
    for (long b = a + 1; b < ny; ++b) {
      auto cls = classify_pair(EmbeddingMatrix::inner(hits.vectors[a], hits.vectors[b]), c.ip());
      if (std::any_of(cls.begin(), cls.end(), [](int i) { return i != 0; })) ++compatible;
    }
  t.stages.push_back({"compatible pairs", ny * (ny - 1) / 2, compatible});
  const long need = c.tensor.n() - 12;
  if (ny != need || compatible != ny * (ny - 1) / 2) {
    t.verdict = Verdict::nonexistence;
    return t;
  }

  // Inner product 1/2 is R1; the rest is read off common-neighbour counts.
  auto rows = rows_of(u);
  rows.insert(rows.end(), hits.vectors.begin(), hits.vectors.end());
  const int n = static_cast<int>(rows.size());
  SmallGraph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (EmbeddingMatrix::inner(rows[x], rows[y]) == c.ip()[1]) g.add_edge(x, y);
  std::string why;
  bool ok = false;
  RelationMatrix r;
  try {
    r = disambiguate_by_common_neighbors(g, c.tensor);
    ok = verify_assembly(c, r, &why) && matches_vectors(c, r, rows, &why);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_scheme) throw;
    why = e.what();
  }
  t.stages.push_back({"assembly", 1, ok ? 1 : 0});
  if (!ok) {
    t.notes.push_back("assembly: " + why);
    t.verdict = Verdict::nonexistence;
    return t;
  }
  t.scheme = r;
  t.automorphisms = automorphism_count(r);
  t.verdict = Verdict::uniqueness;
  return t;
}

}  // namespace asch::studies
