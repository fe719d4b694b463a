#include <sstream>

#include "asch/error.hpp"
#include "asch/schemes/isomorphism.hpp"
#include "common.hpp"

namespace asch::studies {

// One R2-clique of the 3-cube scheme embedded in S_1, then the other four
// vertices recovered as extensions.
CaseTranscript run_cube8(const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context("[[3, 3, 1], [2, 0; 3]]", 1);

  RelationMatrix a1(4, c.tensor.d());
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) a1.set_symmetric(x, y, 2);
  auto res = embed(c, a1);
  t.stages.push_back({"embedding", 1, res ? 1 : 0});
  if (!res) {
    t.verdict = Verdict::nonexistence;
    return t;
  }
  const EmbeddingMatrix& u = *res.matrix;
  std::ostringstream dump;
  u.dump(dump);
  t.notes.push_back("U:");
  std::istringstream lines(dump.str());
  for (std::string line; std::getline(lines, line);) t.notes.push_back("  " + line);
  require(u.full_rank(), ErrorKind::invariant, "cube8: U is not of full rank");

  // R3 to exactly one vertex of the clique, R1 to the rest.
  std::vector<std::vector<int>> profiles;
  for (int v = 0; v < 4; ++v) {
    std::vector<int> p(4, 1);
    p[v] = 3;
    profiles.push_back(p);
  }
  progress(o, "cube8: extension");
  auto hits = extension_search(c, u, profiles, o.jobs);
  t.stages.push_back({"extension", static_cast<long>(profiles.size()), static_cast<long>(hits.index.size())});

  bool negated = hits.index.size() == 4;
  for (std::size_t k = 0; negated && k < hits.vectors.size(); ++k)
    for (int h = 0; h < u.rank(); ++h)
      if (!(hits.vectors[k][h] == -u.entry(static_cast<int>(hits.index[k]), h))) negated = false;
  if (negated) t.notes.push_back("extension vectors are the rows of -U");

  auto rows = rows_of(u);
  rows.insert(rows.end(), hits.vectors.begin(), hits.vectors.end());
  auto r = classify_all(c, rows);
  std::string why;
  bool ok = r && verify_assembly(c, *r, &why);
  t.stages.push_back({"assembly", 1, ok ? 1 : 0});
  if (!ok) {
    if (!why.empty()) t.notes.push_back("assembly: " + why);
    t.verdict = Verdict::nonexistence;
    return t;
  }
  t.scheme = *r;
  t.automorphisms = automorphism_count(*r);
  t.verdict = Verdict::uniqueness;
  return t;
}

}  // namespace asch::studies
