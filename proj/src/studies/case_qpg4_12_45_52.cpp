#include <algorithm>
#include <array>

#include "asch/error.hpp"
#include "common.hpp"

namespace asch::studies {

namespace {

// Block b is a 3x3 rook graph; vertex b*9 + row*3 + col.
int vertex(int b, int row, int col) { return b * 9 + row * 3 + col; }

// Line i of spread s (0: rows, 1: columns) in block b.
std::array<int, 3> line(int b, int s, int i) {
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = s == 0 ? vertex(b, i, k) : vertex(b, k, i);
  return out;
}

struct Coupling {
  int sa = 0, sb = 0;
  std::array<int, 3> pi{0, 1, 2};
};

std::vector<Coupling> all_couplings() {
  std::vector<Coupling> out;
  for (int sa = 0; sa < 2; ++sa)
    for (int sb = 0; sb < 2; ++sb) {
      std::array<int, 3> pi{0, 1, 2};
      do out.push_back({sa, sb, pi});
      while (std::next_permutation(pi.begin(), pi.end()));
    }
  return out;
}

RelationMatrix build(int d, const std::array<std::pair<int, int>, 3>& pairs, const std::array<Coupling, 3>& cp) {
  RelationMatrix r(27, d);
  for (int b = 0; b < 3; ++b)
    for (int x = 0; x < 9; ++x)
      for (int y = x + 1; y < 9; ++y) {
        bool line_mate = x / 3 == y / 3 || x % 3 == y % 3;
        r.set_symmetric(b * 9 + x, b * 9 + y, line_mate ? 2 : 3);
      }
  for (int k = 0; k < 3; ++k) {
    auto [a, b] = pairs[k];
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y) r.set_symmetric(a * 9 + x, b * 9 + y, 4);
    for (int i = 0; i < 3; ++i)
      for (int x : line(a, cp[k].sa, i))
        for (int y : line(b, cp[k].sb, cp[k].pi[i])) r.set_symmetric(x, y, 1);
  }
  return r;
}

}  // namespace

// Three GQ(2,1) blocks joined by spread couplings, embedded in S_1.
CaseTranscript run_qpg4_12_45_52(const CaseOptions& o) {
  CaseTranscript t;
  auto c = make_context("[[12, 4, 4, 24], [6, 0, 3; 0, 1; 2]]", 1);
  const int d = c.tensor.d();
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};

  // The first coupling can be taken as rows to rows with the identity matching.
  auto cps = all_couplings();
  std::vector<RelationMatrix> raw;
  for (const auto& c02 : cps)
    for (const auto& c12 : cps) raw.push_back(build(d, pairs, {Coupling{}, c02, c12}));
  progress(o, "qpg4_12_45_52: isomorphism classes of " + std::to_string(raw.size()) + " couplings");
  auto reps = isomorphism_representatives(raw);
  t.notes.push_back(std::to_string(raw.size()) + " raw spread couplings");

  auto results = parallel_map<EmbedResult>(static_cast<long>(reps.size()), o.jobs,
                                           [&](long i) { return embed(c, raw[reps[i]]); });
  std::vector<const EmbeddingMatrix*> embedded;
  for (const auto& res : results)
    if (res) embedded.push_back(&*res.matrix);
  t.stages.push_back({"A3", static_cast<long>(reps.size()), static_cast<long>(embedded.size())});

  // One line from each of the three blocks in R1, everything else R4.
  std::vector<std::vector<int>> profiles;
  for (int l0 = 0; l0 < 6; ++l0)
    for (int l1 = 0; l1 < 6; ++l1)
      for (int l2 = 0; l2 < 6; ++l2) {
        std::vector<int> p(27, 4);
        const int choice[3] = {l0, l1, l2};
        for (int b = 0; b < 3; ++b)
          for (int x : line(b, choice[b] / 3, choice[b] % 3)) p[x] = 1;
        profiles.push_back(p);
      }
  long hits = 0;
  for (const auto* u : embedded) {
    require(u->full_rank(), ErrorKind::invariant, "qpg4_12_45_52: embedded A3 is not of full rank");
    progress(o, "qpg4_12_45_52: extension");
    hits += static_cast<long>(extension_search(c, *u, profiles, o.jobs).index.size());
  }
  t.stages.push_back({"extension", static_cast<long>(profiles.size()), hits, static_cast<long>(embedded.size())});
  t.verdict = hits == 0 ? Verdict::nonexistence : Verdict::example_reconstructed;
  return t;
}

}  // namespace asch::studies
