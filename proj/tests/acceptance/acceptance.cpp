// One PASS/FAIL line per acceptance criterion. Arguments select criteria by
// number; no arguments runs all of them.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "../unit/catalog.hpp"
#include "../unit/gram_oracle.hpp"
#include "asch/error.hpp"
#include "asch/exact/sqrt_class.hpp"
#include "asch/families/families.hpp"
#include "asch/schemes/isomorphism.hpp"
#include "asch/studies/studies.hpp"

using namespace asch;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

bool has_note(const CaseTranscript& t, const std::string& note) {
  return std::find(t.notes.begin(), t.notes.end(), note) != t.notes.end();
}

void expect_stage(Outcome& o, const CaseTranscript& t, const std::string& name, long candidates, long surviving,
                  long runs = 1) {
  const auto* s = t.stage(name);
  if (!s) return o.expect(false, "missing stage " + name);
  o.expect(s->candidates == candidates && s->surviving == surviving && s->runs == runs,
           "stage " + name + ": " + std::to_string(s->candidates) + "/" + std::to_string(s->surviving) + " runs " +
               std::to_string(s->runs));
}

void expect_case(Outcome& o, const CaseTranscript& t, double budget_seconds) {
  for (const auto& d : compare_with_expected(t, case_info(t.id))) o.expect(false, d);
  o.expect(t.seconds < budget_seconds, "runtime " + std::to_string(t.seconds) + " s");
  std::ostringstream s;
  s << t.id << " " << to_string(t.verdict) << " in " << t.seconds << " s";
  o.detail = s.str();
}

RelationMatrix displayed_cube() {
  const int rows[8][8] = {{0, 2, 2, 2, 3, 1, 1, 1}, {2, 0, 2, 2, 1, 3, 1, 1}, {2, 2, 0, 2, 1, 1, 3, 1},
                          {2, 2, 2, 0, 1, 1, 1, 3}, {3, 1, 1, 1, 0, 2, 2, 2}, {1, 3, 1, 1, 2, 0, 2, 2},
                          {1, 1, 3, 1, 2, 2, 0, 2}, {1, 1, 1, 3, 2, 2, 2, 0}};
  RelationMatrix r(8, 3);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) r(x, y) = rows[x][y];
  return r;
}

Outcome cube_reconstruction() {
  Outcome o;
  auto t = run_case("cube8");
  expect_case(o, t, 1.0);
  for (const char* row : {"  1·sqrt(1) 0 0", "  -1/3·sqrt(1) 2/3·sqrt(2) 0", "  -1/3·sqrt(1) -1/3·sqrt(2) 1/3·sqrt(6)",
                          "  -1/3·sqrt(1) -1/3·sqrt(2) -1/3·sqrt(6)"})
    o.expect(has_note(t, row), std::string("U row missing:") + row);
  o.expect(t.scheme && are_isomorphic(*t.scheme, displayed_cube()), "assembled matrix not isomorphic to the display");
  o.expect(t.verdict == Verdict::uniqueness, "verdict");
  return o;
}

Outcome three_gq_blocks() {
  Outcome o;
  auto t = run_case("qpg4_12_45_52");
  expect_case(o, t, 60.0);
  expect_stage(o, t, "A3", 6, 1);
  expect_stage(o, t, "extension", 216, 0);
  o.expect(t.verdict == Verdict::nonexistence, "verdict");
  return o;
}

Outcome one_factors() {
  Outcome o;
  auto t = run_case("qpg4_8_45_18");
  expect_case(o, t, 7200.0);
  expect_stage(o, t, "one-factors[C15]", 85184, 5704);
  expect_stage(o, t, "one-factors[C9+C6]", 85184, 4736);
  expect_stage(o, t, "triangles[C15]", 5704, 3637);
  expect_stage(o, t, "triangles[C9+C6]", 4736, 3028);
  expect_stage(o, t, "A3[C15]", 3637, 55);
  expect_stage(o, t, "A3[C9+C6]", 3028, 45);
  expect_stage(o, t, "extension[C15]", 8000, 0, 55);
  expect_stage(o, t, "extension[C9+C6]", 8000, 0, 45);
  // The inner products of S_1 generate a cubic field; one of them is a root
  // of x^3 - 3/16 x + 7/256.
  auto e = compute_eigendata(recover_from_parameter_array(ParameterArray::parse(t.array)));
  bool cubic = false, root = false;
  for (const auto& v : e.local_ip[1]) {
    cubic = cubic || (v.field() && v.field()->degree() == 3);
    if (v * v * v - AlgebraicReal(make_rational(3, 16)) * v + AlgebraicReal(make_rational(7, 256)) == AlgebraicReal(0))
      root = root || !v.is_rational();
  }
  o.expect(cubic, "no cubic field");
  o.expect(root, "no inner product with minimal polynomial x^3 - 3/16 x + 7/256");
  return o;
}

Outcome census() {
  Outcome o;
  auto t = run_case("qpg5_6_45_22");
  expect_case(o, t, 600.0);
  expect_stage(o, t, "colourings", 18, 18);
  expect_stage(o, t, "A2", 18, 7);
  expect_stage(o, t, "A3", 7, 0);
  CaseOptions regen;
  regen.allow_slow_generation = true;
  auto r = run_case_unchecked("qpg5_6_45_22", regen);
  const auto* s = r.stage("census");
  o.expect(s && s->surviving == 18, "regenerated census size");
  o.detail += "; regenerated census in " + std::to_string(r.seconds) + " s";
  return o;
}

Outcome bicliques() {
  Outcome o;
  auto t = run_case("qpg5_12_40_2");
  expect_case(o, t, 300.0);
  expect_stage(o, t, "A3", 2, 1);
  o.expect(has_note(t, "candidate C8") && has_note(t, "candidate 2C4") && has_note(t, "embeds: 2C4"),
           "only 2C4 embeds");
  expect_stage(o, t, "extension", 112, 28);
  expect_stage(o, t, "compatible pairs", 378, 378);  // 28 choose 2: the survivor graph is complete
  expect_stage(o, t, "assembly", 1, 1);
  o.expect(t.automorphisms && *t.automorphisms == 3840, "automorphisms");
  o.expect(t.scheme && verify_scheme_axioms(*t.scheme).ok &&
               tensor_from_relation_matrix(*t.scheme) == recover_from_parameter_array(ParameterArray::parse(t.array)),
           "assembly tensor");
  return o;
}

Outcome two_cliques() {
  Outcome o;
  auto t = run_case("qpg5_6_45_5");
  expect_case(o, t, 600.0);
  expect_stage(o, t, "A3", 1, 1);
  expect_stage(o, t, "extension", 72, 36);
  expect_stage(o, t, "cliques", 36, 2);
  o.expect(has_note(t, "cliques of size 18 are disjoint"), "cliques not disjoint");
  expect_stage(o, t, "assembly", 2, 2);
  expect_stage(o, t, "isomorphism classes", 2, 1);
  o.expect(t.automorphisms && *t.automorphisms == 77760, "automorphisms");
  o.expect(t.scheme && are_isomorphic(*t.scheme, special_scheme("c352").matrix), "not isomorphic to c352");
  return o;
}

Outcome catalog_battery() {
  Outcome o;
  int nonexistence = 0, feasible = 0;
  for (const auto& row : load_catalog(ASCH_TEST_DATA "/catalog.tsv")) {
    if (!implemented_kind(row.kind)) continue;
    auto rep = run_all(ParameterArray::parse(row.array));
    if (row.kind == "construction") {
      o.expect(rep.verdict() == "feasible-so-far", row.array + ": " + rep.machine_line());
      ++feasible;
    } else {
      o.expect(report_matches(rep, row), row.array + " expected " + row.kind + " " + row.detail + ", got " +
                                             rep.machine_line());
      ++nonexistence;
    }
  }
  o.detail = std::to_string(nonexistence) + " reasons, " + std::to_string(feasible) + " feasible-so-far rows";
  return o;
}

Outcome constructions() {
  Outcome o;
  auto realizes = [&](const SchemeValue& s, const std::string& array) {
    o.expect(match_parameter_array(s.tensor(), ParameterArray::parse(array)).has_value(), s.name + " vs " + array);
  };
  realizes(direct_product(complete_scheme(3), complete_scheme(13)), "[[24, 2, 12], [12, 22; 2]]");
  realizes(lexicographic_product(cyclic_scheme(5), complete_scheme(11)), "[[22, 10, 22], [22, 11; 0]]");
  realizes(hamming_power(3, complete_scheme(2)), "[[3, 3, 1], [2, 0; 3]]");
  realizes(direct_product(complete_scheme(2), complete_scheme(26)), "[[25, 25, 1], [24, 0; 25]]");
  const std::pair<const char*, const char*> special[] = {
      {"smith40", "[[8, 4, 3, 24], [2, 0, 2; 0, 1; 1]]"},
      {"paircube40", "[[12, 2, 1, 12, 12], [6, 0, 4, 1; 0, 0, 1; 0, 1; 4]]"},
      {"c352", "[[6, 4, 4, 12, 18], [3, 0, 0, 1; 0, 1, 0; 2, 0; 2]]"}};
  for (auto [name, array] : special) {
    auto s = special_scheme(name);
    o.expect(s.tensor().to_parameter_array().to_string() == array, std::string(name) + " array");
  }
  o.expect(automorphism_count(special_scheme("smith40").matrix) == 1920, "smith40 automorphisms");
  return o;
}

Outcome properties() {
  Outcome o;
  const std::vector<SchemeValue> schemes = {
      hamming_scheme(3, 2),   johnson_scheme(6, 3),       cyclic_scheme(9),
      cyclotomic_scheme(13, 2), cyclotomic_scheme(16, 3), direct_product(complete_scheme(3), complete_scheme(4)),
      lexicographic_product(cyclic_scheme(5), complete_scheme(3)), hamming_power(2, cyclic_scheme(5)),
      special_scheme("smith40"), special_scheme("paircube40")};
  int embeddings = 0;
  std::mt19937 rng(11);
  for (const auto& sv : schemes) {
    auto e = compute_eigendata(sv.tensor());
    auto q = compute_krein(e);
    const long n = sv.matrix.n();
    AlgebraicReal total;
    for (int a = 0; a <= e.d; ++a) {
      total += e.m[a];
      for (int b = 0; b <= e.d; ++b) {
        AlgebraicReal s;
        for (int c = 0; c <= e.d; ++c) s += e.P[a][c] * e.Q[c][b];
        o.expect(s == AlgebraicReal(a == b ? n : 0), sv.name + ": PQ != nI");
      }
      for (int i = 0; i <= e.d; ++i) {
        AlgebraicReal row;
        for (int j = 0; j <= e.d; ++j) row += q.q(a, i, j);
        o.expect(row == e.m[i], sv.name + ": Krein row sum");
      }
    }
    o.expect(total == AlgebraicReal(n), sv.name + ": sum of multiplicities");
    for (int j = 1; j <= e.d; ++j) {
      if (!is_faithful(e, j)) continue;
      std::vector<int> verts(n);
      std::iota(verts.begin(), verts.end(), 0);
      std::shuffle(verts.begin(), verts.end(), rng);
      verts.resize(std::min<long>(n, 9));
      std::sort(verts.begin(), verts.end());
      auto sub = induced_subscheme(sv.matrix, verts);
      o.expect(bool(compute_embedding(gram_from_candidate(sub.matrix, e, j, &sub.relation_map))),
               sv.name + ": induced subscheme does not embed in S_" + std::to_string(j));
      ++embeddings;
    }
  }

  std::mt19937 grng(2025);
  std::uniform_int_distribution<int> mdist(1, 5);
  int agree = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto c = gram_oracle::random_gram(grng);
    const long m = mdist(grng);
    auto rank = gram_oracle::psd_rank(c);
    const bool expected = rank && *rank <= m;
    const bool got = bool(compute_embedding(gram_oracle::spec_from(c, m)));
    o.expect(got == expected, "embedding vs PSD oracle, trial " + std::to_string(trial));
    agree += got == expected;
  }

  const std::vector<long> radicands = {1, 2, 3, 6, 8, 12, 18};
  int sqrt_pairs = 0;
  for (long a : radicands)
    for (long b : radicands) {
      auto x = SqrtClassValue::sqrt_of(AlgebraicReal(a)), y = SqrtClassValue::sqrt_of(AlgebraicReal(b));
      const bool same = x.same_class(y);
      // same class iff ab is a rational square
      const long ab = a * b;
      long r = 0;
      while ((r + 1) * (r + 1) <= ab) ++r;
      o.expect(same == (r * r == ab), "sqrt class of " + std::to_string(a) + ", " + std::to_string(b));
      bool threw = false;
      try {
        (void)(x + y);
      } catch (const Error&) {
        threw = true;
      }
      o.expect(threw == !same, "sqrt-class addition " + std::to_string(a) + " + " + std::to_string(b));
      ++sqrt_pairs;
    }
  o.detail = std::to_string(schemes.size()) + " schemes, " + std::to_string(embeddings) + " induced embeddings, " +
             std::to_string(agree) + "/500 Gram trials, " + std::to_string(sqrt_pairs) + " sqrt-class pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"cube reconstruction", cube_reconstruction},
      {"three GQ(2,1) blocks, nonexistence", three_gq_blocks},
      {"1-factors over a cubic field, nonexistence", one_factors},
      {"cubic bipartite census, nonexistence", census},
      {"R2-bicliques, uniqueness", bicliques},
      {"two 18-cliques, uniqueness", two_cliques},
      {"feasibility battery vs catalog", catalog_battery},
      {"constructions vs catalog", constructions},
      {"property suites", properties}};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int number = static_cast<int>(k) + 1;
    if (!selected.empty() && !selected.count(number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << number << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL") << " ["
              << secs << " s]";
    if (!o.detail.empty()) std::cout << " " << o.detail;
    std::cout << "\n";
    for (std::size_t f = 0; f < o.failures.size() && f < 10; ++f) std::cout << "    " << o.failures[f] << "\n";
    if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
    std::cout.flush();
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
