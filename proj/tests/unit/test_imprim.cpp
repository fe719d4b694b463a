#include <doctest.h>

#include <algorithm>
#include <map>

#include "asch/families/families.hpp"
#include "asch/graphkit/graph.hpp"
#include "asch/params/imprim.hpp"
#include "asch/schemes/relation_matrix.hpp"

using namespace asch;

namespace {

IntersectionTensor from_array(const std::string& s) { return recover_from_parameter_array(ParameterArray::parse(s)); }

const ImprimitivityStructure* find_set(const std::vector<ImprimitivityStructure>& all, const std::vector<int>& tilde0) {
  for (const auto& s : all)
    if (s.tilde0 == tilde0) return &s;
  return nullptr;
}

// Quotient tensor computed on the vertices: blocks of R_tilde0, block pairs
// labeled by the ~-class of any relation between them.
IntersectionTensor brute_quotient(const RelationMatrix& r, const ImprimitivityStructure& s) {
  std::vector<int> block(r.n(), -1);
  int blocks = 0;
  for (int x = 0; x < r.n(); ++x) {
    if (block[x] >= 0) continue;
    for (int y = 0; y < r.n(); ++y)
      if (std::count(s.tilde0.begin(), s.tilde0.end(), r(x, y))) block[y] = blocks;
    ++blocks;
  }
  std::vector<int> rep(blocks);
  for (int x = r.n(); x-- > 0;) rep[block[x]] = x;
  const int dq = static_cast<int>(s.relation_classes.size()) - 1;
  RelationMatrix q(blocks, dq);
  for (int a = 0; a < blocks; ++a)
    for (int b = 0; b < blocks; ++b) {
      int c = s.relation_class_of(r(rep[a], rep[b]));
      // every pair between two blocks falls in one class
      for (int x = 0; x < r.n(); ++x)
        for (int y = 0; y < r.n(); ++y)
          if (block[x] == a && block[y] == b) REQUIRE(s.relation_class_of(r(x, y)) == c);
      q(a, b) = c;
    }
  return tensor_from_relation_matrix(q);
}

std::vector<SchemeValue> imprimitive_schemes() {
  return {hamming_scheme(3, 2),
          direct_product(complete_scheme(2), complete_scheme(3)),
          direct_product(complete_scheme(3), complete_scheme(4)),
          lexicographic_product(cyclic_scheme(5), complete_scheme(3)),
          cyclic_scheme(6),
          cyclic_scheme(9),
          johnson_scheme(6, 3),
          hamming_scheme(4, 2),
          special_scheme("paircube40"),
          special_scheme("c352")};
}

}  // namespace

TEST_CASE("imprimitivity sets of the cube") {
  auto t = tensor_from_relation_matrix(hamming_scheme(3, 2).matrix);
  auto e = compute_eigendata(t);
  auto q = compute_krein(e);
  auto all = find_imprimitivity_sets(t, &e, &q);
  auto s = find_set(all, {0, 2});
  REQUIRE(s);
  CHECK(s->nontrivial);
  REQUIRE(s->overline0);
  CHECK(*s->overline0 == std::vector<int>{0, 3});
  CHECK(s->n_bar == 4);
  CHECK(s->n_tilde == 2);
  CHECK(s->label() == "{0, 2}");
  auto quo = quotient_parameters(t, *s);
  CHECK(quo.tensor.d() == 1);
  CHECK(quo.tensor.k(1) == 1);
  // the subscheme on a block is K4
  auto sub = subscheme_parameters(t, *s, e, q);
  CHECK(sub.tensor == tensor_from_relation_matrix(complete_scheme(4).matrix));
  // antipodal classes {0, 3}: quotient K4
  auto anti = find_set(all, {0, 3});
  REQUIRE(anti);
  CHECK(quotient_parameters(t, *anti).tensor == tensor_from_relation_matrix(complete_scheme(4).matrix));
  CHECK(find_set(all, {0, 1}) == nullptr);
}

TEST_CASE("imprimitivity of complete schemes is trivial") {
  for (int n : {2, 5, 9}) {
    auto t = tensor_from_relation_matrix(complete_scheme(n).matrix);
    auto e = compute_eigendata(t);
    auto q = compute_krein(e);
    auto all = find_imprimitivity_sets(t, &e, &q);
    CHECK(all.size() == 2);
    for (const auto& s : all) CHECK_FALSE(s.nontrivial);
  }
}

TEST_CASE("imprimitivity of the nonexistence cases") {
  auto t = from_array("[[12, 4, 4, 24], [6, 0, 3; 0, 1; 2]]");
  auto e = compute_eigendata(t);
  auto q = compute_krein(e);
  auto all = find_imprimitivity_sets(t, &e, &q);
  auto s = find_set(all, {0, 2, 3});
  REQUIRE(s);
  REQUIRE(s->overline0);
  CHECK(*s->overline0 == std::vector<int>{0, 3});
  CHECK(s->eigenspace_classes[s->eigenspace_class_of(1)] == std::vector<int>{1, 4});
  CHECK(s->n_bar == 9);
  // the R2 graph on a block is the 3x3 rook graph
  auto sub = subscheme_parameters(t, *s, e, q);
  SmallGraph rook(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) rook.add_edge(u, v);
  auto rt = tensor_from_relation_matrix(rook.relation_matrix());
  CHECK(sub.tensor.k(1) == rt.k(1));
  CHECK(sub.tensor.p(1, 1, 1) == rt.p(1, 1, 1));
  CHECK(sub.tensor.p(2, 1, 1) == rt.p(2, 1, 1));

  auto t3 = from_array("[[6, 18, 2, 6, 12], [1, 0, 2, 0; 0, 0, 3; 0, 1; 2]]");
  auto e3 = compute_eigendata(t3);
  auto q3 = compute_krein(e3);
  auto s3 = imprimitivity_structure(t3, {0, 3, 4}, &e3, &q3);
  CHECK(s3.n_bar == 9);
  CHECK(quotient_parameters(t3, s3).tensor == tensor_from_relation_matrix(cyclic_scheme(5).matrix));
}

TEST_CASE("imprimitivity of the uniqueness cases") {
  auto t = from_array("[[12, 2, 1, 12, 12], [6, 0, 4, 1; 0, 0, 1; 0, 1; 4]]");
  auto e = compute_eigendata(t);
  auto q = compute_krein(e);
  auto s = imprimitivity_structure(t, {0, 2, 3}, &e, &q);
  CHECK(s.n_bar == 4);
  CHECK(quotient_parameters(t, s).tensor == tensor_from_relation_matrix(johnson_scheme(5, 2).matrix));
  auto sub = subscheme_parameters(t, s, e, q);
  // K_{2,2}: the former R2 is relation 1 of the subscheme
  CHECK(sub.tensor.k(1) == 2);
  CHECK(sub.tensor.p(1, 1, 1) == 0);
  CHECK(sub.tensor.p(2, 1, 1) == 2);
}

TEST_CASE("quotients agree with the vertex-level quotient") {
  for (const auto& sv : imprimitive_schemes()) {
    auto t = tensor_from_relation_matrix(sv.matrix);
    auto e = compute_eigendata(t);
    auto q = compute_krein(e);
    int nontrivial = 0;
    for (const auto& s : find_imprimitivity_sets(t, &e, &q)) {
      if (!s.nontrivial) continue;
      ++nontrivial;
      CHECK_MESSAGE(quotient_parameters(t, s).tensor == brute_quotient(sv.matrix, s), sv.name << " " << s.label());
      CHECK(s.n_bar * s.n_tilde == t.n());
      REQUIRE(s.overline0);
      CHECK(s.dual_consistent);
      CHECK(s.tilde0.size() == s.eigenspace_classes.size());
      CHECK(s.overline0->size() == s.relation_classes.size());
    }
    CHECK_MESSAGE(nontrivial > 0, sv.name);
  }
}

TEST_CASE("ratio identity between scheme and subscheme") {
  for (const auto& sv : imprimitive_schemes()) {
    auto t = tensor_from_relation_matrix(sv.matrix);
    auto e = compute_eigendata(t);
    auto q = compute_krein(e);
    for (const auto& s : find_imprimitivity_sets(t, &e, &q)) {
      if (!s.nontrivial) continue;
      auto sub = subscheme_parameters(t, s, e, q);
      for (std::size_t a = 0; a < s.tilde0.size(); ++a)
        for (int j = 0; j <= t.d(); ++j) {
          int c = s.eigenspace_class_of(j);
          CHECK(e.Q[s.tilde0[a]][j] / e.m[j] == sub.Q[a][c] / sub.m[c]);
        }
    }
  }
}
