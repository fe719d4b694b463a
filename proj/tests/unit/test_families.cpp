#include <doctest.h>

#include "asch/error.hpp"
#include "asch/families/families.hpp"
#include "asch/families/finite_field.hpp"
#include "asch/params/eigen.hpp"
#include "asch/params/imprim.hpp"
#include "asch/schemes/isomorphism.hpp"
#include "scheme_helpers.hpp"

using namespace asch;

namespace {

ParameterArray A(const std::string& s) { return ParameterArray::parse(s); }

bool realizes(const SchemeValue& s, const std::string& array) {
  return match_parameter_array(s.tensor(), A(array)).has_value();
}

AlgebraicReal R(long a) { return AlgebraicReal(Rational(a)); }

// Product tensor from factor tensors.
bool product_formula_holds(const SchemeValue& a, const SchemeValue& b) {
  auto ta = a.tensor(), tb = b.tensor(), tp = direct_product(a, b).tensor();
  const int Db = tb.d() + 1;
  for (int h = 0; h <= ta.d(); ++h)
    for (int i = 0; i <= ta.d(); ++i)
      for (int j = 0; j <= ta.d(); ++j)
        for (int h2 = 0; h2 < Db; ++h2)
          for (int i2 = 0; i2 < Db; ++i2)
            for (int j2 = 0; j2 < Db; ++j2)
              if (tp.p(h * Db + h2, i * Db + i2, j * Db + j2) != ta.p(h, i, j) * tb.p(h2, i2, j2)) return false;
  return true;
}

}  // namespace

TEST_CASE("finite fields") {
  for (long q : {2L, 3L, 4L, 5L, 8L, 9L, 16L, 25L, 27L, 49L, 64L}) {
    FiniteField f(q);
    // multiplicative group is cyclic of order q-1 and logs invert exps
    for (long e = 0; e < q - 1; ++e) CHECK(f.log(f.exp(e)) == e);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      for (int b = 1; b < q; ++b) CHECK(f.mul(f.add(a, b), b) == f.add(f.mul(a, b), f.mul(b, b)));
    }
  }
  CHECK_THROWS_AS(FiniteField(12), Error);
  CHECK_THROWS_AS(FiniteField(70000), Error);
}

TEST_CASE("named schemes") {
  CHECK(complete_scheme(5).tensor().p(1, 1, 1) == 3);
  CHECK(johnson_scheme(5, 2).tensor().to_parameter_array().to_string() == "[[6, 3], [4]]");
  CHECK(hamming_scheme(3, 2).tensor() ==
        recover_from_parameter_array(A("[[3, 3, 1], [2, 0; 3]]")));

  // Cyc(13, 2): Paley graph on F13 is srg(13, 6, 2, 3); oracle by quadratic residues
  auto paley = cyclotomic_scheme(13, 2);
  std::vector<bool> square(13, false);
  for (int x = 1; x < 13; ++x) square[x * x % 13] = true;
  for (int x = 0; x < 13; ++x)
    for (int y = 0; y < 13; ++y)
      if (x != y) CHECK((paley.matrix(x, y) == paley.matrix(1, 0)) == (square[(y - x + 13) % 13] == square[12]));
  auto t = paley.tensor();
  CHECK(t.k(1) == 6);
  CHECK(t.to_parameter_array().to_string() == "[[6, 6], [3]]");
  CHECK(verify_scheme_axioms(cyclotomic_scheme(16, 3).matrix).ok);
  CHECK(cyclotomic_scheme(16, 3).symmetric());
  CHECK_FALSE(cyclotomic_scheme(7, 2).symmetric());
  CHECK(cyclotomic_scheme(25, 4).symmetric());

  CHECK_THROWS_AS(cyclotomic_scheme(13, 5), Error);
  CHECK_THROWS_AS(named_scheme("J", {5}), Error);
  CHECK_THROWS_AS(named_scheme("Q", {5}), Error);
  CHECK(named_scheme("C", {5}).tensor() == cyclic_scheme(5).tensor());
}

TEST_CASE("J(5, 2) is the quotient of the 40-vertex scheme") {
  auto t = recover_from_parameter_array(A("[[12, 2, 1, 12, 12], [6, 0, 4, 1; 0, 0, 1; 0, 1; 4]]"));
  auto s = imprimitivity_structure(t, {0, 2, 3});
  auto q = quotient_parameters(t, s).tensor;
  CHECK(match_parameter_array(q, johnson_scheme(5, 2).tensor().to_parameter_array()));
}

TEST_CASE("direct products") {
  CHECK(realizes(direct_product(complete_scheme(3), complete_scheme(13)), "[[24, 2, 12], [12, 22; 2]]"));
  CHECK(realizes(direct_product(complete_scheme(2), complete_scheme(26)), "[[25, 25, 1], [24, 0; 25]]"));
  auto k5 = complete_scheme(5);
  CHECK(direct_product(k5, complete_scheme(1)).matrix == k5.matrix);
  auto k22 = direct_product(complete_scheme(2), complete_scheme(2));
  CHECK(k22.matrix.n() == 4);
  CHECK(k22.matrix.d() == 3);
  CHECK(brute_force_is_scheme(k22.matrix));
  CHECK(product_formula_holds(complete_scheme(2), complete_scheme(3)));
  CHECK(product_formula_holds(cyclic_scheme(5), complete_scheme(3)));
  CHECK(structure_constants(direct_product(cyclic_group_scheme(4), cyclic_scheme(5)).matrix));
}

TEST_CASE("lexicographic products") {
  CHECK(realizes(lexicographic_product(cyclic_scheme(5), complete_scheme(11)), "[[22, 10, 22], [22, 11; 0]]"));
  auto c5 = cyclic_scheme(5);
  CHECK(lexicographic_product(c5, complete_scheme(1)).matrix == c5.matrix);
  auto kk = lexicographic_product(complete_scheme(2), complete_scheme(2));
  CHECK(kk.matrix.d() == 2);
  auto t = kk.tensor();
  CHECK(t.k(1) == 2);  // crossing class
  CHECK(t.k(2) == 1);  // 2.K2
  // a coproduct with non-identical fibres of equal parameters
  auto pet = distance_matrix(petersen_adjacency());
  auto j52 = johnson_scheme(5, 2);
  auto kneser = SchemeValue{relabel_relations(j52.matrix, {0, 2, 1}), "kneser"};
  CHECK(tensor_from_relation_matrix(pet) == kneser.tensor());
  std::vector<SchemeValue> fibres(3, kneser);
  fibres[1] = SchemeValue{permute_vertices(pet, {3, 1, 4, 0, 2, 9, 8, 7, 6, 5}), "petersen"};
  auto co = lexicographic_coproduct(complete_scheme(3), fibres);
  CHECK(verify_scheme_axioms(co.matrix).ok);
  CHECK_THROWS_AS(lexicographic_coproduct(complete_scheme(2), {j52, kneser}), Error);
}

TEST_CASE("Hamming powers") {
  auto cube = hamming_power(3, complete_scheme(2));
  auto e = compute_eigendata(cube.tensor());
  const long disp[4][4] = {{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -3, 3, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(e.P[i][j] == R(disp[i][j]));
      CHECK(e.Q[i][j] == R(disp[i][j]));
    }
  auto h23 = hamming_power(2, complete_scheme(3));
  auto e2 = compute_eigendata(h23.tensor());
  const long p2[3][3] = {{1, 4, 4}, {1, 1, -2}, {1, -2, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(e2.P[i][j] == R(p2[i][j]));
  CHECK(h23.matrix == hamming_scheme(2, 3).matrix);
  auto c5 = cyclic_scheme(5);
  CHECK(hamming_power(1, c5).matrix == c5.matrix);
  auto h2c5 = hamming_power(2, c5);
  CHECK(h2c5.matrix.d() == 5);
  CHECK(verify_scheme_axioms(h2c5.matrix).ok);
}

TEST_CASE("symmetrization") {
  CHECK(symmetrization(cyclic_group_scheme(5)).matrix == cyclic_scheme(5).matrix);
  CHECK(symmetrization(cyclic_scheme(7)).matrix == cyclic_scheme(7).matrix);
  CHECK(symmetrization(cyclotomic_scheme(5, 4)).matrix == cyclotomic_scheme(5, 2).matrix);
  CHECK(symmetrization(cyclotomic_scheme(7, 2)).matrix.d() == 1);
  CHECK_FALSE(cyclic_group_scheme(5).symmetric());
  // non-scheme input is refused
  auto bad = matrix_from_rows({{0, 1, 2, 2}, {2, 0, 1, 2}, {1, 2, 0, 1}, {1, 1, 2, 0}}, 2);
  CHECK_THROWS_AS(symmetrization(SchemeValue{bad, "bad"}), Error);
}

TEST_CASE("special schemes") {
  auto smith = special_scheme("smith40");
  CHECK(smith.tensor().to_parameter_array().to_string() == "[[8, 4, 3, 24], [2, 0, 2; 0, 1; 1]]");
  CHECK(automorphism_count(smith.matrix) == 1920);

  auto pc = special_scheme("paircube40");
  CHECK(pc.tensor().to_parameter_array().to_string() == "[[12, 2, 1, 12, 12], [6, 0, 4, 1; 0, 0, 1; 0, 1; 4]]");
  CHECK(automorphism_count(pc.matrix) == 3840);

  auto c = special_scheme("c352");
  CHECK(c.tensor().to_parameter_array().to_string() == "[[6, 4, 4, 12, 18], [3, 0, 0, 1; 0, 1, 0; 2, 0; 2]]");
  CHECK(automorphism_count(c.matrix) == 77760);
  // no automorphism exchanges R_2 and R_3
  CHECK(relation_permutations_realized(c.matrix).size() == 1);
}

TEST_CASE("smith40 from its graph") {
  // R_3 together with x is the distance-3 clique, R_2 the vertices at
  // distance 2 from all of it, R_4 the rest at distance 2
  auto s = special_scheme("smith40").matrix;
  std::vector<std::vector<int>> adj(40);
  for (int x = 0; x < 40; ++x) adj[x] = s.neighbours(x, 1);
  auto dist = distance_matrix(adj);
  CHECK(dist.d() == 3);
  for (int x = 0; x < 40; ++x) {
    std::vector<int> clique{x};
    for (int y = 0; y < 40; ++y)
      if (dist(x, y) == 3) clique.push_back(y);
    REQUIRE(clique.size() == 4);
    for (int a : clique)
      for (int b : clique)
        if (a != b) CHECK(dist(a, b) == 3);
    for (int y = 0; y < 40; ++y) {
      bool all2 = true;
      for (int c : clique) all2 = all2 && dist(c, y) == 2;
      if (dist(x, y) == 1) CHECK(s(x, y) == 1);
      if (dist(x, y) == 3) CHECK(s(x, y) == 3);
      if (dist(x, y) == 2) CHECK(s(x, y) == (all2 ? 2 : 4));
    }
  }
}
