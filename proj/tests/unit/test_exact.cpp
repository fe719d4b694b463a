#include <doctest.h>

#include <cmath>
#include <random>

#include "asch/exact/factor.hpp"
#include "asch/exact/field_builder.hpp"
#include "asch/exact/number_field.hpp"
#include "asch/exact/roots.hpp"
#include "asch/exact/sqrt_class.hpp"
#include "kronecker_oracle.hpp"

using namespace asch;

namespace {

RationalPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}

std::vector<RationalPolynomial> flatten(const std::vector<PolyFactor>& fs) {
  std::vector<RationalPolynomial> out;
  for (const auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.poly);
  std::sort(out.begin(), out.end(), [](const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

AlgebraicReal root_of(const RationalPolynomial& p, std::size_t k, FieldPtr* field = nullptr) {
  auto roots = isolate_real_roots(p);
  auto f = NumberField::create(p, roots.at(k));
  if (field) *field = f;
  return AlgebraicReal::generator(f);
}

}  // namespace

TEST_CASE("rational square extraction") {
  auto s = extract_square(Rational(8));
  CHECK(s.root == 2);
  CHECK(s.kernel == 2);
  s = extract_square(Rational(-12, 5));
  // -12/5 = (2/5)^2 * (-15)
  CHECK(s.root == Rational(2, 5));
  CHECK(s.kernel == -15);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("polynomial arithmetic") {
  auto a = P({-1, 0, 1}), b = P({1, 1});
  CHECK((a / b) == P({-1, 1}));
  CHECK((a % b).is_zero());
  auto bz = RationalPolynomial::extended_gcd(P({-2, 0, 1}), P({1, 1}));
  CHECK(bz.g == P({1}));
  CHECK((bz.s * P({-2, 0, 1}) + bz.t * P({1, 1})) == P({1}));
  CHECK(to_string(P({6, -5, 0, 1}), "t") == "t^3 - 5*t + 6");
}

TEST_CASE("factorization of small examples") {
  auto f = flatten(poly_factor_rationals(P({-1, 0, 1})));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == P({-1, 1}));
  CHECK(f[1] == P({1, 1}));
  f = flatten(poly_factor_rationals(P({6, 0, -5, 0, 1})));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == P({-3, 0, 1}));
  CHECK(f[1] == P({-2, 0, 1}));
  CHECK(is_irreducible(P({1, 1, 1, 1, 1})));
  CHECK_FALSE(is_irreducible(P({1, 0, 0, 0, 1})) == false);  // x^4+1 is irreducible
  // Swinnerton-Dyer style: irreducible over Q, splits mod every prime.
  CHECK(is_irreducible(P({1, 0, -10, 0, 1})));
  CHECK_THROWS_AS(poly_factor_rationals(P({-2, 0, 0, 0, 0, 0, 0, 1})), Error);
  CHECK(poly_factor_rationals(P({-2, 0, 0, 0, 0, 0, 0, 1}), -1).size() == 1);
  auto sq = squarefree_decomposition(P({1, 2, 1}) * P({-2, 1}));
  REQUIRE(sq.size() == 2);
}

TEST_CASE("factorization agrees with the Kronecker oracle on random products") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> coef(-3, 3), deg(1, 3), count(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    RationalPolynomial p = P({1});
    long n = count(rng);
    for (long i = 0; i < n; ++i) {
      long d = deg(rng);
      std::vector<Rational> c;
      for (long k = 0; k < d; ++k) c.emplace_back(coef(rng));
      c.emplace_back(1);
      if (sgn(c[0]) == 0) c[0] = 1;
      p = p * RationalPolynomial(c);
    }
    auto fast = flatten(poly_factor_rationals(p, -1));
    auto slow = oracle::factor(p);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    RationalPolynomial prod = P({1});
    for (auto& q : fast) prod = prod * q;
    CHECK(prod == p.monic());
  }
}

TEST_CASE("real root isolation of a cubic") {
  // t^3 - 3/16 t + 7/256
  RationalPolynomial p({Rational(7, 256), Rational(-3, 16), Rational(0), Rational(1)});
  SturmSequence s(p);
  CHECK(s.count_all() == 3);
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  const double expect[] = {-0.4935, 0.1743, 0.3192};
  for (int i = 0; i < 3; ++i) {
    auto r = refine_root(p, roots[i], Rational(1, 1 << 20));
    CHECK(r.lo.get_d() == doctest::Approx(expect[i]).epsilon(1e-3));
  }
  // Count through the rational root of (x-1/2)(x^2-2).
  auto q = P({-2, 0, 1}) * RationalPolynomial({Rational(-1, 2), Rational(1)});
  auto rq = isolate_real_roots(q);
  REQUIRE(rq.size() == 3);
  CHECK(rq[1].lo <= Rational(1, 2));
  CHECK(rq[1].hi >= Rational(1, 2));
}

TEST_CASE("number field arithmetic and comparisons") {
  FieldPtr f;
  AlgebraicReal s2 = root_of(P({-2, 0, 1}), 1, &f);
  CHECK(s2.sign() > 0);
  CHECK(s2 != AlgebraicReal(1));
  CHECK(s2 > AlgebraicReal(1));
  CHECK(s2 < AlgebraicReal(Rational(3, 2)));
  CHECK(s2 * s2 == AlgebraicReal(2));
  CHECK((AlgebraicReal(1) / s2) * s2 == AlgebraicReal(1));
  CHECK((s2 - AlgebraicReal(make_rational(141421356, 100000000))).sign() > 0);
  CHECK(s2.to_double() == doctest::Approx(std::sqrt(2.0)));
  AlgebraicReal other = root_of(P({-2, 0, 1}), 0);
  CHECK(other.sign() < 0);
  CHECK_THROWS_AS(s2 + other, Error);  // distinct embeddings are different fields
  CHECK_THROWS_AS(NumberField::create(P({-4, 0, 1}), RootInterval{Rational(1), Rational(3)}), Error);
}

TEST_CASE("square-root classes") {
  auto third_root2 = SqrtClassValue(AlgebraicReal(Rational(1, 3)), AlgebraicReal(2));
  auto sixth_root8 = SqrtClassValue(AlgebraicReal(Rational(1, 6)), AlgebraicReal(8));
  CHECK(third_root2.same_class(sixth_root8));
  auto sum = third_root2 + sixth_root8;
  CHECK(sum == SqrtClassValue(AlgebraicReal(Rational(2, 3)), AlgebraicReal(2)));
  CHECK(sum.radicand() == AlgebraicReal(2));
  CHECK(multiply_same_class(sum, sum) == AlgebraicReal(Rational(8, 9)));
  auto r3 = SqrtClassValue::sqrt_of(AlgebraicReal(3));
  CHECK_THROWS_AS(sum + r3, Error);
  CHECK((sum * r3).radicand() == AlgebraicReal(6));
  CHECK_THROWS_AS(SqrtClassValue::sqrt_of(AlgebraicReal(-1)), Error);
  CHECK(SqrtClassValue::sqrt_of(AlgebraicReal(Rational(9, 4))) == SqrtClassValue::from_field(AlgebraicReal(Rational(3, 2))));
  auto q = divide(AlgebraicReal(4), r3);
  CHECK(q.same_class(r3));
  CHECK(multiply_same_class(q, r3) == AlgebraicReal(4));
  CHECK(sum.to_string() == "2/3·sqrt(2)");
}

TEST_CASE("field builder: biquadratic and S3 cubic") {
  FieldBuilder b;
  auto r2 = isolate_real_roots(P({-2, 0, 1}));
  auto r3 = isolate_real_roots(P({-3, 0, 1}));
  auto i2 = b.adjoin(P({-2, 0, 1}), r2[1]);
  auto i3 = b.adjoin(P({-3, 0, 1}), r3[0]);
  CHECK(b.degree() == 4);
  CHECK(b.value(i2) * b.value(i2) == AlgebraicReal(2));
  CHECK(b.value(i3) * b.value(i3) == AlgebraicReal(3));
  CHECK(b.value(i2).sign() > 0);
  CHECK(b.value(i3).sign() < 0);
  auto i2b = b.adjoin(P({-2, 0, 1}), r2[0]);
  CHECK(b.degree() == 4);
  CHECK(b.value(i2b) == -b.value(i2));

  FieldBuilder c;
  auto cubic = P({1, -4, 0, 1});  // discriminant 229, Galois group S3
  std::vector<std::size_t> idx;
  for (auto& iv : isolate_real_roots(cubic)) idx.push_back(c.adjoin(cubic, iv));
  CHECK(c.degree() == 6);
  AlgebraicReal sum, prod(1);
  for (auto i : idx) {
    sum += c.value(i);
    prod *= c.value(i);
  }
  CHECK(sum == AlgebraicReal(0));
  CHECK(prod == AlgebraicReal(-1));
  CHECK(c.value(idx[0]) < c.value(idx[1]));

  FieldBuilder a;
  auto cyc = P({1, -3, 0, 1});  // cyclic cubic
  for (auto& iv : isolate_real_roots(cyc)) a.adjoin(cyc, iv);
  CHECK(a.degree() == 3);

  FieldBuilder small(2);
  small.adjoin(P({-2, 0, 1}), r2[1]);
  CHECK_THROWS_AS(small.adjoin(P({-3, 0, 1}), r3[1]), Error);
}
