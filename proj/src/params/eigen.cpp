#include "asch/params/eigen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "asch/error.hpp"
#include "asch/exact/factor.hpp"
#include "asch/exact/field_builder.hpp"

namespace asch {

bool EigenData::multiplicities_integral() const {
  for (const auto& v : m)
    if (!v.is_rational() || !is_integral(v.to_rational()) || v.sign() <= 0) return false;
  return true;
}

std::vector<long> EigenData::integer_multiplicities() const {
  require(multiplicities_integral(), ErrorKind::infeasible, "multiplicities are not positive integers");
  std::vector<long> out;
  for (const auto& v : m) out.push_back(v.to_rational().get_num().get_si());
  return out;
}

namespace {

std::vector<std::vector<Rational>> weight_candidates(int d) {
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> w(d + 1, Rational(0));
  w[1] = 1;
  out.push_back(w);
  for (int i = 1; i <= d; ++i) w[i] = i;
  out.push_back(w);
  for (int i = 1; i <= d; ++i) w[i] = i * i;
  out.push_back(w);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> pick(-12, 12);
  for (int trial = 0; trial < 40; ++trial) {
    for (int i = 1; i <= d; ++i) w[i] = pick(rng);
    out.push_back(w);
  }
  return out;
}

AlgebraicReal horner(const std::vector<Rational>& c, const AlgebraicReal& x) {
  AlgebraicReal acc = AlgebraicReal(0).in_field(x.field());
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + AlgebraicReal(c[i]);
  return acc;
}

}  // namespace

EigenData compute_eigendata(const IntersectionTensor& t, int degree_bound) {
  const int d = t.d();
  EigenData e;
  e.d = d;
  e.n = t.n();
  e.k = t.valencies();

  std::optional<Matrix<Rational>> coeff;
  for (auto& w : weight_candidates(d)) {
    coeff = generator_coefficients(t, w);
    if (coeff) {
      e.generator_weights = w;
      break;
    }
  }
  require(coeff.has_value(), ErrorKind::invariant, "no generator of the Bose-Mesner algebra found");

  auto B = zero_matrix<Rational>(d + 1, d + 1);
  for (int i = 1; i <= d; ++i) {
    if (sgn(e.generator_weights[i]) == 0) continue;
    auto Bi = t.intersection_matrix(i);
    for (int h = 0; h <= d; ++h)
      for (int j = 0; j <= d; ++j) B[h][j] += e.generator_weights[i] * Bi[h][j];
  }
  auto factors = poly_factor_rationals(characteristic_polynomial(B), degree_bound);

  struct Root {
    RationalPolynomial g;
    RootInterval iv;
  };
  std::vector<Root> roots;
  for (const auto& f : factors) {
    require(f.multiplicity == 1, ErrorKind::invariant, "repeated eigenvalue of a generator");
    auto ivs = isolate_real_roots(f.poly);
    if (static_cast<int>(ivs.size()) != f.poly.degree())
      fail(ErrorKind::not_scheme, "non-real eigenvalue: " + to_string(f.poly, "x"));
    for (auto& iv : ivs) roots.push_back({f.poly, iv});
  }
  require(static_cast<int>(roots.size()) == d + 1, ErrorKind::invariant, "eigenvalue count mismatch");

  FieldBuilder builder(degree_bound);
  std::vector<std::size_t> handle;
  for (const auto& r : roots) handle.push_back(builder.adjoin(r.g, r.iv));
  e.field = builder.field();

  struct Row {
    std::vector<AlgebraicReal> common, local;
    FieldPtr field;
  };
  std::vector<Row> rows;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    Row row;
    AlgebraicReal eta = builder.value(handle[r]);
    AlgebraicReal eta_local;
    if (roots[r].g.degree() == 1) {
      eta_local = AlgebraicReal(-roots[r].g[0]);
    } else {
      row.field = NumberField::create_trusted(roots[r].g, roots[r].iv);
      eta_local = AlgebraicReal::generator(row.field);
    }
    for (int i = 0; i <= d; ++i) {
      row.common.push_back(horner((*coeff)[i], eta));
      row.local.push_back(horner((*coeff)[i], eta_local));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [d](const Row& a, const Row& b) {
    for (int i = 1; i <= d; ++i) {
      int c = algebraic_compare(a.common[i], b.common[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });

  const Rational n(e.n);
  for (auto& row : rows) {
    AlgebraicReal s, sl;
    for (int i = 0; i <= d; ++i) {
      const Rational ki(e.k[i]);
      s += row.common[i] * row.common[i] / AlgebraicReal(ki);
      sl += row.local[i] * row.local[i] / AlgebraicReal(ki);
    }
    e.P.push_back(row.common);
    e.m.push_back(AlgebraicReal(n) / s);
    e.local_field.push_back(row.field);
    e.local_P.push_back(row.local);
    e.local_m.push_back(AlgebraicReal(n) / sl);
    std::vector<AlgebraicReal> ip;
    for (int i = 0; i <= d; ++i) ip.push_back(row.local[i] / AlgebraicReal(Rational(e.k[i])));
    e.local_ip.push_back(std::move(ip));
  }
  e.Q = Matrix<AlgebraicReal>(d + 1, std::vector<AlgebraicReal>(d + 1));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) e.Q[i][j] = e.m[j] * e.P[j][i] / AlgebraicReal(Rational(e.k[i]));

  auto PQ = multiply(e.P, e.Q);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      require(PQ[i][j] == AlgebraicReal(i == j ? n : Rational(0)), ErrorKind::invariant, "P Q != n I");
  return e;
}

KreinTensor compute_krein(const EigenData& e) {
  const int d = e.d;
  KreinTensor q(d);
  const AlgebraicReal inv_n = AlgebraicReal(make_rational(1, e.n));
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = i; j <= d; ++j) {
        AlgebraicReal s;
        for (int l = 0; l <= d; ++l) s += e.Q[l][i] * e.Q[l][j] * e.P[h][l];
        s *= inv_n;
        q.q(h, i, j) = s;
        q.q(h, j, i) = s;
      }
  return q;
}

std::optional<std::vector<int>> check_formal_self_duality(const EigenData& e) {
  const int d = e.d;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> iota{0};
    iota.insert(iota.end(), perm.begin(), perm.end());
    bool ok = true;
    for (int i = 1; i <= d && ok; ++i) ok = e.m[iota[i]] == AlgebraicReal(e.k[i]);
    for (int i = 0; i <= d && ok; ++i)
      for (int j = 0; j <= d && ok; ++j) ok = e.P[iota[i]][j] == e.Q[i][iota[j]];
    if (ok) return iota;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace asch
