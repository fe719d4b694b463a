#include "asch/exact/field_builder.hpp"

#include <algorithm>

#include "asch/error.hpp"
#include "asch/exact/linalg.hpp"

namespace asch {

namespace {

using FieldPolynomial = Polynomial<AlgebraicReal>;

// Norm from the field down to Q: determinant of multiplication by a.
Rational norm(const NumberField& field, const AlgebraicReal& a) {
  const int d = field.degree();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  std::vector<Rational> basis;
  for (int j = 0; j < d; ++j) {
    basis.assign(j + 1, Rational(0));
    basis[j] = 1;
    auto col = field.multiply(a.coords(), basis);
    for (int i = 0; i < d && i < static_cast<int>(col.size()); ++i) m[i][j] = col[i];
  }
  return determinant(std::move(m));
}

AlgebraicReal substitute(const AlgebraicReal& a, const AlgebraicReal& gen) {
  if (a.is_rational()) return a.is_zero() ? AlgebraicReal() : AlgebraicReal(a.to_rational()).in_field(gen.field());
  AlgebraicReal acc = AlgebraicReal(0).in_field(gen.field());
  const auto& c = a.coords();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * gen + AlgebraicReal(c[i]);
  return acc;
}

bool overlaps(const RootInterval& a, const RootInterval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace

bool inside(const AlgebraicReal& value, const RootInterval& iv) {
  if (iv.exact()) return value == AlgebraicReal(iv.lo);
  return value > AlgebraicReal(iv.lo) && value < AlgebraicReal(iv.hi);
}

AlgebraicReal FieldBuilder::value(std::size_t index) const {
  require(index < values_.size(), ErrorKind::usage, "field builder index out of range");
  return values_[index].in_field(field_);
}

AlgebraicReal FieldBuilder::lift(const AlgebraicReal& a) const {
  if (!a.field() || a.field() == field_) return a.in_field(field_);
  for (const auto& [f, gen] : history_)
    if (f == a.field()) return substitute(a, gen);
  fail(ErrorKind::field_mismatch, "element does not belong to this builder's tower");
}

std::size_t FieldBuilder::adjoin(const RationalPolynomial& g0, const RootInterval& iv) {
  require(g0.degree() >= 1, ErrorKind::domain, "adjoining a root of a constant polynomial");
  const RationalPolynomial g = g0.monic();
  if (g.degree() == 1) {
    values_.emplace_back(AlgebraicReal(-g[0]).in_field(field_));
    polys_.push_back(g);
    return values_.size() - 1;
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (polys_[i] == g && inside(values_[i], iv)) {
      values_.push_back(values_[i]);
      polys_.push_back(g);
      return values_.size() - 1;
    }
  }
  if (!field_) {
    if (g.degree() > degree_bound_ && degree_bound_ >= 0)
      fail(ErrorKind::unsupported, "number field degree " + std::to_string(g.degree()) + " exceeds the bound");
    field_ = NumberField::create_trusted(g, iv);
    for (auto& v : values_) v = v.in_field(field_);
    history_.emplace_back(field_, AlgebraicReal::generator(field_));
    values_.push_back(AlgebraicReal::generator(field_));
    polys_.push_back(g);
    return values_.size() - 1;
  }
  extend(g, iv);
  polys_.push_back(g);
  return values_.size() - 1;
}

void FieldBuilder::extend(const RationalPolynomial& g, const RootInterval& iv) {
  const NumberField& F = *field_;
  const int D = F.degree();
  const AlgebraicReal gamma = AlgebraicReal::generator(field_);

  // g over F with the roots already known removed.
  std::vector<AlgebraicReal> gc;
  for (const auto& c : g.coefficients()) gc.emplace_back(AlgebraicReal(c).in_field(field_));
  FieldPolynomial g1(gc);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (polys_[i] != g) continue;
    auto [q, r] = FieldPolynomial::divmod(g1, FieldPolynomial::linear_root(values_[i]));
    require(r.is_zero(), ErrorKind::invariant, "known root does not divide its polynomial");
    g1 = q;
  }
  if (g1.degree() == 1) {
    AlgebraicReal theta = -g1[0] / g1[1];
    require(inside(theta, iv), ErrorKind::invariant, "remaining root lies outside its interval");
    values_.push_back(theta);
    return;
  }

  const int e1 = g1.degree();
  const int nd = D * e1;
  for (long c = 1; c <= 40; ++c) {
    std::vector<Rational> ys;
    for (long x0 = 0; x0 <= nd; ++x0) {
      AlgebraicReal at = AlgebraicReal(x0) - AlgebraicReal(c) * gamma;
      ys.push_back(norm(F, g1(at)));
    }
    RationalPolynomial N = interpolate_at_naturals(std::move(ys));
    require(N.degree() == nd, ErrorKind::invariant, "norm has the wrong degree");
    if (RationalPolynomial::gcd(N, N.derivative()).degree() > 0) continue;

    auto factors = poly_factor_rationals(N, -1);
    // Locate the factor that has z = theta + c*gamma as a root.
    struct Candidate {
      std::size_t factor;
      RootInterval iv;
    };
    std::vector<Candidate> cands;
    for (std::size_t f = 0; f < factors.size(); ++f)
      for (const auto& r : isolate_real_roots(factors[f].poly)) cands.push_back({f, r});
    RootInterval th = iv, ga = F.isolating_interval();
    const Rational cq(c);
    int rounds = 0;
    std::vector<Candidate> hit;
    while (true) {
      RootInterval z{th.lo + cq * ga.lo, th.hi + cq * ga.hi};
      hit.clear();
      for (const auto& cd : cands)
        if (overlaps(cd.iv, z)) hit.push_back(cd);
      if (hit.size() == 1) break;
      require(!hit.empty() && ++rounds < 400, ErrorKind::invariant, "primitive element not located");
      th = bisect_root(g, th);
      ga = F.generator_interval(ga.width() / 2);
      for (auto& cd : cands)
        if (overlaps(cd.iv, z)) cd.iv = bisect_root(factors[cd.factor].poly, cd.iv);
    }
    const RationalPolynomial& h = factors[hit[0].factor].poly;
    if (degree_bound_ >= 0 && h.degree() > degree_bound_)
      fail(ErrorKind::unsupported, "number field degree " + std::to_string(h.degree()) + " exceeds the bound");
    FieldPtr next = NumberField::create_trusted(h, hit[0].iv);
    const AlgebraicReal z = AlgebraicReal::generator(next);

    // gamma is the unique common root of m(t) and g1(z - c t) over the new field.
    std::vector<AlgebraicReal> mc;
    for (const auto& co : F.min_poly().coefficients()) mc.emplace_back(AlgebraicReal(co).in_field(next));
    FieldPolynomial m(mc);
    FieldPolynomial lin({z, AlgebraicReal(-cq).in_field(next)});
    FieldPolynomial H;
    for (int k = g1.degree(); k >= 0; --k) {
      std::vector<AlgebraicReal> ak;
      const AlgebraicReal gk = g1.coeff(k);
      for (const auto& co : gk.coords()) ak.emplace_back(AlgebraicReal(co).in_field(next));
      H = H * lin + FieldPolynomial(ak);
    }
    FieldPolynomial G = FieldPolynomial::gcd(m, H);
    if (G.degree() != 1) continue;
    const AlgebraicReal gamma2 = -G[0];
    const AlgebraicReal theta = z - AlgebraicReal(cq) * gamma2;
    require(inside(gamma2, F.isolating_interval()) && inside(theta, iv), ErrorKind::invariant,
            "primitive element embedding check failed");

    for (auto& v : values_) v = substitute(v, gamma2);
    for (auto& hst : history_) hst.second = substitute(hst.second, gamma2);
    field_ = next;
    history_.emplace_back(field_, z);
    values_.push_back(theta);
    return;
  }
  fail(ErrorKind::invariant, "no separating primitive element found");
}

}  // namespace asch
