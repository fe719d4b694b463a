#include "asch/exact/number_field.hpp"

#include <algorithm>

#include "asch/error.hpp"
#include "asch/exact/factor.hpp"

namespace asch {

namespace {

void trim_coords(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Interval product [a,b]*[c,d].
RootInterval imul(const RootInterval& x, const RootInterval& y) {
  Rational p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

constexpr int kMaxRefinementRounds = 12;  // doubling: up to 2^12 * 64 bisections

Rational pow2_inv(unsigned bits) {
  Integer d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  return Rational(Integer(1), d);
}

}  // namespace

NumberField::NumberField(RationalPolynomial f, RootInterval iv) : min_poly_(std::move(f)), interval_(iv), fine_(iv) {
  fine_ = refine_root(min_poly_, fine_, pow2_inv(64));
  const int d = degree();
  std::vector<Rational> cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -min_poly_[static_cast<std::size_t>(i)];
  for (int k = 0; k + 1 < d; ++k) {
    reduction_.push_back(cur);
    // multiply by t
    std::vector<Rational> next(static_cast<std::size_t>(d));
    Rational top = cur[static_cast<std::size_t>(d - 1)];
    for (int i = d - 1; i > 0; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] -= top * min_poly_[static_cast<std::size_t>(i)];
    cur = std::move(next);
  }
}

FieldPtr NumberField::create_trusted(const RationalPolynomial& f, const RootInterval& iv) {
  require(f.degree() >= 1, ErrorKind::domain, "field polynomial must have positive degree");
  RationalPolynomial m = f.monic();
  if (!iv.exact()) {
    require(sign_at(m, iv.lo) * sign_at(m, iv.hi) < 0, ErrorKind::domain,
            "interval does not bracket a root of " + to_string(m, "t"));
    SturmSequence s(m);
    require(s.count(iv.lo, iv.hi) == 1, ErrorKind::domain,
            "interval does not isolate a single root of " + to_string(m, "t"));
  } else {
    require(m.degree() == 1 && sign_at(m, iv.lo) == 0, ErrorKind::domain, "exact interval requires a linear polynomial");
  }
  return FieldPtr(new NumberField(m, iv));
}

FieldPtr NumberField::create(const RationalPolynomial& f, const RootInterval& iv) {
  require(is_irreducible(f), ErrorKind::domain, "field polynomial is reducible: " + to_string(f, "t"));
  return create_trusted(f, iv);
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (min_poly_ != other.min_poly_) return false;
  const auto roots = isolate_real_roots(min_poly_);
  auto index_of = [&](RootInterval x) {
    while (true) {
      int hit = -1, hits = 0;
      for (std::size_t k = 0; k < roots.size(); ++k) {
        if (x.hi < roots[k].lo || roots[k].hi < x.lo) continue;
        hit = static_cast<int>(k);
        ++hits;
      }
      if (hits == 1) return hit;
      x = bisect_root(min_poly_, x);
    }
  };
  return index_of(fine_) == index_of(other.fine_);
}

std::vector<Rational> NumberField::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  if (a.empty() || b.empty()) return {};
  const std::size_t d = static_cast<std::size_t>(degree());
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (std::size_t k = c.size(); k-- > d;) {
    if (sgn(c[k]) == 0) continue;
    const auto& red = reduction_[k - d];
    for (std::size_t i = 0; i < d; ++i) c[i] += c[k] * red[i];
  }
  if (c.size() > d) c.resize(d);
  trim_coords(c);
  return c;
}

std::vector<Rational> NumberField::inverse(const std::vector<Rational>& a) const {
  require(!a.empty(), ErrorKind::domain, "division by zero in number field");
  if (a.size() == 1) return {Rational(1) / a[0]};
  auto bez = RationalPolynomial::extended_gcd(RationalPolynomial(a), min_poly_);
  require(bez.g.degree() == 0, ErrorKind::invariant, "element not invertible: minimal polynomial is reducible");
  std::vector<Rational> out = (bez.s % min_poly_).coefficients();
  trim_coords(out);
  return out;
}

RootInterval NumberField::evaluate(const std::vector<Rational>& a, const RootInterval& t) const {
  RootInterval acc{a.back(), a.back()};
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    acc = imul(acc, t);
    acc.lo += a[i];
    acc.hi += a[i];
  }
  return acc;
}

int NumberField::sign(const std::vector<Rational>& a) const {
  if (a.empty()) return 0;
  if (a.size() == 1) return sgn(a[0]) > 0 ? 1 : -1;
  RootInterval t = fine_;
  unsigned steps = 64;
  for (int round = 0; round < kMaxRefinementRounds; ++round) {
    RootInterval v = evaluate(a, t);
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    for (unsigned i = 0; i < steps && !t.exact(); ++i) t = bisect_root(min_poly_, t);
    steps *= 2;
  }
  fail(ErrorKind::invariant, "sign refinement cap exceeded in field " + describe());
}

RootInterval NumberField::enclosure(const std::vector<Rational>& a, const Rational& width) const {
  if (a.empty()) return {Rational(0), Rational(0)};
  if (a.size() == 1) return {a[0], a[0]};
  RootInterval t = fine_;
  for (int i = 0; i < 100000; ++i) {
    RootInterval v = evaluate(a, t);
    if (v.width() <= width) return v;
    t = bisect_root(min_poly_, t);
  }
  fail(ErrorKind::invariant, "enclosure refinement cap exceeded");
}

RootInterval NumberField::generator_interval(const Rational& width) const {
  return refine_root(min_poly_, fine_, width);
}

double NumberField::approximate(const std::vector<Rational>& a) const {
  RootInterval v = enclosure(a, pow2_inv(60));
  return Rational((v.lo + v.hi) / 2).get_d();
}

std::string NumberField::describe() const {
  return to_string(min_poly_, "t") + " = 0, t in [" + interval_.lo.get_str() + "," + interval_.hi.get_str() + "]";
}

// ------------------------------------------------------------ AlgebraicReal

AlgebraicReal::AlgebraicReal(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  trim();
  require(field_ != nullptr || coords_.size() <= 1, ErrorKind::domain, "irrational coordinates without a field");
  require(field_ == nullptr || static_cast<int>(coords_.size()) <= field_->degree(), ErrorKind::domain,
          "coordinate vector longer than the field degree");
}

AlgebraicReal AlgebraicReal::generator(const FieldPtr& field) {
  if (field->degree() == 1) return AlgebraicReal(field, {-field->min_poly()[0]});
  return AlgebraicReal(field, {Rational(0), Rational(1)});
}

void AlgebraicReal::trim() { trim_coords(coords_); }

Rational AlgebraicReal::to_rational() const {
  if (!is_rational()) fail(ErrorKind::domain, "value is irrational: " + to_string());
  return coords_.empty() ? Rational(0) : coords_[0];
}

int AlgebraicReal::sign() const {
  if (coords_.empty()) return 0;
  if (coords_.size() == 1) return sgn(coords_[0]) > 0 ? 1 : -1;
  return field_->sign(coords_);
}

double AlgebraicReal::to_double() const {
  if (coords_.empty()) return 0.0;
  if (coords_.size() == 1) return coords_[0].get_d();
  return field_->approximate(coords_);
}

RootInterval AlgebraicReal::enclosure(const Rational& width) const {
  if (coords_.size() <= 1) {
    Rational v = coords_.empty() ? Rational(0) : coords_[0];
    return {v, v};
  }
  return field_->enclosure(coords_, width);
}

AlgebraicReal AlgebraicReal::inverse() const {
  require(!is_zero(), ErrorKind::domain, "division by zero");
  if (coords_.size() == 1) {
    AlgebraicReal r(Rational(1) / coords_[0]);
    r.field_ = field_;
    return r;
  }
  return AlgebraicReal(field_, field_->inverse(coords_));
}

AlgebraicReal AlgebraicReal::in_field(const FieldPtr& f) const {
  if (f == field_) return *this;
  if (field_ && f && !field_->same_as(*f) && !is_rational())
    fail(ErrorKind::field_mismatch, "cannot move " + to_string() + " into field " + f->describe());
  require(is_rational() || f != nullptr, ErrorKind::field_mismatch, "irrational value needs a field");
  AlgebraicReal r = *this;
  r.field_ = f;
  return r;
}

FieldPtr common_field(const AlgebraicReal& a, const AlgebraicReal& b) {
  const FieldPtr& fa = a.field();
  const FieldPtr& fb = b.field();
  if (fa == fb) return fa;
  if (!fa) return fb;
  if (!fb) return fa;
  if (a.is_rational() && !b.is_rational()) return fb;
  if (b.is_rational()) return fa;
  if (fa->same_as(*fb)) return fa;
  fail(ErrorKind::field_mismatch, "values in different fields: " + fa->describe() + " vs " + fb->describe());
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
  FieldPtr f = common_field(a, b);
  std::vector<Rational> c(std::max(a.coords_.size(), b.coords_.size()));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) c[i] += a.coords_[i];
  for (std::size_t i = 0; i < b.coords_.size(); ++i) c[i] += b.coords_[i];
  AlgebraicReal r;
  r.field_ = std::move(f);
  r.coords_ = std::move(c);
  r.trim();
  return r;
}

AlgebraicReal operator-(const AlgebraicReal& a) {
  AlgebraicReal r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) {
  FieldPtr f = common_field(a, b);
  std::vector<Rational> c(std::max(a.coords_.size(), b.coords_.size()));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) c[i] += a.coords_[i];
  for (std::size_t i = 0; i < b.coords_.size(); ++i) c[i] -= b.coords_[i];
  AlgebraicReal r;
  r.field_ = std::move(f);
  r.coords_ = std::move(c);
  r.trim();
  return r;
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  FieldPtr f = common_field(a, b);
  AlgebraicReal r;
  r.field_ = f;
  if (a.coords_.empty() || b.coords_.empty()) return r;
  if (a.coords_.size() == 1 || b.coords_.size() == 1) {
    const AlgebraicReal& s = a.coords_.size() == 1 ? a : b;
    const AlgebraicReal& v = a.coords_.size() == 1 ? b : a;
    r.coords_ = v.coords_;
    for (auto& c : r.coords_) c *= s.coords_[0];
    return r;
  }
  r.coords_ = f->multiply(a.coords_, b.coords_);
  return r;
}

AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (b.coords_.size() == 1) {
    AlgebraicReal r = a;
    r.field_ = common_field(a, b);
    for (auto& c : r.coords_) c /= b.coords_[0];
    return r;
  }
  return a * b.inverse();
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  if (a.coords_.size() > 1) common_field(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i)
    if (a.coords_[i] != b.coords_[i]) return false;
  return true;
}

bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return algebraic_compare(a, b) < 0; }

int algebraic_compare(const AlgebraicReal& a, const AlgebraicReal& b) { return (a - b).sign(); }

std::string AlgebraicReal::poly_string() const {
  std::vector<Rational> c = coords_;
  return asch::to_string(RationalPolynomial(c), "t");
}

std::string AlgebraicReal::to_string() const {
  if (is_rational()) return to_rational().get_str();
  return poly_string() + " where " + field_->describe();
}

std::string to_string(const AlgebraicReal& a) { return a.to_string(); }

}  // namespace asch
