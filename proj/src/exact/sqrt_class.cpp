#include "asch/exact/sqrt_class.hpp"

#include <cmath>

#include "asch/error.hpp"

namespace asch {

namespace {

// Positive rational c with beta / c having integral, primitive coordinates.
Rational content(const std::vector<Rational>& coords) {
  Integer num = 0, den = 1;
  for (const auto& c : coords) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

SqrtClassValue::SqrtClassValue(const AlgebraicReal& coefficient, const AlgebraicReal& radicand) {
  if (coefficient.is_zero() || radicand.is_zero()) return;
  if (radicand.sign() < 0) fail(ErrorKind::domain, "negative radicand: " + radicand.to_string());
  Rational c = content(radicand.coords());
  SquareExtraction sq = extract_square(c);
  alpha_ = coefficient * AlgebraicReal(sq.root);
  beta_ = radicand * AlgebraicReal(Rational(sq.kernel) / c);
}

SqrtClassValue SqrtClassValue::from_field(const AlgebraicReal& a) { return SqrtClassValue(a, AlgebraicReal(1)); }

SqrtClassValue SqrtClassValue::sqrt_of(const AlgebraicReal& beta) {
  if (beta.sign() < 0) fail(ErrorKind::domain, "square root of a negative value: " + beta.to_string());
  AlgebraicReal one(1);
  if (beta.field()) one = one.in_field(beta.field());
  return SqrtClassValue(one, beta);
}

bool SqrtClassValue::same_class(const SqrtClassValue& other) const {
  if (is_zero() || other.is_zero()) return true;
  return beta_ == other.beta_;
}

double SqrtClassValue::to_double() const {
  if (is_zero()) return 0.0;
  return alpha_.to_double() * std::sqrt(beta_.to_double());
}

std::string SqrtClassValue::to_string() const {
  if (is_zero()) return "0";
  auto paren = [](const AlgebraicReal& a) {
    std::string s = a.is_rational() ? a.to_rational().get_str() : "(" + a.poly_string() + ")";
    return s;
  };
  return paren(alpha_) + "·sqrt(" + paren(beta_) + ")";
}

SqrtClassValue operator+(const SqrtClassValue& a, const SqrtClassValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!(a.beta_ == b.beta_))
    fail(ErrorKind::incompatible_class, "adding values of different classes: " + a.to_string() + " + " + b.to_string());
  SqrtClassValue r;
  r.alpha_ = a.alpha_ + b.alpha_;
  if (!r.alpha_.is_zero()) r.beta_ = a.beta_;
  return r;
}

SqrtClassValue operator-(const SqrtClassValue& a) {
  SqrtClassValue r = a;
  r.alpha_ = -r.alpha_;
  return r;
}

SqrtClassValue operator-(const SqrtClassValue& a, const SqrtClassValue& b) { return a + (-b); }

SqrtClassValue operator*(const AlgebraicReal& s, const SqrtClassValue& v) {
  SqrtClassValue r;
  if (s.is_zero() || v.is_zero()) return r;
  r.alpha_ = s * v.alpha_;
  r.beta_ = v.beta_;
  return r;
}

SqrtClassValue operator*(const SqrtClassValue& a, const SqrtClassValue& b) {
  if (a.is_zero() || b.is_zero()) return SqrtClassValue();
  if (a.beta_ == b.beta_) return SqrtClassValue::from_field(a.alpha_ * b.alpha_ * a.beta_);
  return SqrtClassValue(a.alpha_ * b.alpha_, a.beta_ * b.beta_);
}

bool operator==(const SqrtClassValue& a, const SqrtClassValue& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.beta_ == b.beta_ && a.alpha_ == b.alpha_;
}

AlgebraicReal multiply_same_class(const SqrtClassValue& a, const SqrtClassValue& b) {
  if (a.is_zero() || b.is_zero()) return AlgebraicReal();
  if (!(a.radicand() == b.radicand()))
    fail(ErrorKind::incompatible_class, "product of values of different classes: " + a.to_string() + " * " + b.to_string());
  return a.coefficient() * b.coefficient() * a.radicand();
}

SqrtClassValue divide(const AlgebraicReal& d, const SqrtClassValue& b) {
  require(!b.is_zero(), ErrorKind::domain, "division by a zero square-root value");
  // d / (alpha sqrt(beta)) = d / (alpha beta) * sqrt(beta)
  return (d / (b.coefficient() * b.radicand())) * SqrtClassValue(AlgebraicReal(1).in_field(b.radicand().field()), b.radicand());
}

std::string to_string(const SqrtClassValue& v) { return v.to_string(); }

}  // namespace asch
