#pragma once

#include <string>

#include "asch/exact/number_field.hpp"

namespace asch {

// alpha * sqrt(beta) with alpha, beta in a real number field F. The radicand
// is canonicalized by pulling the square part of its rational content into
// the coefficient; two values share a class iff their radicands are equal.
class SqrtClassValue {
 public:
  SqrtClassValue() = default;  // zero
  SqrtClassValue(const AlgebraicReal& coefficient, const AlgebraicReal& radicand);
  static SqrtClassValue from_field(const AlgebraicReal& a);  // a * sqrt(1)
  // Positive square root of beta >= 0; ErrorKind::domain if beta < 0.
  static SqrtClassValue sqrt_of(const AlgebraicReal& beta);

  const AlgebraicReal& coefficient() const { return alpha_; }
  const AlgebraicReal& radicand() const { return beta_; }
  bool is_zero() const { return alpha_.is_zero(); }
  // Zero is compatible with every class.
  bool same_class(const SqrtClassValue& other) const;
  AlgebraicReal square() const { return alpha_ * alpha_ * beta_; }
  int sign() const { return alpha_.sign(); }
  double to_double() const;
  std::string to_string() const;  // "alpha·sqrt(beta)"

  friend SqrtClassValue operator+(const SqrtClassValue& a, const SqrtClassValue& b);
  friend SqrtClassValue operator-(const SqrtClassValue& a, const SqrtClassValue& b);
  friend SqrtClassValue operator-(const SqrtClassValue& a);
  friend SqrtClassValue operator*(const AlgebraicReal& s, const SqrtClassValue& v);
  // General product: lands in the class of beta_a * beta_b.
  friend SqrtClassValue operator*(const SqrtClassValue& a, const SqrtClassValue& b);
  friend bool operator==(const SqrtClassValue& a, const SqrtClassValue& b);
  friend bool operator!=(const SqrtClassValue& a, const SqrtClassValue& b) { return !(a == b); }

 private:
  AlgebraicReal alpha_;
  AlgebraicReal beta_;
};

// Product of two values of one class, which lies in F.
AlgebraicReal multiply_same_class(const SqrtClassValue& a, const SqrtClassValue& b);
// d / b, a value in the class of b; b must be nonzero.
SqrtClassValue divide(const AlgebraicReal& d, const SqrtClassValue& b);

std::string to_string(const SqrtClassValue& v);

}  // namespace asch
