#pragma once

#include <memory>
#include <string>
#include <vector>

#include "asch/exact/polynomial.hpp"
#include "asch/exact/roots.hpp"

namespace asch {

// Real number field Q(t) = Q[t]/(f) embedded in R by choosing the unique root
// of f inside an isolating interval. Immutable after construction.
class NumberField {
 public:
  // Validates that f is irreducible and that the interval brackets exactly one
  // real root of f with a sign change.
  static std::shared_ptr<const NumberField> create(const RationalPolynomial& f, const RootInterval& iv);
  // Skips the irreducibility check (caller has factored f already).
  static std::shared_ptr<const NumberField> create_trusted(const RationalPolynomial& f, const RootInterval& iv);

  int degree() const { return min_poly_.degree(); }
  const RationalPolynomial& min_poly() const { return min_poly_; }
  const RootInterval& isolating_interval() const { return interval_; }
  // Same minimal polynomial and same selected root.
  bool same_as(const NumberField& other) const;

  // Arithmetic on coordinate vectors (ascending powers of t, trimmed).
  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> inverse(const std::vector<Rational>& a) const;
  int sign(const std::vector<Rational>& a) const;
  // Enclosure of the value with width at most `width`.
  RootInterval enclosure(const std::vector<Rational>& a, const Rational& width) const;
  double approximate(const std::vector<Rational>& a) const;
  // Interval for the generator with width at most `width`.
  RootInterval generator_interval(const Rational& width) const;

  // "t^3 - 3/16*t + 7/256 = 0, t in [a,b]"
  std::string describe() const;

 private:
  NumberField(RationalPolynomial f, RootInterval iv);
  RootInterval evaluate(const std::vector<Rational>& a, const RootInterval& t) const;

  RationalPolynomial min_poly_;
  RootInterval interval_;
  RootInterval fine_;
  std::vector<std::vector<Rational>> reduction_;  // t^(D+k) for k = 0..D-2
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a real number field; a null field means the element is rational.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(long v) : coords_{Rational(v)} { trim(); }  // NOLINT(google-explicit-constructor)
  AlgebraicReal(const Rational& q) : coords_{q} { trim(); }  // NOLINT(google-explicit-constructor)
  AlgebraicReal(FieldPtr field, std::vector<Rational> coords);
  static AlgebraicReal generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const { return coords_.size() <= 1; }
  Rational to_rational() const;  // throws ErrorKind::domain if irrational
  int sign() const;
  double to_double() const;
  RootInterval enclosure(const Rational& width) const;
  AlgebraicReal inverse() const;
  // Same value with its field set to `f` (rational values only, or same field).
  AlgebraicReal in_field(const FieldPtr& f) const;

  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);
  AlgebraicReal& operator+=(const AlgebraicReal& b) { return *this = *this + b; }
  AlgebraicReal& operator-=(const AlgebraicReal& b) { return *this = *this - b; }
  AlgebraicReal& operator*=(const AlgebraicReal& b) { return *this = *this * b; }
  AlgebraicReal& operator/=(const AlgebraicReal& b) { return *this = *this / b; }

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(a == b); }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator>(const AlgebraicReal& a, const AlgebraicReal& b) { return b < a; }
  friend bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(b < a); }
  friend bool operator>=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(a < b); }

  // Rational values render as "p/q"; others as "poly(t) where <field>".
  std::string to_string() const;
  // Polynomial in t only, e.g. "1/2*t^2 - 3".
  std::string poly_string() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Rational> coords_;
};

inline bool is_zero_value(const AlgebraicReal& a) { return a.is_zero(); }

// Exact sign of a - b.
int algebraic_compare(const AlgebraicReal& a, const AlgebraicReal& b);

// Field shared by a and b (null if both rational); throws field_mismatch.
FieldPtr common_field(const AlgebraicReal& a, const AlgebraicReal& b);

std::string to_string(const AlgebraicReal& a);

}  // namespace asch
