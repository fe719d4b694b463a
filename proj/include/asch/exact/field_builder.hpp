#pragma once

#include <cstddef>
#include <vector>

#include "asch/exact/factor.hpp"
#include "asch/exact/number_field.hpp"

namespace asch {

// Grows a single real number field that contains every adjoined real root.
// Each new root is adjoined through a primitive element theta + c*gamma whose
// minimal polynomial is a factor of a norm; earlier elements are rewritten in
// the larger field.
class FieldBuilder {
 public:
  explicit FieldBuilder(int degree_bound = kDefaultFactorDegreeBound) : degree_bound_(degree_bound) {}

  // Adjoins the root of the irreducible g isolated by iv and returns its index.
  // Throws ErrorKind::unsupported when the field would exceed the degree bound.
  std::size_t adjoin(const RationalPolynomial& g, const RootInterval& iv);

  const FieldPtr& field() const { return field_; }  // null while everything is rational
  int degree() const { return field_ ? field_->degree() : 1; }
  std::size_t size() const { return values_.size(); }
  // Adjoined root expressed in the current field.
  AlgebraicReal value(std::size_t index) const;
  // Re-expresses an element of an earlier stage of this builder's field.
  AlgebraicReal lift(const AlgebraicReal& a) const;

 private:
  void extend(const RationalPolynomial& g, const RootInterval& iv);

  int degree_bound_;
  FieldPtr field_;
  std::vector<AlgebraicReal> values_;
  std::vector<RationalPolynomial> polys_;
  // Generators of earlier fields expressed in the current field.
  std::vector<std::pair<FieldPtr, AlgebraicReal>> history_;
};

// Whether value lies strictly inside iv (or equals an exact endpoint).
bool inside(const AlgebraicReal& value, const RootInterval& iv);

}  // namespace asch
