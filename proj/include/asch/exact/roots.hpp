#pragma once

#include <vector>

#include "asch/exact/polynomial.hpp"

namespace asch {

// Closed interval [lo, hi]; lo == hi marks an exactly known rational root.
struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& p);
  int variations_at(const Rational& x) const;
  int variations_at_infinity(int side) const;  // side = +1 or -1
  // Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  int count_all() const;
  const std::vector<RationalPolynomial>& chain() const { return chain_; }

 private:
  std::vector<RationalPolynomial> chain_;
};

int sign_at(const RationalPolynomial& p, const Rational& x);

// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const RationalPolynomial& p);

// p must be squarefree. Intervals are sorted ascending and pairwise disjoint;
// non-exact intervals satisfy sign(p(lo)) * sign(p(hi)) < 0.
std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p);

// Bisects an isolating interval of a squarefree p until width <= max_width.
RootInterval refine_root(const RationalPolynomial& p, RootInterval iv, const Rational& max_width);

// One bisection step (no-op on exact intervals).
RootInterval bisect_root(const RationalPolynomial& p, const RootInterval& iv);

}  // namespace asch
