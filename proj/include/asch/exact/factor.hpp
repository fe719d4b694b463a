#pragma once

#include <vector>

#include "asch/exact/polynomial.hpp"

namespace asch {

inline constexpr int kDefaultFactorDegreeBound = 6;

struct PolyFactor {
  RationalPolynomial poly;  // monic
  int multiplicity;
};

// Yun's algorithm; parts are monic, squarefree and pairwise coprime.
std::vector<PolyFactor> squarefree_decomposition(const RationalPolynomial& p);

// Complete factorization into monic irreducibles over Q, sorted by degree and
// then coefficients. Throws ErrorKind::unsupported if an irreducible factor
// has degree above `degree_bound` (pass a negative bound to disable).
std::vector<PolyFactor> poly_factor_rationals(const RationalPolynomial& p,
                                              int degree_bound = kDefaultFactorDegreeBound);

bool is_irreducible(const RationalPolynomial& p);

}  // namespace asch
