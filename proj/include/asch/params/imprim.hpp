#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asch/params/eigen.hpp"

namespace asch {

using IndexClasses = std::vector<std::vector<int>>;

struct ImprimitivityStructure {
  std::vector<int> tilde0;             // relation indices, sorted, contains 0
  IndexClasses relation_classes;       // I/~ ; class of 0 first, others by smallest member
  std::optional<std::vector<int>> overline0;  // matching dual imprimitivity set
  IndexClasses eigenspace_classes;     // J/≃ ; empty when overline0 is absent
  long n_bar = 0;
  Rational n_tilde;
  bool nontrivial = false;
  // Whether the dual set was found and |tilde0| = |J/≃|, |overline0| = |I/~|.
  bool dual_consistent = false;

  // Throws ErrorKind::invariant when the dual set is missing.
  const std::vector<int>& dual_set() const;
  int relation_class_of(int i) const;
  int eigenspace_class_of(int j) const;
  // "{0, 2}"
  std::string label() const;
};

// All subsets containing 0 that are closed under composition, trivial ones
// included, in order of size then lexicographically. Duals are matched when
// eigendata and Krein parameters are supplied.
std::vector<ImprimitivityStructure> find_imprimitivity_sets(const IntersectionTensor& t,
                                                            const EigenData* e = nullptr,
                                                            const KreinTensor* q = nullptr);
// Structure for a given tilde0 (must be closed).
ImprimitivityStructure imprimitivity_structure(const IntersectionTensor& t, std::vector<int> tilde0,
                                               const EigenData* e = nullptr, const KreinTensor* q = nullptr);

// Quotient parameters as rationals, before any integrality test.
struct QuotientParameters {
  int d_tilde = 0;                       // number of classes minus one
  std::vector<Rational> k;               // k~ per class
  std::vector<Rational> p;               // p~^h_ij, index (h*(d+1)+i)*(d+1)+j
  std::vector<int> labels;               // smallest relation index in each class
  Rational p_at(int h, int i, int j) const { return p[(h * (d_tilde + 1) + i) * (d_tilde + 1) + j]; }
  bool integral() const;
  // Non-integral entries in the order k~ first, then p~^h_ij with i <= j,
  // classes named by their label.
  std::vector<std::string> non_integral() const;
};
QuotientParameters quotient_parameters_exact(const IntersectionTensor& t, const ImprimitivityStructure& s);

struct QuotientScheme {
  IntersectionTensor tensor;
  Matrix<AlgebraicReal> P;  // P~[a][c]: a over overline0, c over I/~
  Matrix<AlgebraicReal> Q;  // Q~[c][a]
};
// Throws ErrorKind::infeasible if some p~ is not integral.
QuotientScheme quotient_parameters(const IntersectionTensor& t, const ImprimitivityStructure& s,
                                   const EigenData* e = nullptr);

struct Subscheme {
  IntersectionTensor tensor;  // relations tilde0 relabeled 0..|tilde0|-1 in increasing order
  KreinTensor krein;          // over J/≃
  Matrix<AlgebraicReal> P;    // P-bar[c][i]
  Matrix<AlgebraicReal> Q;    // Q-bar[i][c]
  std::vector<AlgebraicReal> m;
};
Subscheme subscheme_parameters(const IntersectionTensor& t, const ImprimitivityStructure& s, const EigenData& e,
                               const KreinTensor& q);

}  // namespace asch
