#pragma once

#include <optional>
#include <vector>

#include "asch/exact/factor.hpp"
#include "asch/exact/number_field.hpp"
#include "asch/params/tensor.hpp"

namespace asch {

// Eigenmatrices of a symmetric scheme. Eigenspaces are ordered by descending
// P_{j1}, ties broken by the later columns.
struct EigenData {
  int d = 0;
  long n = 0;
  std::vector<long> k;
  FieldPtr field;  // common field of every entry; null if all rational
  Matrix<AlgebraicReal> P;  // P[j][i]: eigenvalue of A_i on S_j
  Matrix<AlgebraicReal> Q;  // Q[i][j]
  std::vector<AlgebraicReal> m;
  std::vector<Rational> generator_weights;  // A = sum w_i A_i generates the algebra

  // Per eigenspace j the same data over the smaller field generated by row j of P.
  std::vector<FieldPtr> local_field;
  Matrix<AlgebraicReal> local_P;   // [j][i]
  Matrix<AlgebraicReal> local_ip;  // [j][i] = Q_ij / m_j = P_ji / k_i
  std::vector<AlgebraicReal> local_m;

  bool multiplicities_integral() const;
  // Throws ErrorKind::infeasible unless every m_j is a positive integer.
  std::vector<long> integer_multiplicities() const;
};

// Uses A_1 as generator when it has d+1 distinct eigenvalues, otherwise the
// first of a fixed list of integer combinations that does.
EigenData compute_eigendata(const IntersectionTensor& t, int degree_bound = kDefaultFactorDegreeBound);

class KreinTensor {
 public:
  KreinTensor() = default;
  explicit KreinTensor(int d) : d_(d), q_((d + 1) * (d + 1) * (d + 1)) {}
  int d() const { return d_; }
  const AlgebraicReal& q(int h, int i, int j) const { return q_[index(h, i, j)]; }
  AlgebraicReal& q(int h, int i, int j) { return q_[index(h, i, j)]; }

 private:
  std::size_t index(int h, int i, int j) const {
    return (static_cast<std::size_t>(h) * (d_ + 1) + i) * (d_ + 1) + j;
  }
  int d_ = 0;
  std::vector<AlgebraicReal> q_;
};

// q^h_ij = (1/n) sum_l Q_li Q_lj P_hl
KreinTensor compute_krein(const EigenData& e);

// iota with P_{iota(i), j} = Q_{i, iota(j)} for all i, j, if one exists.
std::optional<std::vector<int>> check_formal_self_duality(const EigenData& e);

}  // namespace asch
