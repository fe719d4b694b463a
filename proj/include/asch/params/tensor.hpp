#pragma once

#include <string>
#include <vector>

#include "asch/exact/linalg.hpp"

namespace asch {

// Compressed parameter array [[k_1..k_d], [p^2_11..p^d_11; p^3_12..; ..; p^d_{1,d-1}]].
// Block j (1-based) lists p^h_{1j} for h = j+1..d.
struct ParameterArray {
  std::vector<long> valencies;
  std::vector<std::vector<long>> blocks;

  int d() const { return static_cast<int>(valencies.size()); }
  long order() const;
  // "[[12, 4, 4, 24], [6, 0, 3; 0, 1; 2]]"
  std::string to_string() const;
  // Whitespace-insensitive; throws ErrorKind::parse with a character position.
  static ParameterArray parse(const std::string& text);
  friend bool operator==(const ParameterArray& a, const ParameterArray& b) {
    return a.valencies == b.valencies && a.blocks == b.blocks;
  }
};

// Intersection numbers p^h_ij of a d-class symmetric scheme, indices 0..d.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int d) : d_(d), p_((d + 1) * (d + 1) * (d + 1), 0) {}

  int d() const { return d_; }
  long n() const;
  long k(int i) const { return p(0, i, i); }
  std::vector<long> valencies() const;
  long p(int h, int i, int j) const { return p_[index(h, i, j)]; }
  long& p(int h, int i, int j) { return p_[index(h, i, j)]; }

  // B_i with (B_i)[h][j] = p^h_ij; i -> B_i is the regular representation.
  Matrix<Rational> intersection_matrix(int i) const;
  ParameterArray to_parameter_array() const;
  // Indices relabeled: new index perm[i] takes the role of old i (perm[0] = 0).
  IntersectionTensor relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const IntersectionTensor& a, const IntersectionTensor& b) {
    return a.d_ == b.d_ && a.p_ == b.p_;
  }
  friend bool operator!=(const IntersectionTensor& a, const IntersectionTensor& b) { return !(a == b); }

 private:
  std::size_t index(int h, int i, int j) const {
    return (static_cast<std::size_t>(h) * (d_ + 1) + i) * (d_ + 1) + j;
  }
  int d_ = 0;
  std::vector<long> p_;
};

// Every violated identity, e.g. "p^1_23 != p^1_32"; empty iff the tensor is valid.
std::vector<std::string> validate_intersection_tensor(const IntersectionTensor& t);

// Throws ErrorKind::infeasible for non-integral or negative entries and
// ErrorKind::not_qpg when A_1 does not generate the algebra.
IntersectionTensor recover_from_parameter_array(const ParameterArray& a);

// True iff sum_{i in fused} B_i has d+1 distinct eigenvalues.
bool check_quotient_polynomial(const IntersectionTensor& t, const std::vector<int>& fused);

// Coefficients c with A_j = sum_k c[j][k] B^k for the generator B = sum_i w_i A_i;
// nullopt if B does not generate the algebra.
std::optional<Matrix<Rational>> generator_coefficients(const IntersectionTensor& t, const std::vector<Rational>& weights);

}  // namespace asch
