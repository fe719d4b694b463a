#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "asch/params/tensor.hpp"

namespace asch {

// n x n matrix of relation indices 0..d; index 0 is the identity relation.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  RelationMatrix(int n, int d) : n_(n), d_(d), r_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int d() const { return d_; }
  int operator()(int x, int y) const { return r_[static_cast<std::size_t>(x) * n_ + y]; }
  int& operator()(int x, int y) { return r_[static_cast<std::size_t>(x) * n_ + y]; }
  void set_symmetric(int x, int y, int i) { (*this)(x, y) = (*this)(y, x) = i; }
  bool symmetric() const;
  // Vertices y with (x, y) in R_i, ascending.
  std::vector<int> neighbours(int x, int i) const;

  friend bool operator==(const RelationMatrix& a, const RelationMatrix& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.r_ == b.r_;
  }
  friend bool operator!=(const RelationMatrix& a, const RelationMatrix& b) { return !(a == b); }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<int> r_;
};

// Throws ErrorKind::not_scheme unless the diagonal is 0, off-diagonal entries
// lie in 1..d, every index occurs and (if asked) the matrix is symmetric.
void check_well_formed(const RelationMatrix& r, bool require_symmetric = true);

// Structure constants of a possibly non-symmetric scheme: c[(h*(d+1)+i)*(d+1)+j]
// is the number of z with (x,z) in R_i and (z,y) in R_j for (x,y) in R_h.
// nullopt with `witness` = "x y x' y'" if two pairs of one relation disagree.
std::optional<std::vector<long>> structure_constants(const RelationMatrix& r, std::string* witness = nullptr);

// Counts p^h_ij and checks constancy over all pairs; throws
// ErrorKind::not_scheme naming a witness pair otherwise.
IntersectionTensor tensor_from_relation_matrix(const RelationMatrix& r);

struct AxiomCheck {
  bool ok = false;
  std::vector<int> witness;  // x, y, x', y' with r(x,y) = r(x',y') but different counts
  std::string reason;
};
AxiomCheck verify_scheme_axioms(const RelationMatrix& r);

struct InducedSubscheme {
  RelationMatrix matrix;          // on the subset, relations renumbered in order
  std::vector<int> relation_map;  // relation_map[new index] = original index
};
InducedSubscheme induced_subscheme(const RelationMatrix& r, const std::vector<int>& subset);

// "n d" followed by n rows of indices.
RelationMatrix read_relation_matrix(std::istream& in);
void write_relation_matrix(std::ostream& out, const RelationMatrix& r);
RelationMatrix load_relation_matrix(const std::string& path);
void save_relation_matrix(const std::string& path, const RelationMatrix& r);

}  // namespace asch
