#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "asch/exact/sqrt_class.hpp"
#include "asch/graphkit/graph.hpp"
#include "asch/params/imprim.hpp"
#include "asch/schemes/relation_matrix.hpp"

namespace asch {

// Target Gram matrix for compute_embedding.
struct GramSpec {
  int n = 0;
  Matrix<AlgebraicReal> C;
  long m = 0;                             // dimension of the target eigenspace
  std::vector<AlgebraicReal> ip_table;    // ip_table[i] = Q_ij / m_j

  // Throws ErrorKind::usage unless C is symmetric with unit diagonal and
  // every off-diagonal entry appears in ip_table.
  void validate() const;
};

// C_xy = Q_ij/m_j for r(x, y) = i. With `relation_map`, the relation i of r
// stands for relation relation_map[i] of the scheme.
GramSpec gram_from_candidate(const RelationMatrix& r, const EigenData& e, int j,
                             const std::vector<int>* relation_map = nullptr);

// Rows of unit vectors; column h holds values of one class alpha*sqrt(beta_h).
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  explicit EmbeddingMatrix(long m) : m_(m) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int rank() const { return static_cast<int>(radicands_.size()); }
  long dimension() const { return m_; }
  bool full_rank() const { return rank() == m_; }
  const SqrtClassValue& entry(int x, int h) const;
  const std::vector<SqrtClassValue>& row(int x) const { return rows_[x]; }
  const AlgebraicReal& radicand(int h) const { return radicands_[h]; }

  // Exact inner product of two coordinate vectors over this basis.
  static AlgebraicReal inner(const std::vector<SqrtClassValue>& a, const std::vector<SqrtClassValue>& b);
  AlgebraicReal inner(int x, int y) const { return inner(rows_[x], rows_[y]); }

  // One row per vertex, entries as "alpha·sqrt(beta)" separated by spaces.
  void dump(std::ostream& out) const;

 private:
  friend class EmbeddingBuilder;
  long m_ = 0;
  std::vector<AlgebraicReal> radicands_;
  std::vector<std::vector<SqrtClassValue>> rows_;  // each padded to rank()
};

enum class EmbedFailureKind { inconsistent, norm_too_large, norm_too_small, rank_deficient };

struct EmbedFailure {
  EmbedFailureKind kind{};
  int x = -1;       // row being placed
  int y = -1;       // row with the inconsistent inner product
  AlgebraicReal s;  // squared norm reached
  std::string describe() const;
};

struct EmbedResult {
  std::optional<EmbeddingMatrix> matrix;
  std::optional<EmbedFailure> failure;
  explicit operator bool() const { return matrix.has_value(); }
};

// Column-by-column embedding with mandatory verification of U U^T = C (ErrorKind::invariant
// on mismatch).
EmbedResult compute_embedding(const GramSpec& g);

struct ExtendResult {
  std::optional<std::vector<SqrtClassValue>> vector;
  std::optional<EmbedFailure> failure;
  explicit operator bool() const { return vector.has_value(); }
};

// Places one more vertex with inner products c[y] against the rows of u.
// Rank-deficient u is rejected with EmbedFailureKind::rank_deficient.
ExtendResult extend_vertex(const EmbeddingMatrix& u, const std::vector<AlgebraicReal>& c);

// Same decision as extend_vertex for columns c[y] = ip_table[profile[y]],
// without square roots: for a full-rank u the new vector is a combination of
// the pivot rows, so its coefficients come from a precomputed inverse Gram
// matrix. Throws ErrorKind::usage for a rank-deficient u.
class ExtensionTester {
 public:
  ExtensionTester(const EmbeddingMatrix& u, const std::vector<AlgebraicReal>& ip_table);
  bool admits(const std::vector<int>& profile) const;

 private:
  std::vector<int> pivots_, others_;
  std::vector<AlgebraicReal> ip_;
  // [r][i][k]: coefficient of pivot k in the test for row others_[i] (resp.
  // in lambda_i), premultiplied by ip_table[r].
  std::vector<Matrix<AlgebraicReal>> check_, lambda_;
};

// Relations i with ip_table[i] == ip; empty when nothing matches.
std::vector<int> classify_pair(const AlgebraicReal& ip, const std::vector<AlgebraicReal>& ip_table);

// Relation of each pair from its common-neighbour count in g (the graph of
// relation 1). Throws ErrorKind::usage if the p^i_11 are not distinct and
// ErrorKind::not_scheme if a count or an adjacency does not fit.
RelationMatrix disambiguate_by_common_neighbors(const SmallGraph& g, const IntersectionTensor& t);

struct EigenspaceChoice {
  int j = 0;
  Rational ratio;  // m_j / m-bar of the class of j
};
// Eigenspaces outside overline0 with m-bar > 1 and m_j / m-bar <= bound, by ratio.
std::vector<EigenspaceChoice> select_eigenspace(const IntersectionTensor& t, const ImprimitivityStructure& s,
                                                const Rational& ratio_bound);

// Full-scheme embedding into S_j.
struct SphericalRepresentation {
  int j = 0;
  bool faithful = false;
  EmbeddingMatrix embedding;
};
// Faithful iff no relation other than 0 has inner product 1.
bool is_faithful(const EigenData& e, int j);
// Throws ErrorKind::not_scheme if the scheme does not embed.
SphericalRepresentation spherical_representation(const RelationMatrix& r, const EigenData& e, int j);
// (n/m_j) E_j E_j with E_j = (1/n) sum_i Q_ij A_i, computed as a matrix product.
Matrix<AlgebraicReal> idempotent_gram(const RelationMatrix& r, const EigenData& e, int j);

std::string to_string(EmbedFailureKind k);

}  // namespace asch
