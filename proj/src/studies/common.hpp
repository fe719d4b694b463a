#pragma once

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "asch/embed/embedding.hpp"
#include "asch/studies/studies.hpp"

namespace asch::studies {

int worker_count(int jobs);

// out[i] = fn(i); results are placed by index, so order never depends on scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(long n, int jobs, Fn fn) {
  std::vector<T> out(n);
  const int w = static_cast<int>(std::min<long>(worker_count(jobs), std::max<long>(n, 1)));
  if (w <= 1) {
    for (long i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&]() {
    try {
      for (long i; !failed && (i = next++) < n;) out[i] = fn(i);
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < w; ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// Parameters of the scheme under study and the eigenspace used.
struct CaseContext {
  IntersectionTensor tensor;
  EigenData eigen;
  int j = 1;
  const std::vector<AlgebraicReal>& ip() const { return eigen.local_ip[j]; }
  long m() const { return eigen.local_m[j].to_rational().get_num().get_si(); }
};
CaseContext make_context(const std::string& array, int j);

// Indices of one representative per isomorphism class, in first-seen order.
std::vector<int> isomorphism_representatives(const std::vector<RelationMatrix>& candidates);

EmbedResult embed(const CaseContext& c, const RelationMatrix& r);

// Relation profile of a new vertex against the rows of u, turned into inner products.
std::vector<AlgebraicReal> profile_column(const CaseContext& c, const std::vector<int>& profile);

struct ExtensionHits {
  std::vector<long> index;                          // candidate indices that gave unit vectors
  std::vector<std::vector<SqrtClassValue>> vectors;
};
ExtensionHits extension_search(const CaseContext& c, const EmbeddingMatrix& u,
                               const std::vector<std::vector<int>>& profiles, int jobs);

// Relation matrix on the rows, classifying every inner product; nullopt if
// some inner product matches no relation or several.
std::optional<RelationMatrix> classify_all(const CaseContext& c, const std::vector<std::vector<SqrtClassValue>>& rows);

// Axioms hold and the tensor equals the one under study.
bool verify_assembly(const CaseContext& c, const RelationMatrix& r, std::string* why = nullptr);

// Every pair has the inner product of its relation.
bool matches_vectors(const CaseContext& c, const RelationMatrix& r,
                     const std::vector<std::vector<SqrtClassValue>>& rows, std::string* why = nullptr);

std::vector<std::vector<SqrtClassValue>> rows_of(const EmbeddingMatrix& u);

void progress(const CaseOptions& o, const std::string& msg);

// Gram matrix of unit vectors grown one row at a time by pivoted LDL^T
// without square roots; a row is accepted iff the matrix stays PSD of rank
// <= limit, which is the decision of compute_embedding on the same prefix.
class IncrementalGram {
 public:
  explicit IncrementalGram(long limit) : limit_(limit) {}
  // c[y]: inner product with row y, for every earlier row.
  bool push(const std::vector<AlgebraicReal>& c);
  void pop();
  int rows() const { return static_cast<int>(coef_.size()); }
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  long limit_;
  std::vector<int> pivots_;                      // row of each pivot
  std::vector<AlgebraicReal> diag_;              // D_k
  std::vector<std::vector<AlgebraicReal>> coef_;  // per row: L entries on the pivots before it
};

// Per-case entry points.
CaseTranscript run_cube8(const CaseOptions& o);
CaseTranscript run_qpg4_12_45_52(const CaseOptions& o);
CaseTranscript run_qpg4_8_45_18(const CaseOptions& o);
CaseTranscript run_qpg5_6_45_22(const CaseOptions& o);
CaseTranscript run_qpg5_12_40_2(const CaseOptions& o);
CaseTranscript run_qpg5_6_45_5(const CaseOptions& o);
CaseTranscript run_qpg3_12_35_16(const CaseOptions& o);
CaseTranscript run_qpg3_18_40_12(const CaseOptions& o);
CaseTranscript run_smith40_unique(const CaseOptions& o);

}  // namespace asch::studies
