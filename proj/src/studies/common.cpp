#include "common.hpp"

#include <algorithm>
#include <map>

#include "asch/error.hpp"
#include "asch/schemes/isomorphism.hpp"

namespace asch::studies {

int worker_count(int jobs) {
  if (jobs > 0) return jobs;
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

CaseContext make_context(const std::string& array, int j) {
  CaseContext c;
  c.tensor = recover_from_parameter_array(ParameterArray::parse(array));
  c.eigen = compute_eigendata(c.tensor);
  c.j = j;
  return c;
}

namespace {

// Per vertex, the sorted multiset of (relation, two-step profile) over all y.
std::vector<std::uint64_t> scheme_invariant(const RelationMatrix& r) {
  const int n = r.n(), D = r.d() + 1;
  std::vector<std::vector<std::uint64_t>> per(n);
  std::vector<int> hist(D * D);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::fill(hist.begin(), hist.end(), 0);
      for (int z = 0; z < n; ++z) ++hist[r(x, z) * D + r(z, y)];
      std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(r(x, y));
      for (int v : hist) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
      per[x].push_back(h);
    }
    std::sort(per[x].begin(), per[x].end());
  }
  std::sort(per.begin(), per.end());
  std::vector<std::uint64_t> key;
  for (const auto& p : per) key.insert(key.end(), p.begin(), p.end());
  return key;
}

}  // namespace

std::vector<int> isomorphism_representatives(const std::vector<RelationMatrix>& candidates) {
  std::map<std::vector<std::uint64_t>, std::vector<int>> buckets;
  std::vector<int> reps;
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    auto& bucket = buckets[scheme_invariant(candidates[i])];
    bool seen = false;
    for (int k : bucket)
      if (are_isomorphic(candidates[k], candidates[i])) {
        seen = true;
        break;
      }
    if (!seen) {
      bucket.push_back(i);
      reps.push_back(i);
    }
  }
  return reps;
}

EmbedResult embed(const CaseContext& c, const RelationMatrix& r) {
  return compute_embedding(gram_from_candidate(r, c.eigen, c.j));
}

std::vector<AlgebraicReal> profile_column(const CaseContext& c, const std::vector<int>& profile) {
  std::vector<AlgebraicReal> col;
  col.reserve(profile.size());
  for (int i : profile) col.push_back(c.ip()[i]);
  return col;
}

ExtensionHits extension_search(const CaseContext& c, const EmbeddingMatrix& u,
                               const std::vector<std::vector<int>>& profiles, int jobs) {
  if (!u.full_rank()) fail(ErrorKind::invariant, "extension attempted against a rank-deficient basis");
  ExtensionTester tester(u, c.ip());
  auto admitted = parallel_map<char>(static_cast<long>(profiles.size()), jobs,
                                     [&](long i) -> char { return tester.admits(profiles[i]); });
  // Every admitted profile is recomputed with extend_vertex itself.
  ExtensionHits hits;
  for (long i = 0; i < static_cast<long>(profiles.size()); ++i) {
    if (!admitted[i]) continue;
    auto ext = extend_vertex(u, profile_column(c, profiles[i]));
    if (!ext) fail(ErrorKind::invariant, "extension test and extend_vertex disagree");
    hits.index.push_back(i);
    hits.vectors.push_back(std::move(*ext.vector));
  }
  return hits;
}

std::optional<RelationMatrix> classify_all(const CaseContext& c, const std::vector<std::vector<SqrtClassValue>>& rows) {
  const int n = static_cast<int>(rows.size());
  RelationMatrix r(n, c.tensor.d());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      auto cls = classify_pair(EmbeddingMatrix::inner(rows[x], rows[y]), c.ip());
      if (cls.size() != 1 || cls[0] == 0) return std::nullopt;
      r.set_symmetric(x, y, cls[0]);
    }
  return r;
}

bool verify_assembly(const CaseContext& c, const RelationMatrix& r, std::string* why) {
  auto ax = verify_scheme_axioms(r);
  if (!ax.ok) {
    if (why) *why = ax.reason;
    return false;
  }
  if (tensor_from_relation_matrix(r) != c.tensor) {
    if (why) *why = "intersection numbers differ from the case parameters";
    return false;
  }
  return true;
}

bool matches_vectors(const CaseContext& c, const RelationMatrix& r,
                     const std::vector<std::vector<SqrtClassValue>>& rows, std::string* why) {
  for (int x = 0; x < r.n(); ++x)
    for (int y = x + 1; y < r.n(); ++y)
      if (!(EmbeddingMatrix::inner(rows[x], rows[y]) == c.ip()[r(x, y)])) {
        if (why) *why = "inner product of " + std::to_string(x) + ", " + std::to_string(y) + " does not fit its relation";
        return false;
      }
  return true;
}

std::vector<std::vector<SqrtClassValue>> rows_of(const EmbeddingMatrix& u) {
  std::vector<std::vector<SqrtClassValue>> out;
  for (int x = 0; x < u.rows(); ++x) out.push_back(u.row(x));
  return out;
}

void progress(const CaseOptions& o, const std::string& msg) {
  if (o.progress) o.progress(msg);
}


bool IncrementalGram::push(const std::vector<AlgebraicReal>& c) {
  const int n = rows();
  require(static_cast<int>(c.size()) >= n, ErrorKind::usage, "IncrementalGram: column too short");
  auto dot = [&](const std::vector<AlgebraicReal>& a, const std::vector<AlgebraicReal>& b) {
    AlgebraicReal s;
    const std::size_t k = std::min(a.size(), b.size());
    for (std::size_t t = 0; t < k; ++t)
      if (!a[t].is_zero() && !b[t].is_zero()) s += a[t] * b[t] * diag_[t];
    return s;
  };
  std::vector<AlgebraicReal> l;
  l.reserve(pivots_.size() + 1);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const auto& pr = coef_[pivots_[k]];
    AlgebraicReal s = c[pivots_[k]];
    for (std::size_t t = 0; t < k; ++t)
      if (!l[t].is_zero() && !pr[t].is_zero()) s -= l[t] * pr[t] * diag_[t];
    l.push_back(s / diag_[k]);
  }
  std::vector<char> is_pivot(n, 0);
  for (int p : pivots_) is_pivot[p] = 1;
  for (int y = 0; y < n; ++y)
    if (!is_pivot[y] && dot(l, coef_[y]) != c[y]) return false;
  const AlgebraicReal residual = AlgebraicReal(1) - dot(l, l);
  const int sign = residual.sign();
  if (sign < 0) return false;
  if (sign > 0) {
    if (rank() >= limit_) return false;
    pivots_.push_back(n);
    diag_.push_back(residual);
    l.push_back(AlgebraicReal(1));
  }
  coef_.push_back(std::move(l));
  return true;
}

void IncrementalGram::pop() {
  require(!coef_.empty(), ErrorKind::usage, "IncrementalGram: nothing to pop");
  if (!pivots_.empty() && pivots_.back() == rows() - 1) {
    pivots_.pop_back();
    diag_.pop_back();
  }
  coef_.pop_back();
}

}  // namespace asch::studies
