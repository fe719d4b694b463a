#include "asch/embed/embedding.hpp"

#include <algorithm>
#include <set>

#include "asch/error.hpp"

namespace asch {

void GramSpec::validate() const {
  if (static_cast<int>(C.size()) != n) fail(ErrorKind::usage, "Gram matrix size does not match n");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(C[x].size()) != n) fail(ErrorKind::usage, "Gram matrix is not square");
    if (C[x][x] != AlgebraicReal(1)) fail(ErrorKind::usage, "Gram diagonal entry " + std::to_string(x) + " is not 1");
    for (int y = 0; y < x; ++y) {
      if (C[x][y] != C[y][x]) fail(ErrorKind::usage, "Gram matrix is not symmetric");
      if (std::find(ip_table.begin(), ip_table.end(), C[x][y]) == ip_table.end())
        fail(ErrorKind::usage, "Gram entry " + C[x][y].to_string() + " is not an inner-product value");
    }
  }
}

GramSpec gram_from_candidate(const RelationMatrix& r, const EigenData& e, int j, const std::vector<int>* relation_map) {
  require(j >= 0 && j <= e.d, ErrorKind::usage, "eigenspace index out of range");
  GramSpec g;
  g.n = r.n();
  g.ip_table = e.local_ip[j];
  g.m = e.local_m[j].to_rational().get_num().get_si();
  auto rel = [&](int i) {
    int o = relation_map ? (*relation_map)[i] : i;
    if (o < 0 || o > e.d) fail(ErrorKind::usage, "relation " + std::to_string(o) + " is not a scheme relation");
    return o;
  };
  g.C.assign(g.n, std::vector<AlgebraicReal>(g.n));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) g.C[x][y] = g.ip_table[rel(r(x, y))];
  return g;
}

const SqrtClassValue& EmbeddingMatrix::entry(int x, int h) const {
  static const SqrtClassValue zero;
  return h < static_cast<int>(rows_[x].size()) ? rows_[x][h] : zero;
}

AlgebraicReal EmbeddingMatrix::inner(const std::vector<SqrtClassValue>& a, const std::vector<SqrtClassValue>& b) {
  AlgebraicReal s;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) s += multiply_same_class(a[k], b[k]);
  return s;
}

void EmbeddingMatrix::dump(std::ostream& out) const {
  for (const auto& row : rows_) {
    for (long h = 0; h < m_; ++h) {
      if (h) out << ' ';
      out << (h < static_cast<long>(row.size()) ? row[h].to_string() : "0");
    }
    out << '\n';
  }
}

std::string to_string(EmbedFailureKind k) {
  switch (k) {
    case EmbedFailureKind::inconsistent: return "inconsistent inner product";
    case EmbedFailureKind::norm_too_large: return "norm larger than one";
    case EmbedFailureKind::norm_too_small: return "norm smaller than one";
    case EmbedFailureKind::rank_deficient: return "rank deficient basis";
  }
  return "?";
}

std::string EmbedFailure::describe() const {
  std::string s = to_string(kind) + " at row " + std::to_string(x);
  if (kind == EmbedFailureKind::inconsistent) s += " against row " + std::to_string(y);
  if (kind == EmbedFailureKind::norm_too_large || kind == EmbedFailureKind::norm_too_small)
    s += " (s = " + this->s.to_string() + ")";
  return s;
}

// One outer iteration of the listing.
class EmbeddingBuilder {
 public:
  struct Placement {
    std::vector<SqrtClassValue> row;
    std::optional<EmbedFailure> failure;
    std::optional<SqrtClassValue> new_column;
  };

  static Placement place(const EmbeddingMatrix& u, const std::vector<AlgebraicReal>& c, int x, bool allow_new) {
    Placement p;
    const int rank = u.rank();
    p.row.assign(rank, SqrtClassValue());
    int h = 0;
    for (int y = 0; y < u.rows(); ++y) {
      AlgebraicReal d = c[y];
      const auto& ry = u.rows_[y];
      for (int k = 0; k < h; ++k) d -= multiply_same_class(p.row[k], ry[k]);
      if (h < rank && !ry[h].is_zero()) {
        if (!d.is_zero()) p.row[h] = divide(d, ry[h]);
        ++h;
      } else if (!d.is_zero()) {
        p.failure = EmbedFailure{EmbedFailureKind::inconsistent, x, y, {}};
        return p;
      }
    }
    AlgebraicReal s;
    for (const auto& v : p.row) s += v.square();
    int cmp = algebraic_compare(s, AlgebraicReal(1));
    if (cmp > 0) {
      p.failure = EmbedFailure{EmbedFailureKind::norm_too_large, x, -1, s};
    } else if (cmp < 0) {
      if (allow_new && rank < u.m_)
        p.new_column = SqrtClassValue::sqrt_of(AlgebraicReal(1) - s);
      else
        p.failure = EmbedFailure{EmbedFailureKind::norm_too_small, x, -1, s};
    }
    return p;
  }

  static void append(EmbeddingMatrix& u, Placement&& p) {
    if (p.new_column) {
      u.radicands_.push_back(p.new_column->radicand());
      for (auto& r : u.rows_) r.emplace_back();
      p.row.push_back(*p.new_column);
    }
    u.rows_.push_back(std::move(p.row));
  }
};

EmbedResult compute_embedding(const GramSpec& g) {
  g.validate();
  require(g.m >= 1 || g.n == 0, ErrorKind::usage, "target dimension must be positive");
  EmbedResult res;
  EmbeddingMatrix u(g.m);
  for (int x = 0; x < g.n; ++x) {
    auto p = EmbeddingBuilder::place(u, g.C[x], x, true);
    if (p.failure) {
      res.failure = p.failure;
      return res;
    }
    EmbeddingBuilder::append(u, std::move(p));
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y <= x; ++y)
      if (u.inner(x, y) != g.C[x][y])
        fail(ErrorKind::invariant, "U U^T differs from C at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  res.matrix = std::move(u);
  return res;
}

ExtendResult extend_vertex(const EmbeddingMatrix& u, const std::vector<AlgebraicReal>& c) {
  require(static_cast<int>(c.size()) == u.rows(), ErrorKind::usage, "inner-product column has the wrong length");
  ExtendResult res;
  if (!u.full_rank()) {
    res.failure = EmbedFailure{EmbedFailureKind::rank_deficient, u.rows(), -1, {}};
    return res;
  }
  auto p = EmbeddingBuilder::place(u, c, u.rows(), false);
  if (p.failure)
    res.failure = p.failure;
  else
    res.vector = std::move(p.row);
  return res;
}

ExtensionTester::ExtensionTester(const EmbeddingMatrix& u, const std::vector<AlgebraicReal>& ip_table)
    : ip_(ip_table) {
  require(u.full_rank(), ErrorKind::usage, "extension test needs a full-rank basis");
  int h = 0;
  for (int y = 0; y < u.rows(); ++y) {
    if (h < u.rank() && !u.entry(y, h).is_zero()) {
      pivots_.push_back(y);
      ++h;
    } else {
      others_.push_back(y);
    }
  }
  const int m = static_cast<int>(pivots_.size());
  Matrix<AlgebraicReal> g(m, std::vector<AlgebraicReal>(m)), id = g;
  for (int a = 0; a < m; ++a) {
    id[a][a] = AlgebraicReal(1);
    for (int b = 0; b < m; ++b) g[a][b] = u.inner(pivots_[a], pivots_[b]);
  }
  auto inv = solve(g, id);
  require(inv.has_value(), ErrorKind::invariant, "pivot rows are not independent");
  // row x of u is sum_k (G_xB M)[k] times the k-th pivot coefficient vector
  Matrix<AlgebraicReal> k(others_.size(), std::vector<AlgebraicReal>(m));
  for (std::size_t i = 0; i < others_.size(); ++i)
    for (int a = 0; a < m; ++a) {
      AlgebraicReal s;
      for (int b = 0; b < m; ++b) s += u.inner(others_[i], pivots_[b]) * (*inv)[b][a];
      k[i][a] = s;
    }
  for (const auto& v : ip_) {
    auto scale = [&](const Matrix<AlgebraicReal>& a) {
      Matrix<AlgebraicReal> out = a;
      for (auto& row : out)
        for (auto& e : row) e *= v;
      return out;
    };
    check_.push_back(scale(k));
    lambda_.push_back(scale(*inv));
  }
}

bool ExtensionTester::admits(const std::vector<int>& profile) const {
  const int m = static_cast<int>(pivots_.size());
  for (std::size_t i = 0; i < others_.size(); ++i) {
    AlgebraicReal s;
    for (int a = 0; a < m; ++a) s += check_[profile[pivots_[a]]][i][a];
    if (s != ip_[profile[others_[i]]]) return false;
  }
  AlgebraicReal norm;
  for (int b = 0; b < m; ++b) {
    AlgebraicReal l;
    for (int a = 0; a < m; ++a) l += lambda_[profile[pivots_[a]]][b][a];
    norm += l * ip_[profile[pivots_[b]]];
  }
  return norm == AlgebraicReal(1);
}

std::vector<int> classify_pair(const AlgebraicReal& ip, const std::vector<AlgebraicReal>& ip_table) {
  std::vector<int> out;
  for (std::size_t i = 0; i < ip_table.size(); ++i)
    if (ip_table[i] == ip) out.push_back(static_cast<int>(i));
  return out;
}

RelationMatrix disambiguate_by_common_neighbors(const SmallGraph& g, const IntersectionTensor& t) {
  const int d = t.d();
  std::vector<long> counts;
  for (int i = 0; i <= d; ++i) counts.push_back(t.p(i, 1, 1));
  if (std::set<long>(counts.begin(), counts.end()).size() != counts.size())
    fail(ErrorKind::usage, "the values p^i_11 are not pairwise distinct");
  RelationMatrix r(g.n(), d);
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y) {
      long c = __builtin_popcountll(g.out_mask(x) & g.out_mask(y));
      auto it = std::find(counts.begin(), counts.end(), c);
      if (it == counts.end())
        fail(ErrorKind::not_scheme, "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has " +
                                        std::to_string(c) + " common neighbours");
      int i = static_cast<int>(it - counts.begin());
      if ((i == 0) != (x == y) || (i == 1) != g.has_edge(x, y))
        fail(ErrorKind::not_scheme, "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                        ") has a common-neighbour count inconsistent with adjacency");
      r(x, y) = i;
    }
  return r;
}

std::vector<EigenspaceChoice> select_eigenspace(const IntersectionTensor& t, const ImprimitivityStructure& s,
                                                const Rational& ratio_bound) {
  std::vector<EigenspaceChoice> out;
  if (!s.nontrivial || !s.overline0) return out;
  EigenData e = compute_eigendata(t);
  KreinTensor q = compute_krein(e);
  Subscheme sub = subscheme_parameters(t, s, e, q);
  const auto& o0 = *s.overline0;
  for (int j = 0; j <= t.d(); ++j) {
    if (std::find(o0.begin(), o0.end(), j) != o0.end()) continue;
    Rational mbar = sub.m[s.eigenspace_class_of(j)].to_rational();
    if (mbar <= 1) continue;
    Rational ratio = e.m[j].to_rational() / mbar;
    if (ratio <= ratio_bound) out.push_back({j, ratio});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.ratio < b.ratio; });
  return out;
}

bool is_faithful(const EigenData& e, int j) {
  if (j == 0) return false;
  for (int i = 1; i <= e.d; ++i)
    if (e.local_ip[j][i] == AlgebraicReal(1)) return false;
  return true;
}

SphericalRepresentation spherical_representation(const RelationMatrix& r, const EigenData& e, int j) {
  auto res = compute_embedding(gram_from_candidate(r, e, j));
  if (!res) fail(ErrorKind::not_scheme, "scheme does not embed into S_" + std::to_string(j) + ": " + res.failure->describe());
  return {j, is_faithful(e, j), std::move(*res.matrix)};
}

Matrix<AlgebraicReal> idempotent_gram(const RelationMatrix& r, const EigenData& e, int j) {
  const int n = r.n();
  const AlgebraicReal inv_n = AlgebraicReal(make_rational(1, n));
  Matrix<AlgebraicReal> E(n, std::vector<AlgebraicReal>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) E[x][y] = e.Q[r(x, y)][j] * inv_n;
  auto EE = multiply(E, E);
  const AlgebraicReal scale = AlgebraicReal(Rational(n)) / e.m[j];
  for (auto& row : EE)
    for (auto& v : row) v *= scale;
  return EE;
}

}  // namespace asch
