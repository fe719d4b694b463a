#include "asch/params/imprim.hpp"

#include <algorithm>
#include <numeric>

#include "asch/error.hpp"

namespace asch {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Classes ordered by smallest member; every member list sorted.
IndexClasses classes_of(UnionFind& uf, int count) {
  IndexClasses out;
  std::vector<int> slot(count, -1);
  for (int i = 0; i < count; ++i) {
    int r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

bool closed(const IntersectionTensor& t, const std::vector<int>& s) {
  std::vector<bool> in(t.d() + 1, false);
  for (int i : s) in[i] = true;
  for (int i : s)
    for (int j : s)
      for (int h = 0; h <= t.d(); ++h)
        if (t.p(h, i, j) != 0 && !in[h]) return false;
  return true;
}

// Relation set {i : (1/ntilde) sum_{j in T} Q_ij = 1} if E_T is a 0/1 matrix.
std::optional<std::vector<int>> dual_relation_set(const EigenData& e, const std::vector<int>& T) {
  AlgebraicReal nt;
  for (int j : T) nt += e.m[j];
  std::vector<int> s;
  for (int i = 0; i <= e.d; ++i) {
    AlgebraicReal c;
    for (int j : T) c += e.Q[i][j];
    if (c == nt) {
      s.push_back(i);
    } else if (!c.is_zero()) {
      return std::nullopt;
    }
  }
  return s;
}

std::string braces(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

int class_of(const IndexClasses& cls, int i) {
  for (std::size_t c = 0; c < cls.size(); ++c)
    if (std::find(cls[c].begin(), cls[c].end(), i) != cls[c].end()) return static_cast<int>(c);
  return -1;
}

}  // namespace

const std::vector<int>& ImprimitivityStructure::dual_set() const {
  if (!overline0) fail(ErrorKind::invariant, "no dual imprimitivity set matches " + label());
  return *overline0;
}

int ImprimitivityStructure::relation_class_of(int i) const { return class_of(relation_classes, i); }
int ImprimitivityStructure::eigenspace_class_of(int j) const { return class_of(eigenspace_classes, j); }
std::string ImprimitivityStructure::label() const { return braces(tilde0); }

ImprimitivityStructure imprimitivity_structure(const IntersectionTensor& t, std::vector<int> tilde0,
                                               const EigenData* e, const KreinTensor* q) {
  const int d = t.d();
  std::sort(tilde0.begin(), tilde0.end());
  require(!tilde0.empty() && tilde0[0] == 0 && closed(t, tilde0), ErrorKind::usage,
          "not an imprimitivity set: " + braces(tilde0));
  ImprimitivityStructure s;
  s.tilde0 = tilde0;
  s.nontrivial = static_cast<int>(tilde0.size()) > 1 && static_cast<int>(tilde0.size()) < d + 1;
  for (int i : tilde0) s.n_bar += t.k(i);
  s.n_tilde = make_rational(t.n(), s.n_bar);

  UnionFind rel(d + 1);
  for (int h = 0; h <= d; ++h)
    for (int j = 0; j <= d; ++j)
      for (int i : tilde0)
        if (t.p(h, i, j) != 0) rel.unite(h, j);
  s.relation_classes = classes_of(rel, d + 1);

  if (e) {
    // Enumerate eigenspace subsets containing 0.
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> T{0};
      for (int j = 1; j <= d; ++j)
        if (mask & (1u << (j - 1))) T.push_back(j);
      auto rs = dual_relation_set(*e, T);
      if (rs && *rs == tilde0) {
        s.overline0 = T;
        break;
      }
    }
    if (s.overline0 && q) {
      UnionFind eig(d + 1);
      for (int h = 0; h <= d; ++h)
        for (int i = 0; i <= d; ++i)
          for (int j : *s.overline0)
            if (!q->q(h, i, j).is_zero()) eig.unite(h, i);
      s.eigenspace_classes = classes_of(eig, d + 1);
      s.dual_consistent = s.eigenspace_classes.size() == tilde0.size() &&
                          s.overline0->size() == s.relation_classes.size() &&
                          s.eigenspace_classes[0] == *s.overline0 && s.relation_classes[0] == tilde0;
    }
  }
  return s;
}

std::vector<ImprimitivityStructure> find_imprimitivity_sets(const IntersectionTensor& t, const EigenData* e,
                                                            const KreinTensor* q) {
  const int d = t.d();
  std::vector<std::vector<int>> sets;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> s{0};
    for (int j = 1; j <= d; ++j)
      if (mask & (1u << (j - 1))) s.push_back(j);
    if (closed(t, s)) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<ImprimitivityStructure> out;
  for (auto& s : sets) out.push_back(imprimitivity_structure(t, s, e, q));
  return out;
}

bool QuotientParameters::integral() const {
  for (const auto& v : k)
    if (!is_integral(v)) return false;
  for (const auto& v : p)
    if (!is_integral(v)) return false;
  return true;
}

std::vector<std::string> QuotientParameters::non_integral() const {
  std::vector<std::string> out;
  auto L = [&](int c) { return std::to_string(c < static_cast<int>(labels.size()) ? labels[c] : c); };
  for (int i = 0; i <= d_tilde; ++i)
    if (!is_integral(k[i])) out.push_back("k~" + L(i));
  for (int h = 0; h <= d_tilde; ++h)
    for (int i = 0; i <= d_tilde; ++i)
      for (int j = i; j <= d_tilde; ++j)
        if (!is_integral(p_at(h, i, j)))
          out.push_back("p~" + L(h) + "_" + L(i) + L(j));
  return out;
}

QuotientParameters quotient_parameters_exact(const IntersectionTensor& t, const ImprimitivityStructure& s) {
  const auto& cls = s.relation_classes;
  QuotientParameters qp;
  qp.d_tilde = static_cast<int>(cls.size()) - 1;
  const int D = qp.d_tilde + 1;
  const Rational nb(s.n_bar);
  qp.p.assign(D * D * D, Rational(0));
  for (const auto& c : cls) qp.labels.push_back(*std::min_element(c.begin(), c.end()));
  for (int a = 0; a < D; ++a) {
    Rational kk = 0;
    for (int i : cls[a]) kk += t.k(i);
    qp.k.push_back(kk / nb);
  }
  for (int a = 0; a < D; ++a) {
    const int h = cls[a][0];
    for (int b = 0; b < D; ++b)
      for (int c = 0; c < D; ++c) {
        Rational sum = 0;
        for (int i : cls[b])
          for (int j : cls[c]) sum += t.p(h, i, j);
        qp.p[(a * D + b) * D + c] = sum / nb;
      }
  }
  return qp;
}

QuotientScheme quotient_parameters(const IntersectionTensor& t, const ImprimitivityStructure& s, const EigenData* e) {
  auto qp = quotient_parameters_exact(t, s);
  auto bad = qp.non_integral();
  if (!bad.empty()) fail(ErrorKind::infeasible, bad.front() + " not integral in A/" + s.label());
  QuotientScheme out;
  out.tensor = IntersectionTensor(qp.d_tilde);
  const int D = qp.d_tilde + 1;
  for (int h = 0; h < D; ++h)
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) out.tensor.p(h, i, j) = qp.p_at(h, i, j).get_num().get_si();
  if (e) {
    const auto& T = s.dual_set();
    const AlgebraicReal inv_nb(make_rational(1, s.n_bar));
    for (int a : T) {
      std::vector<AlgebraicReal> row;
      for (const auto& c : s.relation_classes) {
        AlgebraicReal sum;
        for (int i : c) sum += e->P[a][i];
        row.push_back(sum * inv_nb);
      }
      out.P.push_back(std::move(row));
    }
    for (const auto& c : s.relation_classes) {
      std::vector<AlgebraicReal> row;
      for (int a : T) row.push_back(e->Q[c[0]][a]);
      out.Q.push_back(std::move(row));
    }
  }
  return out;
}

Subscheme subscheme_parameters(const IntersectionTensor& t, const ImprimitivityStructure& s, const EigenData& e,
                               const KreinTensor& q) {
  require(s.dual_consistent, ErrorKind::invariant, "dual imprimitivity data inconsistent for " + s.label());
  const auto& S = s.tilde0;
  const int D = static_cast<int>(S.size());
  const auto& ecls = s.eigenspace_classes;
  Subscheme out;
  out.tensor = IntersectionTensor(D - 1);
  for (int h = 0; h < D; ++h)
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) out.tensor.p(h, i, j) = t.p(S[h], S[i], S[j]);

  const AlgebraicReal inv_nt(1 / s.n_tilde);
  out.krein = KreinTensor(D - 1);
  for (int c = 0; c < D; ++c)
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        AlgebraicReal sum;
        for (int i : ecls[a])
          for (int j : ecls[b]) sum += q.q(ecls[c][0], i, j);
        out.krein.q(c, a, b) = sum * inv_nt;
      }
  for (int c = 0; c < D; ++c) {
    std::vector<AlgebraicReal> row;
    for (int i : S) row.push_back(e.P[ecls[c][0]][i]);
    out.P.push_back(std::move(row));
  }
  for (int i : S) {
    std::vector<AlgebraicReal> row;
    for (int c = 0; c < D; ++c) {
      AlgebraicReal sum;
      for (int j : ecls[c]) sum += e.Q[i][j];
      row.push_back(sum * inv_nt);
    }
    out.Q.push_back(std::move(row));
  }
  out.m = out.Q[0];
  return out;
}

}  // namespace asch
