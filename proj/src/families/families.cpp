#include "asch/families/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "asch/error.hpp"
#include "asch/families/finite_field.hpp"
#include "asch/params/eigen.hpp"

namespace asch {
namespace {

std::string num(long v) { return std::to_string(v); }

// Relation matrix from a symmetric rule on 0..n-1.
template <class F>
RelationMatrix build(int n, int d, F rel) {
  RelationMatrix r(n, d);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r(x, y) = x == y ? 0 : rel(x, y);
  return r;
}

}  // namespace

SchemeValue complete_scheme(int n) {
  require(n >= 1, ErrorKind::usage, "K(n) needs n >= 1");
  return {build(n, n > 1 ? 1 : 0, [](int, int) { return 1; }), "K" + num(n)};
}

SchemeValue cyclic_group_scheme(int n) {
  require(n >= 2, ErrorKind::usage, "Z(n) needs n >= 2");
  return {build(n, n - 1, [n](int x, int y) { return ((y - x) % n + n) % n; }), "Z" + num(n)};
}

SchemeValue cyclic_scheme(int n) {
  require(n >= 3, ErrorKind::usage, "C(n) needs n >= 3");
  return {build(n, n / 2,
                [n](int x, int y) {
                  int t = ((y - x) % n + n) % n;
                  return std::min(t, n - t);
                }),
          "C" + num(n)};
}

SchemeValue johnson_scheme(int n, int k) {
  require(n >= 2 && k >= 1 && k < n && n <= 30, ErrorKind::usage, "J(n, k) needs 1 <= k < n <= 30");
  std::vector<unsigned> sets;
  for (unsigned s = 0; s < (1u << n); ++s)
    if (__builtin_popcount(s) == k) sets.push_back(s);
  require(sets.size() <= 4096, ErrorKind::unsupported, "J(n, k) too large");
  return {build(static_cast<int>(sets.size()), std::min(k, n - k),
                [&](int x, int y) { return k - __builtin_popcount(sets[x] & sets[y]); }),
          "J(" + num(n) + ", " + num(k) + ")"};
}

SchemeValue hamming_scheme(int d, int q) {
  require(d >= 1 && q >= 2, ErrorKind::usage, "H(d, q) needs d >= 1, q >= 2");
  long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= q;
    require(n <= 4096, ErrorKind::unsupported, "H(d, q) too large");
  }
  return {build(static_cast<int>(n), d,
                [&](int x, int y) {
                  int dist = 0;
                  for (int i = 0; i < d; ++i, x /= q, y /= q) dist += x % q != y % q;
                  return dist;
                }),
          "H(" + num(d) + ", " + num(q) + ")"};
}

SchemeValue cyclotomic_scheme(long q, int r) {
  FiniteField f(q);
  require(r >= 1 && (q - 1) % r == 0, ErrorKind::usage, "Cyc(q, r) needs r | q - 1");
  return {build(static_cast<int>(q), r,
                [&](int x, int y) { return (f.log(f.sub(y, x)) + r - 1) % r + 1; }),
          "Cyc(" + num(q) + ", " + num(r) + ")"};
}

SchemeValue direct_product(const SchemeValue& a, const SchemeValue& b) {
  const auto& A = a.matrix;
  const auto& B = b.matrix;
  const int nb = B.n(), Db = B.d() + 1;
  require(static_cast<long>(A.n()) * nb <= 4096, ErrorKind::unsupported, "direct product too large");
  RelationMatrix r(A.n() * nb, (A.d() + 1) * Db - 1);
  for (int x = 0; x < r.n(); ++x)
    for (int y = 0; y < r.n(); ++y) r(x, y) = A(x / nb, y / nb) * Db + B(x % nb, y % nb);
  return {r, a.name + " x " + b.name};
}

SchemeValue lexicographic_coproduct(const SchemeValue& a, const std::vector<SchemeValue>& fibres) {
  const auto& A = a.matrix;
  require(static_cast<int>(fibres.size()) == A.n(), ErrorKind::usage, "one fibre per vertex required");
  const auto t0 = fibres.front().tensor();
  for (const auto& f : fibres)
    require(f.tensor() == t0, ErrorKind::usage, "fibres must share one parameter set");
  const int m = fibres.front().matrix.n(), da = A.d();
  RelationMatrix r(A.n() * m, da + fibres.front().matrix.d());
  for (int x = 0; x < r.n(); ++x)
    for (int y = 0; y < r.n(); ++y) {
      const int ox = x / m, oy = y / m;
      if (ox != oy)
        r(x, y) = A(ox, oy);
      else {
        int j = fibres[ox].matrix(x % m, y % m);
        r(x, y) = j == 0 ? 0 : da + j;
      }
    }
  std::string name = a.name + "[" + fibres.front().name;
  for (const auto& f : fibres)
    if (f.name != fibres.front().name) {
      name = a.name + "[f]";
      return {r, name};
    }
  return {r, name + "]"};
}

SchemeValue lexicographic_product(const SchemeValue& a, const SchemeValue& b) {
  return lexicographic_coproduct(a, std::vector<SchemeValue>(a.matrix.n(), b));
}

SchemeValue hamming_power(int k, const SchemeValue& a) {
  require(k >= 1, ErrorKind::usage, "Hamming power needs k >= 1");
  const auto& A = a.matrix;
  const int D = A.d() + 1, n = A.n();
  long N = 1;
  for (int i = 0; i < k; ++i) {
    N *= n;
    require(N <= 4096, ErrorKind::unsupported, "Hamming power too large");
  }
  // compositions of k into D parts, descending lexicographic
  std::vector<std::vector<int>> comps;
  std::vector<int> u(D, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == D - 1) {
      u[pos] = left;
      comps.push_back(u);
      return;
    }
    for (int v = left; v >= 0; --v) {
      u[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, k);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < comps.size(); ++i) index[comps[i]] = static_cast<int>(i);
  RelationMatrix r(static_cast<int>(N), static_cast<int>(comps.size()) - 1);
  std::vector<int> c(D);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      std::fill(c.begin(), c.end(), 0);
      for (int i = 0, xx = x, yy = y; i < k; ++i, xx /= n, yy /= n) ++c[A(xx % n, yy % n)];
      r(x, y) = index[c];
    }
  return {r, "H(" + num(k) + ", " + a.name + ")"};
}

SchemeValue symmetrization(const SchemeValue& a) {
  const auto& A = a.matrix;
  check_well_formed(A, false);
  auto c = structure_constants(A);
  if (!c) fail(ErrorKind::refused, "symmetrization needs an association scheme");
  const int D = A.d() + 1;
  for (int h = 0; h < D; ++h)
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        if ((*c)[(h * D + i) * D + j] != (*c)[(h * D + j) * D + i])
          fail(ErrorKind::refused, "symmetrization needs a commutative scheme");
  std::vector<int> transpose(D, -1);
  for (int x = 0; x < A.n(); ++x)
    for (int y = 0; y < A.n(); ++y) transpose[A(x, y)] = A(y, x);
  std::vector<int> cls(D, -1);
  int next = 0;
  for (int i = 0; i < D; ++i)
    if (cls[i] < 0) cls[i] = cls[transpose[i]] = next++;
  RelationMatrix r(A.n(), next - 1);
  for (int x = 0; x < A.n(); ++x)
    for (int y = 0; y < A.n(); ++y) r(x, y) = cls[A(x, y)];
  return {r, a.name + "^sym"};
}

RelationMatrix relabel_relations(const RelationMatrix& r, const std::vector<int>& perm) {
  RelationMatrix out(r.n(), r.d());
  for (int x = 0; x < r.n(); ++x)
    for (int y = 0; y < r.n(); ++y) out(x, y) = perm[r(x, y)];
  return out;
}

std::optional<std::vector<int>> match_parameter_array(const IntersectionTensor& t, const ParameterArray& a) {
  if (a.d() != t.d()) return std::nullopt;
  std::vector<int> perm(t.d() + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 1; i <= t.d() && ok; ++i) ok = t.k(i) == a.valencies[perm[i] - 1];
    if (ok && t.relabeled(perm).to_parameter_array() == a) return perm;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

namespace {

SchemeValue smith40() {
  // graphs on {1,2,3,4} with deg(1), deg(2) of the edge count's parity and
  // deg(3), deg(4) of the other parity
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) edges.emplace_back(i, j);
  std::vector<unsigned> graphs;
  for (unsigned s = 0; s < 64; ++s) {
    int deg[5] = {0, 0, 0, 0, 0}, m = 0;
    for (int e = 0; e < 6; ++e)
      if (s >> e & 1) ++deg[edges[e].first], ++deg[edges[e].second], ++m;
    if (deg[1] % 2 == m % 2 && deg[2] % 2 == m % 2 && deg[3] % 2 != m % 2 && deg[4] % 2 != m % 2)
      graphs.push_back(s);
  }
  require(graphs.size() == 8, ErrorKind::invariant, "expected 8 graphs in smith40 construction");
  auto in_graph = [&](unsigned s, int i, int j) {
    if (i > j) std::swap(i, j);
    for (int e = 0; e < 6; ++e)
      if (edges[e] == std::make_pair(i, j)) return (s >> e & 1) != 0;
    return false;
  };
  std::vector<std::pair<int, int>> coords;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) coords.emplace_back(a, b);
  // vectors scaled by sqrt(6)
  std::vector<std::vector<int>> vec;
  for (int h = 0; h < 5; ++h)
    for (unsigned g : graphs) {
      std::vector<int> v;
      for (auto [a, b] : coords) {
        int i = (a - h + 5) % 5, j = (b - h + 5) % 5;
        v.push_back(i == 0 || j == 0 ? 0 : in_graph(g, i, j) ? -1 : 1);
      }
      vec.push_back(v);
    }
  // 6<u,v> = 6, -3, 0, -2, 1 for R_0..R_4
  const std::map<int, int> rel{{6, 0}, {-3, 1}, {0, 2}, {-2, 3}, {1, 4}};
  RelationMatrix r(40, 4);
  for (int x = 0; x < 40; ++x)
    for (int y = 0; y < 40; ++y) {
      int ip = 0;
      for (int c = 0; c < 10; ++c) ip += vec[x][c] * vec[y][c];
      auto it = rel.find(ip);
      if (it == rel.end()) fail(ErrorKind::invariant, "smith40: unexpected inner product");
      r(x, y) = it->second;
    }
  return {r, "smith40"};
}

SchemeValue paircube40() {
  const auto t = recover_from_parameter_array(ParameterArray::parse("[[12, 2, 1, 12, 12], [6, 0, 4, 1; 0, 0, 1; 0, 1; 4]]"));
  const auto e = compute_eigendata(t);
  struct V {
    int i, j, a, b;
  };
  std::vector<V> vs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) vs.push_back({i, j, a, b});
  RelationMatrix r(40, 5);
  for (int x = 0; x < 40; ++x)
    for (int y = 0; y < 40; ++y) {
      const V &u = vs[x], &v = vs[y];
      // <u, v> = (sum of matching coordinate products) / 2
      long twice = 0;
      auto coord = [](const V& w, int c) { return c == w.i ? w.a : c == w.j ? w.b : 0; };
      for (int c = 0; c < 5; ++c) twice += coord(u, c) * coord(v, c);
      const Rational ip = make_rational(twice, 2);
      std::vector<int> hits;
      for (int i = 0; i <= 5; ++i)
        if (e.local_ip[1][i] == AlgebraicReal(ip)) hits.push_back(i);
      if (hits.empty()) fail(ErrorKind::invariant, "paircube40: inner product not in the table");
      if (hits.size() == 1)
        r(x, y) = hits[0];
      else  // Q_21 = Q_41 = 0: equal index pairs give R_2, disjoint ones R_4
        r(x, y) = (u.i == v.i && u.j == v.j) ? 2 : 4;
    }
  return {r, "paircube40"};
}

SchemeValue c352() {
  // X = Z5 x Z3 x Z3, arcs (l, r, s) -> (l+1, s, t)
  auto vid = [](int l, int r, int s) { return (l * 3 + r) * 3 + s; };
  RelationMatrix r(45, 5);
  for (int l = 0; l < 5; ++l)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int l2 = 0; l2 < 5; ++l2)
          for (int a2 = 0; a2 < 3; ++a2)
            for (int b2 = 0; b2 < 3; ++b2) {
              const int x = vid(l, a, b), y = vid(l2, a2, b2);
              const int dl = (l2 - l + 5) % 5;
              int rel;
              if (x == y)
                rel = 0;
              else if (dl == 0)
                rel = (a == a2 || b == b2) ? 2 : 3;  // common R_1-neighbours or none
              else if ((dl == 1 && a2 == b) || (dl == 4 && b2 == a))
                rel = 1;
              else if (dl == 1 || dl == 4)
                rel = 4;
              else
                rel = 5;
              r(x, y) = rel;
            }
  return {r, "c352"};
}

}  // namespace

SchemeValue special_scheme(const std::string& name) {
  if (name == "smith40") return smith40();
  if (name == "paircube40") return paircube40();
  if (name == "c352") return c352();
  fail(ErrorKind::usage, "unknown special scheme " + name);
}

SchemeValue named_scheme(const std::string& family, const std::vector<long>& args) {
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      fail(ErrorKind::usage, family + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
  };
  if (family == "K") return want(1), complete_scheme(static_cast<int>(args[0]));
  if (family == "Z") return want(1), cyclic_group_scheme(static_cast<int>(args[0]));
  if (family == "C") return want(1), cyclic_scheme(static_cast<int>(args[0]));
  if (family == "J") return want(2), johnson_scheme(static_cast<int>(args[0]), static_cast<int>(args[1]));
  if (family == "H") return want(2), hamming_scheme(static_cast<int>(args[0]), static_cast<int>(args[1]));
  if (family == "Cyc") return want(2), cyclotomic_scheme(args[0], static_cast<int>(args[1]));
  if (family == "smith40" || family == "paircube40" || family == "c352") return want(0), special_scheme(family);
  fail(ErrorKind::usage, "unknown family " + family);
}

}  // namespace asch
