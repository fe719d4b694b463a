#include "asch/graphkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "asch/error.hpp"
#include "asch/schemes/isomorphism.hpp"

namespace asch {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }
int lowest(std::uint64_t x) { return __builtin_ctzll(x); }

}  // namespace

SmallGraph::SmallGraph(int n, bool directed) : n_(n), directed_(directed), adj_(n, 0) {
  if (n < 0 || n > kMaxGraphVertices)
    fail(ErrorKind::refused, "graph on " + std::to_string(n) + " vertices exceeds " + std::to_string(kMaxGraphVertices));
}

void SmallGraph::add_edge(int u, int v) {
  require(u != v, ErrorKind::usage, "loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  if (!directed_) adj_[v] |= std::uint64_t{1} << u;
}

void SmallGraph::remove_edge(int u, int v) {
  adj_[u] &= ~(std::uint64_t{1} << v);
  if (!directed_) adj_[v] &= ~(std::uint64_t{1} << u);
}

int SmallGraph::out_degree(int u) const { return popcount(adj_[u]); }

int SmallGraph::in_degree(int v) const {
  int c = 0;
  for (int u = 0; u < n_; ++u) c += has_edge(u, v);
  return c;
}

std::vector<int> SmallGraph::neighbours(int u) const {
  std::vector<int> out;
  for (std::uint64_t m = adj_[u]; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

long SmallGraph::edge_count() const {
  long c = 0;
  for (auto m : adj_) c += popcount(m);
  return directed_ ? c : c / 2;
}

RelationMatrix SmallGraph::relation_matrix() const {
  RelationMatrix raw(n_, 4);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      if (u == v) continue;
      bool f = has_edge(u, v), b = has_edge(v, u);
      raw(u, v) = directed_ ? (f && b ? 3 : f ? 1 : b ? 2 : 4) : (f ? 1 : 2);
    }
  std::vector<int> renum(5, -1);
  renum[0] = 0;
  int next = 1;
  for (int i = 1; i <= 4; ++i) {
    bool used = false;
    for (int u = 0; u < n_ && !used; ++u)
      for (int v = 0; v < n_ && !used; ++v) used = u != v && raw(u, v) == i;
    if (used) renum[i] = next++;
  }
  RelationMatrix r(n_, next - 1);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) r(u, v) = renum[raw(u, v)];
  return r;
}

SmallGraph relation_graph(const RelationMatrix& r, int i) {
  SmallGraph g(r.n());
  for (int x = 0; x < r.n(); ++x)
    for (int y = x + 1; y < r.n(); ++y)
      if (r(x, y) == i) g.add_edge(x, y);
  return g;
}

bool graphs_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.n() != b.n() || a.directed() != b.directed() || a.edge_count() != b.edge_count()) return false;
  auto ra = a.relation_matrix(), rb = b.relation_matrix();
  if (ra.d() != rb.d()) return false;
  return are_isomorphic(ra, rb).has_value();
}

std::vector<std::vector<int>> components(const SmallGraph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t seen = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (seen >> s & 1) continue;
    std::uint64_t comp = std::uint64_t{1} << s, frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.out_mask(lowest(m));
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> c;
    for (std::uint64_t m = comp; m; m &= m - 1) c.push_back(lowest(m));
    out.push_back(c);
  }
  return out;
}

std::vector<int> component_sizes(const SmallGraph& g) {
  std::vector<int> s;
  for (const auto& c : components(g)) s.push_back(static_cast<int>(c.size()));
  std::sort(s.begin(), s.end());
  return s;
}

SmallGraph distance_power(const SmallGraph& g, int r) {
  SmallGraph out(g.n(), g.directed());
  for (int s = 0; s < g.n(); ++s) {
    std::uint64_t reached = std::uint64_t{1} << s, frontier = reached;
    for (int step = 0; step < r && frontier; ++step) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.out_mask(lowest(m));
      frontier = next & ~reached;
      reached |= next;
    }
    for (std::uint64_t m = frontier; m; m &= m - 1) {
      int t = lowest(m);
      if (!out.has_edge(s, t)) out.add_edge(s, t);
    }
  }
  return out;
}

namespace {

// DSATUR-ordered backtracking; new colours only in increasing order.
bool colour_rec(const SmallGraph& g, int k, std::vector<int>& col, int coloured, int used) {
  const int n = g.n();
  if (coloured == n) return true;
  int best = -1, best_sat = -1, best_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (col[v] >= 0) continue;
    unsigned seen = 0;
    for (std::uint64_t m = g.out_mask(v); m; m &= m - 1)
      if (col[lowest(m)] >= 0) seen |= 1u << col[lowest(m)];
    int sat = __builtin_popcount(seen), deg = g.out_degree(v);
    if (sat > best_sat || (sat == best_sat && deg > best_deg)) best = v, best_sat = sat, best_deg = deg;
  }
  unsigned forbidden = 0;
  for (std::uint64_t m = g.out_mask(best); m; m &= m - 1)
    if (col[lowest(m)] >= 0) forbidden |= 1u << col[lowest(m)];
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    if (forbidden >> c & 1) continue;
    col[best] = c;
    if (colour_rec(g, k, col, coloured + 1, std::max(used, c + 1))) return true;
  }
  col[best] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> chromatic_at_most(const SmallGraph& g, int k) {
  require(k >= 0 && k <= 32, ErrorKind::usage, "colour count outside 0..32");
  std::vector<int> col(g.n(), -1);
  if (g.n() == 0) return col;
  if (k == 0) return std::nullopt;
  if (colour_rec(g, k, col, 0, 0)) return col;
  return std::nullopt;
}

std::vector<std::vector<int>> all_colourings(const SmallGraph& g, int k, std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> col(g.n(), -1);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == g.n()) {
      if (out.size() >= limit) fail(ErrorKind::refused, "too many colourings");
      out.push_back(col);
      return;
    }
    unsigned forbidden = 0;
    for (std::uint64_t m = g.out_mask(v); m; m &= m - 1)
      if (col[lowest(m)] >= 0) forbidden |= 1u << col[lowest(m)];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      if (forbidden >> c & 1) continue;
      col[v] = c;
      self(self, v + 1, std::max(used, c + 1));
    }
    col[v] = -1;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<std::vector<int>> maximal_cliques(const SmallGraph& g) {
  std::vector<std::vector<int>> out;
  auto bk = [&](auto&& self, std::uint64_t R, std::uint64_t P, std::uint64_t X) -> void {
    if (!P && !X) {
      std::vector<int> c;
      for (std::uint64_t m = R; m; m &= m - 1) c.push_back(lowest(m));
      out.push_back(c);
      return;
    }
    std::uint64_t px = P | X;
    int pivot = lowest(px), best = -1;
    for (std::uint64_t m = px; m; m &= m - 1) {
      int u = lowest(m), c = popcount(P & g.out_mask(u));
      if (c > best) best = c, pivot = u;
    }
    for (std::uint64_t m = P & ~g.out_mask(pivot); m; m &= m - 1) {
      int v = lowest(m);
      std::uint64_t bit = std::uint64_t{1} << v;
      self(self, R | bit, P & g.out_mask(v), X & g.out_mask(v));
      P &= ~bit;
      X |= bit;
    }
  };
  std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  bk(bk, 0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::vector<int>>> spreads(const SmallGraph& g) {
  auto cliques = maximal_cliques(g);
  std::vector<std::uint64_t> masks;
  for (const auto& c : cliques) {
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::uint64_t covered) -> void {
    if (covered == all) {
      std::vector<std::vector<int>> part;
      for (int c : chosen) part.push_back(cliques[c]);
      std::sort(part.begin(), part.end());
      out.push_back(part);
      return;
    }
    int v = lowest(~covered & all);
    for (std::size_t c = 0; c < masks.size(); ++c)
      if ((masks[c] >> v & 1) && !(masks[c] & covered)) {
        chosen.push_back(static_cast<int>(c));
        self(self, covered | masks[c]);
        chosen.pop_back();
      }
  };
  if (g.n() > 0) rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Per-vertex sorted common-neighbour counts plus component sizes.
std::vector<int> graph_invariant(const SmallGraph& g) {
  std::vector<std::vector<int>> prof(g.n());
  for (int v = 0; v < g.n(); ++v) {
    for (int w = 0; w < g.n(); ++w)
      if (w != v) prof[v].push_back(popcount(g.out_mask(v) & g.out_mask(w)) * 2 + g.has_edge(v, w));
    std::sort(prof[v].begin(), prof[v].end());
  }
  std::sort(prof.begin(), prof.end());
  std::vector<int> key = component_sizes(g);
  key.push_back(-1);
  for (const auto& p : prof) key.insert(key.end(), p.begin(), p.end());
  return key;
}

}  // namespace

std::vector<SmallGraph> gen_regular_bipartite(int a, int b, int k,
                                              const std::function<bool(const SmallGraph&)>& predicate,
                                              int vertex_bound) {
  require(a >= 1 && b >= 1 && k >= 0, ErrorKind::usage, "bipartite generation needs positive part sizes");
  if (a + b > vertex_bound)
    fail(ErrorKind::refused, "bipartite generation on " + std::to_string(a + b) + " vertices exceeds bound " +
                                 std::to_string(vertex_bound));
  if (static_cast<long>(a) * k % b != 0 || k > b || (b ? static_cast<long>(a) * k / b : 0) > a) return {};
  const int kb = static_cast<int>(static_cast<long>(a) * k / b);  // degree on the b side
  // rows: k-subsets of columns, column 0 most significant
  std::vector<unsigned> row_sets;
  for (unsigned s = 0; s < (1u << b); ++s)
    if (__builtin_popcount(s) == k) row_sets.push_back(s);
  std::sort(row_sets.rbegin(), row_sets.rend());
  auto bit = [b](unsigned s, int c) { return (s >> (b - 1 - c)) & 1u; };

  std::map<std::vector<int>, std::vector<SmallGraph>> buckets;
  std::vector<unsigned> rows;
  std::vector<int> colsum(b, 0);
  std::vector<bool> tied(b > 0 ? b - 1 : 0, true);

  auto emit = [&]() {
    SmallGraph g(a + b);
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < b; ++c)
        if (bit(rows[r], c)) g.add_edge(r, a + c);
    if (predicate && !predicate(g)) return;
    auto& bucket = buckets[graph_invariant(g)];
    for (const auto& h : bucket)
      if (graphs_isomorphic(g, h)) return;
    bucket.push_back(g);
  };

  auto rec = [&](auto&& self, int r) -> void {
    if (r == a) {
      emit();
      return;
    }
    const int remaining = a - r - 1;
    for (unsigned s : row_sets) {
      if (r > 0 && s > rows[r - 1]) continue;
      bool ok = true;
      for (int c = 0; c < b && ok; ++c) {
        int cs = colsum[c] + static_cast<int>(bit(s, c));
        ok = cs <= kb && cs + remaining >= kb;
      }
      for (int c = 0; c + 1 < b && ok; ++c)
        if (tied[c] && bit(s, c) < bit(s, c + 1)) ok = false;
      if (!ok) continue;
      auto saved = tied;
      for (int c = 0; c < b; ++c) colsum[c] += static_cast<int>(bit(s, c));
      for (int c = 0; c + 1 < b; ++c)
        if (tied[c] && bit(s, c) != bit(s, c + 1)) tied[c] = false;
      rows.push_back(s);
      self(self, r + 1);
      rows.pop_back();
      for (int c = 0; c < b; ++c) colsum[c] -= static_cast<int>(bit(s, c));
      tied = saved;
    }
  };
  rec(rec, 0);

  std::vector<SmallGraph> out;
  for (auto& [key, bucket] : buckets)
    for (auto& g : bucket) out.push_back(std::move(g));
  return out;
}

std::vector<std::vector<int>> all_one_factors(const SmallGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> succ(g.n(), -1);
  auto rec = [&](auto&& self, int v, std::uint64_t used) -> void {
    if (v == g.n()) {
      out.push_back(succ);
      return;
    }
    for (std::uint64_t m = g.out_mask(v) & ~used; m; m &= m - 1) {
      int w = lowest(m);
      succ[v] = w;
      self(self, v + 1, used | (std::uint64_t{1} << w));
    }
  };
  rec(rec, 0, 0);
  return out;
}

OneFactorCensus enumerate_one_factors(const SmallGraph& g) {
  OneFactorCensus out;
  const auto group = all_automorphisms(g.relation_matrix());
  out.group_order = group.size();
  std::set<std::vector<int>> seen;
  std::vector<int> img(g.n());
  for (const auto& f : all_one_factors(g)) {
    ++out.total;
    std::vector<int> best = f;
    for (const auto& phi : group) {
      for (int v = 0; v < g.n(); ++v) img[phi[v]] = phi[f[v]];
      if (img < best) best = img;
    }
    if (seen.insert(best).second) out.factors.push_back(best);
  }
  return out;
}

std::vector<SmallGraph> read_graphs(std::istream& in) {
  std::vector<SmallGraph> out;
  std::vector<std::string> block;
  auto flush = [&]() {
    if (block.empty()) return;
    const int n = static_cast<int>(block.size());
    SmallGraph g(n);
    for (int u = 0; u < n; ++u) {
      if (static_cast<int>(block[u].size()) != n)
        fail(ErrorKind::parse, "graph block row " + std::to_string(u) + " has length " +
                                   std::to_string(block[u].size()) + ", expected " + std::to_string(n));
      for (int v = 0; v < n; ++v) {
        char ch = block[u][v];
        if (ch != '0' && ch != '1') fail(ErrorKind::parse, "graph block contains '" + std::string(1, ch) + "'");
        if (ch == '1' && u != v) g.add_edge(u, v);
      }
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (block[u][v] != block[v][u] || (u == v && block[u][v] == '1'))
          fail(ErrorKind::parse, "graph block is not a symmetric loopless adjacency matrix");
    out.push_back(g);
    block.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty())
      flush();
    else
      block.push_back(line);
  }
  flush();
  return out;
}

void write_graphs(std::ostream& out, const std::vector<SmallGraph>& graphs) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out << '\n';
    const auto& g = graphs[i];
    for (int u = 0; u < g.n(); ++u) {
      for (int v = 0; v < g.n(); ++v) out << (g.has_edge(u, v) ? '1' : '0');
      out << '\n';
    }
  }
}

std::vector<SmallGraph> load_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::usage, "cannot open " + path);
  return read_graphs(in);
}

void save_graphs(const std::string& path, const std::vector<SmallGraph>& graphs) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "cannot write " + path);
  write_graphs(out, graphs);
}

}  // namespace asch
