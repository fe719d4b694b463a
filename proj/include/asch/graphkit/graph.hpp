#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "asch/schemes/relation_matrix.hpp"

namespace asch {

inline constexpr int kMaxGraphVertices = 64;

// Graph on at most 64 vertices stored as out-neighbour bitmasks. Undirected
// graphs keep both arcs of every edge.
class SmallGraph {
 public:
  SmallGraph() = default;
  explicit SmallGraph(int n, bool directed = false);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::uint64_t out_mask(int u) const { return adj_[u]; }
  int out_degree(int u) const;
  int in_degree(int v) const;
  std::vector<int> neighbours(int u) const;
  long edge_count() const;  // arcs for directed graphs

  // Undirected: 1 edge, 2 non-edge. Directed: 1 arc u->v only, 2 v->u only,
  // 3 both, 4 neither. Unused indices are dropped.
  RelationMatrix relation_matrix() const;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  bool directed_ = false;
  std::vector<std::uint64_t> adj_;
};

// Undirected graph of one relation (pairs with r(x, y) = i).
SmallGraph relation_graph(const RelationMatrix& r, int i);

bool graphs_isomorphic(const SmallGraph& a, const SmallGraph& b);
// Sizes of the connected components (undirected), ascending.
std::vector<int> component_sizes(const SmallGraph& g);
std::vector<std::vector<int>> components(const SmallGraph& g);

// Edges between vertices at distance exactly r.
SmallGraph distance_power(const SmallGraph& g, int r);

// Proper colouring with at most k colours (colour of each vertex), or nullopt.
std::optional<std::vector<int>> chromatic_at_most(const SmallGraph& g, int k);
// All proper colourings with at most k colours, up to renaming colours
// (colours numbered by first appearance). Throws ErrorKind::refused beyond `limit`.
std::vector<std::vector<int>> all_colourings(const SmallGraph& g, int k, std::size_t limit = 1000000);

// Maximal cliques as sorted vertex lists (Bron-Kerbosch with pivoting).
std::vector<std::vector<int>> maximal_cliques(const SmallGraph& g);
// Partitions of the vertex set into maximal cliques.
std::vector<std::vector<std::vector<int>>> spreads(const SmallGraph& g);

// k-regular bipartite graphs with parts 0..a-1 and a..a+b-1 passing the
// predicate, one per isomorphism class (sides may be exchanged). Refuses
// a + b above `vertex_bound`.
std::vector<SmallGraph> gen_regular_bipartite(int a, int b, int k,
                                              const std::function<bool(const SmallGraph&)>& predicate = {},
                                              int vertex_bound = 18);

// Spanning subgraphs with every in- and out-degree 1, as successor arrays,
// one per orbit of the automorphism group of g.
struct OneFactorCensus {
  long total = 0;                            // before dedup
  std::vector<std::vector<int>> factors;     // orbit representatives
  std::size_t group_order = 0;
};
OneFactorCensus enumerate_one_factors(const SmallGraph& g);
// Successor arrays of every 1-factor (no dedup).
std::vector<std::vector<int>> all_one_factors(const SmallGraph& g);

// n lines of 0/1 characters per graph, graphs separated by blank lines.
std::vector<SmallGraph> read_graphs(std::istream& in);
void write_graphs(std::ostream& out, const std::vector<SmallGraph>& graphs);
std::vector<SmallGraph> load_graphs(const std::string& path);
void save_graphs(const std::string& path, const std::vector<SmallGraph>& graphs);

}  // namespace asch
