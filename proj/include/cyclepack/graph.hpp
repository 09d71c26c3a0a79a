#ifndef CYCLEPACK_GRAPH_HPP
#define CYCLEPACK_GRAPH_HPP

#include <utility>
#include <vector>

#include "cyclepack/bitset.hpp"
#include "cyclepack/errors.hpp"

namespace cyclepack {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; every "modifying" operation returns a new graph. Safe to
/// share read-only across threads.
class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  int m() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return deg_[v]; }
  const Bitset& neighbors(int v) const { return adj_[v]; }

  int min_degree() const;
  int max_degree() const;

  /// Exact labeled equality (same n, same adjacency).
  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> deg_;

  friend class GraphBuilder;
};

/// The one mutable path to a Graph. add_edge ignores duplicates and asserts
/// on loops/out-of-range (callers validate user input themselves).
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  Graph build();

 private:
  int n_;
  std::vector<Bitset> adj_;
};

/// Validated construction from an edge list. Duplicate edges collapse;
/// loops and out-of-range endpoints raise input_error.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// Maps vertices of a derived graph back to its parent. Injective except at
/// a contracted vertex, which carries two parents (primary, secondary).
struct VertexMap {
  std::vector<int> primary;
  std::vector<int> secondary;  // -1 unless the vertex arose from a contraction

  int size() const { return static_cast<int>(primary.size()); }
  bool is_contracted(int v) const { return secondary[v] != -1; }
};

/// H = vertices of degree >= 2k, L = vertices of degree <= 2k-2; vertices of
/// degree exactly 2k-1 belong to neither.
struct DegreeClasses {
  int k = 0;
  std::vector<int> H;
  std::vector<int> L;

  int h() const { return static_cast<int>(H.size()); }
  int ell() const { return static_cast<int>(L.size()); }
};

DegreeClasses degree_classes(const Graph& g, int k);

/// (V_{>=s_hi}, V_{<=s_lo}); requires s_lo < s_hi.
std::pair<std::vector<int>, std::vector<int>> threshold_classes(const Graph& g, int s_hi,
                                                                int s_lo);

/// Maximal subgraph of minimum degree >= 2 (possibly empty), via iterated
/// deletion of degree-<=1 vertices. Idempotent.
std::pair<Graph, VertexMap> two_core(const Graph& g);

/// Contract edge xy; the merged vertex gets the highest id of the result,
/// survivors keep ascending order. Parallel edges merge (simple semantics).
std::pair<Graph, VertexMap> contract(const Graph& g, int x, int y);

/// Disjoint union plus all cross edges. Left graph keeps its ids, right
/// graph is shifted by |g|.
Graph join(const Graph& g, const Graph& g2);

Graph disjoint_union(const Graph& g, const Graph& g2);

Graph complement(const Graph& g);

bool is_triangle_free(const Graph& g);

/// Induced subgraph on S (deduplicated, renumbered ascending).
std::pair<Graph, VertexMap> induced(const Graph& g, const std::vector<int>& s);

std::pair<Graph, VertexMap> delete_vertices(const Graph& g, const std::vector<int>& s);

Graph delete_edge(const Graph& g, int u, int v);

/// Exact planarity decision. The edge bound m <= 3n-6 is applied first.
bool is_planar(const Graph& g);

}  // namespace cyclepack

#endif
