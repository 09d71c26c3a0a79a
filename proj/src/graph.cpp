#include "cyclepack/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace cyclepack {

GraphBuilder::GraphBuilder(int n) : n_(n), adj_(n, Bitset(n)) { assert(n >= 0); }

void GraphBuilder::add_edge(int u, int v) {
  assert(0 <= u && u < n_ && 0 <= v && v < n_ && u != v);
  adj_[u].set(v);
  adj_[v].set(u);
}

Graph GraphBuilder::build() {
  Graph g;
  g.n_ = n_;
  g.adj_ = std::move(adj_);
  g.deg_.resize(n_);
  int twice_m = 0;
  for (int v = 0; v < n_; ++v) {
    g.deg_[v] = g.adj_[v].count();
    twice_m += g.deg_[v];
  }
  g.m_ = twice_m / 2;
  return g;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw input_error("vertex count must be non-negative");
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw input_error("loop edge rejected: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    b.add_edge(u, v);
  }
  return b.build();
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = (v == 0) ? deg_[v] : std::min(d, deg_[v]);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
  return d;
}

DegreeClasses degree_classes(const Graph& g, int k) {
  if (k < 1) throw precondition_error("degree_classes requires k >= 1");
  DegreeClasses dc;
  dc.k = k;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= 2 * k)
      dc.H.push_back(v);
    else if (g.degree(v) <= 2 * k - 2)
      dc.L.push_back(v);
  }
  return dc;
}

std::pair<std::vector<int>, std::vector<int>> threshold_classes(const Graph& g, int s_hi,
                                                                int s_lo) {
  if (s_lo >= s_hi) throw precondition_error("threshold_classes requires s_lo < s_hi");
  std::vector<int> hi, lo;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= s_hi) hi.push_back(v);
    if (g.degree(v) <= s_lo) lo.push_back(v);
  }
  return {hi, lo};
}

std::pair<Graph, VertexMap> induced(const Graph& g, const std::vector<int>& s) {
  std::vector<int> keep(s);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= g.n())
      throw precondition_error("induced: vertex " + std::to_string(v) + " out of range");

  int nn = static_cast<int>(keep.size());
  GraphBuilder b(nn);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      if (g.has_edge(keep[i], keep[j])) b.add_edge(i, j);

  VertexMap vm;
  vm.primary = keep;
  vm.secondary.assign(nn, -1);
  return {b.build(), vm};
}

std::pair<Graph, VertexMap> delete_vertices(const Graph& g, const std::vector<int>& s) {
  Bitset drop(g.n());
  for (int v : s) {
    if (v < 0 || v >= g.n())
      throw precondition_error("delete_vertices: vertex " + std::to_string(v) +
                               " out of range");
    drop.set(v);
  }
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v)
    if (!drop.test(v)) keep.push_back(v);
  return induced(g, keep);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || !g.has_edge(u, v))
    throw precondition_error("delete_edge: not an edge");
  GraphBuilder b(g.n());
  for (int a = 0; a < g.n(); ++a)
    for (int c : g.neighbors(a)) {
      if (c <= a) continue;
      if ((a == u && c == v) || (a == v && c == u)) continue;
      b.add_edge(a, c);
    }
  return b.build();
}

std::pair<Graph, VertexMap> two_core(const Graph& g) {
  Bitset alive = Bitset::full(g.n());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n(); ++v) {
      if (!alive.test(v)) continue;
      if (g.neighbors(v).count_and(alive) <= 1) {
        alive.reset(v);
        changed = true;
      }
    }
  }
  return induced(g, alive.to_vector());
}

std::pair<Graph, VertexMap> contract(const Graph& g, int x, int y) {
  if (x < 0 || x >= g.n() || y < 0 || y >= g.n() || x == y || !g.has_edge(x, y))
    throw precondition_error("contract: xy must be an edge");

  int nn = g.n() - 1;
  std::vector<int> new_id(g.n(), -1);
  std::vector<int> old_of;
  for (int v = 0; v < g.n(); ++v) {
    if (v == x || v == y) continue;
    new_id[v] = static_cast<int>(old_of.size());
    old_of.push_back(v);
  }
  int merged = nn - 1;  // the contracted vertex takes the last slot

  GraphBuilder b(nn);
  for (int u = 0; u < g.n(); ++u) {
    if (u == x || u == y) continue;
    for (int v : g.neighbors(u)) {
      if (v == x || v == y) {
        b.add_edge(new_id[u], merged);
      } else if (v > u) {
        b.add_edge(new_id[u], new_id[v]);
      }
    }
  }

  VertexMap vm;
  vm.primary = old_of;
  vm.primary.push_back(std::min(x, y));
  vm.secondary.assign(nn, -1);
  vm.secondary[merged] = std::max(x, y);
  return {b.build(), vm};
}

Graph join(const Graph& g, const Graph& g2) {
  int na = g.n(), nb = g2.n();
  GraphBuilder b(na + nb);
  for (int u = 0; u < na; ++u)
    for (int v : g.neighbors(u))
      if (v > u) b.add_edge(u, v);
  for (int u = 0; u < nb; ++u)
    for (int v : g2.neighbors(u))
      if (v > u) b.add_edge(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) b.add_edge(u, na + v);
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& g2) {
  int na = g.n();
  GraphBuilder b(na + g2.n());
  for (int u = 0; u < na; ++u)
    for (int v : g.neighbors(u))
      if (v > u) b.add_edge(u, v);
  for (int u = 0; u < g2.n(); ++u)
    for (int v : g2.neighbors(u))
      if (v > u) b.add_edge(na + u, na + v);
  return b.build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    }
  return true;
}

}  // namespace cyclepack
