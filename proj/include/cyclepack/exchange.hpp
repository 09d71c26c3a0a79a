#ifndef CYCLEPACK_EXCHANGE_HPP
#define CYCLEPACK_EXCHANGE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cyclepack/solvers.hpp"

namespace cyclepack {

/// Digraph on triangle-packing positions. An edge T->U says some vertex of T
/// is fully joined to U; the recorded witness is the lowest such vertex.
struct TriangleDigraph {
  struct Arc {
    int to;
    int witness;
  };
  std::vector<std::vector<Arc>> out;

  int node_count() const { return static_cast<int>(out.size()); }
};

/// A directed path trail[0] -> ... -> trail.back() in a TriangleDigraph,
/// with witnesses[i] certifying the hop trail[i] -> trail[i+1].
struct DigraphPath {
  std::vector<int> trail;
  std::vector<int> witnesses;
};

struct ExchangeState {
  Graph host;
  TrianglePacking packing;
  int x = -1;
  int t0 = -1;                   // index of the triangle containing x
  TriangleDigraph d;             // auxiliary digraph over the packing
  std::vector<int> reach;        // triangles from which t0 is reachable; t0 first
  std::vector<int> b;            // outside vertices fully joined to T0
  std::vector<int> tstar;        // vertices of T* = T0 u B
  TriangleDigraph dstar;         // node t0 stands for T*
  std::vector<int> star_reach_set;  // nodes from which T* is reachable; T* first
};

/// Validates p and throws precondition_error naming the violated clause.
void validate_triangle_packing(const Graph& g, const TrianglePacking& p);

TriangleDigraph build_aux_digraph(const Graph& g, const TrianglePacking& p);

/// Outside vertices fully joined to t0 (which must be a member of p).
std::vector<int> b_set(const Graph& g, const TrianglePacking& p,
                       const std::array<int, 3>& t0);

/// The rotation of a witness path: the path start trades its witness for v,
/// each later triangle trades its witness for the previous one, and the
/// terminus T0 is untouched. Preconditions are checked with diagnostics;
/// postconditions (size, T0 membership, B growth by the last witness) are
/// asserted.
TrianglePacking rotate_along_path(const Graph& g, const TrianglePacking& p,
                                  const DigraphPath& path, int v);

/// Maximum-cardinality triangle packing containing x (exact, deterministic).
TrianglePacking max_packing_through(const Graph& g, int x,
                                    const SolveLimits& limits = SolveLimits());

struct RotationOpportunity {
  int v;
  DigraphPath path;
};

/// A vertex v outside V(p) u B fully joined to some triangle reaching t0,
/// with a breadth-first witness path to t0. Deterministic scan order.
std::optional<RotationOpportunity> find_rotation(const Graph& g, const TrianglePacking& p,
                                                 int t0);

/// Maximum packing through x, then rotations until B stops growing; fills in
/// the full auxiliary structure. Empty result when x lies in no triangle.
std::optional<ExchangeState> grow_packing_with_vertex(const Graph& g, int x,
                                                      const SolveLimits& limits = SolveLimits());

/// D* over (packing - T0) + T* (edges on ||v,U|| >= 3) and the set of nodes
/// from which T* is reachable, T* first.
std::pair<TriangleDigraph, std::vector<int>> star_reach(const Graph& g,
                                                        const ExchangeState& s);

/// Replace T0 = {x,y,z} by {x,y,u} for u in B (z joins the new B). The
/// kept companion y is the lowest non-x vertex of T0.
ExchangeState reroot_t0(const Graph& g, const ExchangeState& s, int u);

}  // namespace cyclepack

#endif
