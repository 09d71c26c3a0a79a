#ifndef CYCLEPACK_FAMILIES_HPP
#define CYCLEPACK_FAMILIES_HPP

#include "cyclepack/graph.hpp"

namespace cyclepack {

// Deterministic constructions. Vertex numbering is fixed per family
// (cliques first, special vertices last) so certificates stay stable.

/// K_m with edge (0,1) subdivided through the new vertex m (degree 2).
Graph gen_sk(int m);

/// K_{2k-1} (ids 0..2k-2) joined to an independent set of n-2k+1 vertices.
Graph gen_gnk(int n, int k);

/// X = clique 0..2k-2, Y and Z of size (n-2k+1)/2; X-Y complete, Y-Z a
/// perfect matching (y_i to z_i). Requires n odd, n >= 3k.
Graph gen_de_matching(int n, int k);

/// Two k-cliques (0..k-1, k..2k-1) joined to an independent k-set (2k..3k-1).
Graph gen_kky_exception(int k);

/// Rim cycle 0..n-2 plus hub n-1.
Graph gen_wheel(int n);

/// K_{3k-1} with the k-set 2k-1..3k-2 made independent; x_0 = 3k-1 joined to
/// that set and to the k leaves 3k..4k-1. |G| = 4k.
Graph gen_remark8(int k);

Graph gen_complete(int n);
Graph gen_cycle(int n);
Graph gen_path(int n);

}  // namespace cyclepack

#endif
