#ifndef CYCLEPACK_SOLVERS_HPP
#define CYCLEPACK_SOLVERS_HPP

#include <array>
#include <optional>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

/// Pairwise vertex-disjoint cycles, each a vertex sequence in cyclic order.
struct CyclePacking {
  std::vector<std::vector<int>> cycles;
};

/// Pairwise disjoint triangles, each stored sorted ascending.
struct TrianglePacking {
  std::vector<std::array<int, 3>> triangles;
};

/// Default n-cap for the exact solvers; CYCLEPACK_SIZE_GUARD overrides it.
int default_size_guard();

struct SolveLimits {
  int max_n;
  SolveLimits() : max_n(default_size_guard()) {}
  explicit SolveLimits(int n) : max_n(n) {}
};

/// All chordless (induced) cycles, canonical form (min vertex first, second
/// vertex < last), sorted by length then lexicographically.
std::vector<std::vector<int>> chordless_cycles(const Graph& g);

/// All triangles a<b<c in lexicographic order.
std::vector<std::array<int, 3>> all_triangles(const Graph& g);

/// Exact decision + certificate: a packing of exactly k disjoint cycles iff
/// one exists. Complete search over chordless cycles (every cycle contains a
/// chordless one on a subset of its vertices, so these suffice).
std::optional<CyclePacking> find_disjoint_cycles(const Graph& g, int k,
                                                 const SolveLimits& limits = SolveLimits());

/// True iff p is a family of >= k pairwise disjoint cycles of g.
bool verify_cycle_packing(const Graph& g, const CyclePacking& p, int k);

/// Exact maximum triangle packing; deterministic (lex-least optimum).
TrianglePacking max_triangle_packing(const Graph& g,
                                     const SolveLimits& limits = SolveLimits());

bool verify_triangle_packing(const Graph& g, const TrianglePacking& p);

struct IndependentSet {
  int alpha = 0;
  std::vector<int> witness;
};

/// Exact independence number with one maximum independent set.
IndependentSet independence_number(const Graph& g, const SolveLimits& limits = SolveLimits());

/// t_G >= 2, by early-exit pair scan.
bool has_two_disjoint_triangles(const Graph& g);

/// g isomorphic to K_1 v C_{n-1}, n >= 4 (K_4 counts: it is K_1 v C_3).
bool is_wheel(const Graph& g);

/// g isomorphic to 2K_k v complement(K_k).
bool is_kky_exception(const Graph& g, int k);

}  // namespace cyclepack

#endif
