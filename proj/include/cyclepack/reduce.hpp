#ifndef CYCLEPACK_REDUCE_HPP
#define CYCLEPACK_REDUCE_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "cyclepack/solvers.hpp"

namespace cyclepack {

/// One reduction step, with ids in the pre-step graph and the VertexMap from
/// the post-step graph back to it.
struct ReductionStep {
  enum class Kind {
    DeleteLowDegree,  // a = deleted vertex of degree <= 1
    Suppress,         // a = degree-2 vertex x, b/c = its neighbors y,z; edge yz inserted
    Contract,         // a = L-vertex x, b = y with xy in no triangle
  };
  Kind kind;
  int a = -1, b = -1, c = -1;
  VertexMap map;
};

/// Replaying the steps on `original` reproduces the kernel bit for bit.
struct ReductionTrace {
  Graph original;
  std::vector<ReductionStep> steps;

  Graph replay() const;
  /// Composed correspondence: kernel vertex -> original vertices it stands for.
  std::vector<std::vector<int>> kernel_to_original() const;
  void dump(std::ostream& os) const;
};

enum class ReduceMode { Exact, Aggressive };

/// Fixpoint of R1 (delete degree <= 1) and R2 (suppress a degree-2 vertex
/// whose neighbors are non-adjacent); both preserve "has k disjoint cycles"
/// in both directions. Aggressive mode additionally contracts xy for x in
/// L_k with xy in no triangle, which only guarantees kernel-yes =>
/// original-yes. Scans ascending vertex ids, restarting after each step.
std::pair<Graph, ReductionTrace> kernelize(const Graph& g, int k, ReduceMode mode);

/// Lift a kernel packing back to the original graph, undoing steps in
/// reverse: Suppress re-inserts x into the cycle using edge yz, Contract
/// expands the merged vertex into x, y, or the edge xy.
CyclePacking lift(const ReductionTrace& trace, const CyclePacking& p);

/// Edges whose deletion the minimality argument permits: both endpoint
/// degrees outside {2k-1, 2k}. Report-only; never used by the finder.
std::vector<Edge> hypothesis_edges(const Graph& g, int k);

/// kernelize -> solve on the kernel -> lift. In exact mode the answer equals
/// find_disjoint_cycles(g, k); aggressive mode falls back to the direct
/// solver when the kernel search fails.
std::optional<CyclePacking> find_with_reduction(const Graph& g, int k,
                                                ReduceMode mode = ReduceMode::Exact,
                                                const SolveLimits& limits = SolveLimits());

}  // namespace cyclepack

#endif
