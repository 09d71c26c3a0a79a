#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cyclepack/graph.hpp"

namespace cyclepack {

bool is_planar(const Graph& g) {
  // Every graph on at most 4 vertices is planar.
  if (g.n() <= 4) return true;
  // Mandatory prefilter: a planar graph obeys m <= 3n-6.
  if (g.m() > 3 * g.n() - 6) return false;

  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace cyclepack
