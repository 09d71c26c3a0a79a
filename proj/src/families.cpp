#include "cyclepack/families.hpp"

#include <string>

namespace cyclepack {

Graph gen_complete(int n) {
  if (n < 0) throw input_error("gen_complete: n must be non-negative");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

Graph gen_cycle(int n) {
  if (n < 3) throw input_error("gen_cycle: n must be at least 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph gen_path(int n) {
  if (n < 1) throw input_error("gen_path: n must be at least 1");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph gen_sk(int m) {
  if (m < 4) throw input_error("gen_sk: m must be at least 4");
  GraphBuilder b(m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!(i == 0 && j == 1)) b.add_edge(i, j);
  b.add_edge(m, 0);
  b.add_edge(m, 1);
  return b.build();
}

Graph gen_gnk(int n, int k) {
  if (k < 1) throw input_error("gen_gnk: k must be at least 1");
  if (n < 3 * k) throw input_error("gen_gnk: n must be at least 3k");
  return join(gen_complete(2 * k - 1), build_graph(n - 2 * k + 1, {}));
}

Graph gen_de_matching(int n, int k) {
  if (k < 1) throw input_error("gen_de_matching: k must be at least 1");
  if (n % 2 == 0) throw input_error("gen_de_matching: n must be odd");
  if (n < 3 * k) throw input_error("gen_de_matching: n must be at least 3k");
  int half = (n - 2 * k + 1) / 2;
  if (half < 1) throw input_error("gen_de_matching: Y and Z would be empty");

  int x_sz = 2 * k - 1;
  GraphBuilder b(n);
  for (int i = 0; i < x_sz; ++i)
    for (int j = i + 1; j < x_sz; ++j) b.add_edge(i, j);
  for (int i = 0; i < x_sz; ++i)
    for (int y = 0; y < half; ++y) b.add_edge(i, x_sz + y);
  for (int y = 0; y < half; ++y) b.add_edge(x_sz + y, x_sz + half + y);
  return b.build();
}

Graph gen_kky_exception(int k) {
  if (k < 2) throw input_error("gen_kky_exception: k must be at least 2");
  Graph two_cliques = disjoint_union(gen_complete(k), gen_complete(k));
  return join(two_cliques, build_graph(k, {}));
}

Graph gen_wheel(int n) {
  if (n < 4) throw input_error("gen_wheel: n must be at least 4");
  GraphBuilder b(n);
  for (int i = 0; i < n - 1; ++i) b.add_edge(i, (i + 1) % (n - 1));
  for (int i = 0; i < n - 1; ++i) b.add_edge(i, n - 1);
  return b.build();
}

Graph gen_remark8(int k) {
  if (k < 2) throw input_error("gen_remark8: k must be at least 2");
  int clique_sz = 2 * k - 1;         // 0..2k-2, stays complete
  int w_lo = clique_sz;              // W = 2k-1..3k-2, made independent
  int x0 = 3 * k - 1;
  int leaf_lo = 3 * k;               // x_1..x_k = 3k..4k-1
  GraphBuilder b(4 * k);
  for (int i = 0; i < clique_sz; ++i)
    for (int j = i + 1; j < clique_sz; ++j) b.add_edge(i, j);
  for (int i = 0; i < clique_sz; ++i)
    for (int w = 0; w < k; ++w) b.add_edge(i, w_lo + w);
  for (int w = 0; w < k; ++w) b.add_edge(x0, w_lo + w);
  for (int l = 0; l < k; ++l) b.add_edge(x0, leaf_lo + l);
  return b.build();
}

}  // namespace cyclepack
