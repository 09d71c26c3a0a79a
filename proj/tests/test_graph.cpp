#include "doctest.h"

#include <random>

#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "support/oracles.hpp"

using namespace cyclepack;

static Graph enumerate_nth(int n, unsigned mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1) edges.push_back({i, j});
  return build_graph(n, edges);
}

TEST_CASE("build_graph basics") {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.n() == 3);
  CHECK(k3.m() == 3);

  Graph single = build_graph(1, {});
  CHECK(single.n() == 1);
  CHECK(single.m() == 0);

  Graph dup = build_graph(4, {{0, 1}, {0, 1}});
  CHECK(dup.m() == 1);

  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), input_error);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), input_error);
  CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), input_error);
}

TEST_CASE("degree classes") {
  Graph sk5 = gen_sk(5);
  auto dc = degree_classes(sk5, 2);
  CHECK(dc.H == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(dc.L == std::vector<int>{5});
  CHECK(dc.h() - dc.ell() == 4);

  auto pet = degree_classes(oracles::petersen(), 2);
  CHECK(pet.h() == 0);
  CHECK(pet.ell() == 0);

  auto k5 = degree_classes(gen_complete(5), 2);
  CHECK(k5.h() == 5);
  CHECK(k5.ell() == 0);

  CHECK_THROWS_AS(degree_classes(sk5, 0), precondition_error);
}

TEST_CASE("threshold classes") {
  Graph k4 = gen_complete(4);
  auto [hi, lo] = threshold_classes(k4, 3, 1);
  CHECK(hi.size() == 4);
  CHECK(lo.empty());

  Graph star = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto [c, leaves] = threshold_classes(star, 5, 1);
  CHECK(c == std::vector<int>{0});
  CHECK(leaves.size() == 5);

  auto [none, u_only] = threshold_classes(gen_sk(5), 5, 3);
  CHECK(none.empty());
  CHECK(u_only == std::vector<int>{5});

  CHECK_THROWS_AS(threshold_classes(k4, 1, 1), precondition_error);
}

TEST_CASE("degree classes agree with threshold classes") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = oracles::gnp(9, 0.4, rng);
    for (int k = 1; k <= 3; ++k) {
      auto dc = degree_classes(g, k);
      auto [hi, lo] = threshold_classes(g, 2 * k, 2 * k - 2);
      CHECK(dc.H == hi);
      CHECK(dc.L == lo);
    }
  }
}

TEST_CASE("two_core") {
  // any tree dies completely
  Graph tree = build_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(two_core(tree).first.n() == 0);

  // pendant vertex drops, C5 survives
  Graph c5p = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  auto [core, vm] = two_core(c5p);
  CHECK(core.n() == 5);
  CHECK(core.m() == 5);
  CHECK(vm.primary == std::vector<int>{0, 1, 2, 3, 4});

  // empty graph is a legal graph
  CHECK(two_core(Graph()).first.n() == 0);
}

TEST_CASE("two_core properties against brute force") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 80; ++rep) {
    Graph g = oracles::gnp(8, 0.22, rng);
    auto [core, vm] = two_core(g);

    // min degree >= 2 or empty, and idempotent
    if (core.n() > 0) CHECK(core.min_degree() >= 2);
    CHECK(two_core(core).first == core);

    // every induced subgraph of min degree >= 2 lies inside the core
    Bitset in_core(g.n());
    for (int v : vm.primary) in_core.set(v);
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < g.n(); ++v)
        if ((mask >> v) & 1) s.push_back(v);
      auto [sub, svm] = induced(g, s);
      if (sub.n() > 0 && sub.min_degree() >= 2) {
        for (int v : s) CHECK(in_core.test(v));
      }
    }
  }
}

TEST_CASE("contract") {
  Graph c4 = gen_cycle(4);
  auto [c3, vm] = contract(c4, 0, 1);
  CHECK(c3.n() == 3);
  CHECK(c3.m() == 3);
  CHECK(vm.is_contracted(2));
  CHECK(vm.primary[2] == 0);
  CHECK(vm.secondary[2] == 1);

  Graph p3 = gen_path(3);
  auto [p2, vm2] = contract(p3, 0, 1);
  CHECK(p2.n() == 2);
  CHECK(p2.m() == 1);

  CHECK_THROWS_AS(contract(c4, 0, 2), precondition_error);
}

TEST_CASE("contract in triangle-free graphs preserves outside degrees") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = oracles::random_bipartite(5, 5, 0.4, rng);
    REQUIRE(is_triangle_free(g));
    for (int x = 0; x < g.n(); ++x)
      for (int y : g.neighbors(x)) {
        if (y <= x) continue;
        auto [h, vm] = contract(g, x, y);
        CHECK(h.n() == g.n() - 1);
        for (int v = 0; v < h.n(); ++v) {
          if (vm.is_contracted(v)) {
            CHECK(h.degree(v) >= std::max(g.degree(x), g.degree(y)) - 1);
          } else {
            CHECK(h.degree(v) == g.degree(vm.primary[v]));
          }
        }
      }
  }
}

TEST_CASE("join and complement") {
  Graph e2 = build_graph(2, {});
  Graph j = join(e2, e2);
  CHECK(j.n() == 4);
  CHECK(j.m() == 4);
  CHECK(oracles::isomorphic(j, gen_cycle(4)));

  // G_{n,k} is literally the join with this vertex numbering
  CHECK(join(gen_complete(3), build_graph(3, {})) == gen_gnk(6, 2));

  std::mt19937 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = oracles::gnp(8, 0.5, rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("join degree law") {
  std::mt19937 rng(5);
  Graph a = oracles::gnp(6, 0.4, rng);
  Graph b = oracles::gnp(5, 0.6, rng);
  Graph j = join(a, b);
  for (int v = 0; v < a.n(); ++v) CHECK(j.degree(v) == a.degree(v) + b.n());
  for (int v = 0; v < b.n(); ++v) CHECK(j.degree(a.n() + v) == b.degree(v) + a.n());
}

TEST_CASE("is_triangle_free") {
  CHECK(is_triangle_free(gen_cycle(5)));
  CHECK_FALSE(is_triangle_free(gen_complete(3)));
  CHECK_FALSE(is_triangle_free(gen_de_matching(7, 2)));  // X is a 3-clique
  CHECK(is_triangle_free(Graph()));
}

TEST_CASE("plumbing: induced, delete_vertices, delete_edge") {
  Graph k4 = gen_complete(4);

  auto [tri, vm] = induced(k4, {0, 2, 3});
  CHECK(tri.n() == 3);
  CHECK(tri.m() == 3);
  CHECK(vm.primary == std::vector<int>{0, 2, 3});

  auto [tri2, vm2] = induced(k4, {3, 0, 2, 2});  // dedup + sort
  CHECK(tri2 == tri);

  auto [rest, vm3] = delete_vertices(k4, {1});
  CHECK(rest == tri);
  CHECK(delete_vertices(k4, {}).first == k4);
  CHECK(delete_vertices(k4, {0, 1, 2, 3}).first.n() == 0);

  CHECK(induced(k4, {}).first.n() == 0);

  Graph minus = delete_edge(k4, 0, 1);
  CHECK(minus.m() == 5);
  CHECK_FALSE(minus.has_edge(0, 1));
  CHECK_THROWS_AS(delete_edge(minus, 0, 1), precondition_error);
  CHECK_THROWS_AS(induced(k4, {7}), precondition_error);
  CHECK_THROWS_AS(delete_vertices(k4, {-1}), precondition_error);
}

TEST_CASE("disjoint_union") {
  Graph two_triangles = disjoint_union(gen_complete(3), gen_complete(3));
  CHECK(two_triangles.n() == 6);
  CHECK(two_triangles.m() == 6);
  CHECK_FALSE(two_triangles.has_edge(0, 3));
}

TEST_CASE("enumerated small graphs: H_k/L_k cross-check") {
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    Graph g = enumerate_nth(5, mask);
    for (int k = 1; k <= 2; ++k) {
      auto dc = degree_classes(g, k);
      auto [hi, lo] = threshold_classes(g, 2 * k, 2 * k - 2);
      REQUIRE(dc.H == hi);
      REQUIRE(dc.L == lo);
      // H and L are disjoint and omit degree 2k-1
      for (int v : dc.H) REQUIRE(g.degree(v) != 2 * k - 1);
      for (int v : dc.L) REQUIRE(g.degree(v) != 2 * k - 1);
    }
  }
}
