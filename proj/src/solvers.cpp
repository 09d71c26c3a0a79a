#include "cyclepack/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <string>

namespace cyclepack {

int default_size_guard() {
  const char* env = std::getenv("CYCLEPACK_SIZE_GUARD");
  if (!env || !*env) return 64;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1)
    throw input_error("CYCLEPACK_SIZE_GUARD must be a positive integer, got \"" +
                      std::string(env) + "\"");
  return static_cast<int>(v);
}

static void check_guard(const Graph& g, const SolveLimits& limits, const char* op) {
  if (g.n() > limits.max_n)
    throw too_large_error(std::string(op) + ": n=" + std::to_string(g.n()) +
                          " exceeds size guard " + std::to_string(limits.max_n));
}

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.n(); ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      Bitset common = g.neighbors(a) & g.neighbors(b);
      for (int c : common)
        if (c > b) out.push_back({a, b, c});
    }
  return out;
}

std::vector<std::vector<int>> chordless_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  int n = g.n();
  std::vector<int> path;
  Bitset on_path(n);

  // Invariant: path = s,v1,...,tip with every vi (i>=1) non-adjacent to s
  // except v1, and each vertex adjacent only to its path neighbors. A
  // candidate w adjacent to s closes a chordless cycle and is never extended.
  std::function<void()> extend = [&]() {
    int s = path.front();
    int tip = path.back();
    for (int w : g.neighbors(tip)) {
      if (w <= s || on_path.test(w)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (g.has_edge(w, s)) {
        if (path.size() >= 2 && path[1] < w) {
          std::vector<int> cyc(path);
          cyc.push_back(w);
          out.push_back(std::move(cyc));
        }
      } else {
        path.push_back(w);
        on_path.set(w);
        extend();
        on_path.reset(w);
        path.pop_back();
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    for (int v : g.neighbors(s)) {
      if (v <= s) continue;
      path = {s, v};
      on_path = Bitset(n);
      on_path.set(s);
      on_path.set(v);
      extend();
    }
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool verify_cycle_packing(const Graph& g, const CyclePacking& p, int k) {
  Bitset used(g.n());
  for (const auto& cyc : p.cycles) {
    if (cyc.size() < 3) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int v = cyc[i];
      if (v < 0 || v >= g.n()) return false;
      if (used.test(v)) return false;  // repeat inside a cycle or across cycles
      used.set(v);
      int w = cyc[(i + 1) % cyc.size()];
      if (w < 0 || w >= g.n() || !g.has_edge(v, w)) return false;
    }
  }
  return static_cast<int>(p.cycles.size()) >= k;
}

std::optional<CyclePacking> find_disjoint_cycles(const Graph& g, int k,
                                                 const SolveLimits& limits) {
  if (k < 1) throw precondition_error("find_disjoint_cycles requires k >= 1");
  check_guard(g, limits, "find_disjoint_cycles");
  int n = g.n();
  if (n < 3 * k) return std::nullopt;

  auto cycles = chordless_cycles(g);
  if (static_cast<int>(cycles.size()) < k) return std::nullopt;

  std::vector<Bitset> masks;
  masks.reserve(cycles.size());
  for (const auto& c : cycles) {
    Bitset b(n);
    for (int v : c) b.set(v);
    masks.push_back(std::move(b));
  }

  std::vector<std::size_t> chosen;
  Bitset used(n);
  // Leftmost-first DFS doubles as the greedy lower bound; the length-sorted
  // order makes remaining-vertices/len a valid break-off bound.
  std::function<bool(std::size_t, int)> dfs = [&](std::size_t idx, int cnt) -> bool {
    if (cnt == k) return true;
    int avail = n - used.count();
    for (std::size_t i = idx; i < cycles.size(); ++i) {
      int len = static_cast<int>(cycles[i].size());
      if (cnt + avail / len < k) return false;
      if (cnt + static_cast<int>(cycles.size() - i) < k) return false;
      if (!used.intersects(masks[i])) {
        used |= masks[i];
        chosen.push_back(i);
        if (dfs(i + 1, cnt + 1)) return true;
        used.subtract(masks[i]);
        chosen.pop_back();
      }
    }
    return false;
  };

  if (!dfs(0, 0)) return std::nullopt;

  CyclePacking p;
  for (auto i : chosen) p.cycles.push_back(cycles[i]);
  assert(verify_cycle_packing(g, p, k));
  return p;
}

bool verify_triangle_packing(const Graph& g, const TrianglePacking& p) {
  Bitset used(g.n());
  for (const auto& t : p.triangles) {
    for (int v : t) {
      if (v < 0 || v >= g.n() || used.test(v)) return false;
      used.set(v);
    }
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2]))
      return false;
  }
  return true;
}

TrianglePacking max_triangle_packing(const Graph& g, const SolveLimits& limits) {
  check_guard(g, limits, "max_triangle_packing");
  int n = g.n();
  auto tris = all_triangles(g);
  std::vector<Bitset> masks;
  masks.reserve(tris.size());
  for (const auto& t : tris) {
    Bitset b(n);
    for (int v : t) b.set(v);
    masks.push_back(std::move(b));
  }

  std::vector<std::size_t> best, cur;
  Bitset used(n);
  int cap = n / 3;
  std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
    if (cur.size() > best.size()) best = cur;
    if (static_cast<int>(best.size()) == cap) return;
    int avail = n - used.count();
    for (std::size_t i = idx; i < tris.size(); ++i) {
      int bound = static_cast<int>(cur.size()) +
                  std::min(avail / 3, static_cast<int>(tris.size() - i));
      if (bound <= static_cast<int>(best.size())) return;
      if (!used.intersects(masks[i])) {
        used |= masks[i];
        cur.push_back(i);
        dfs(i + 1);
        used.subtract(masks[i]);
        cur.pop_back();
        if (static_cast<int>(best.size()) == cap) return;
      }
    }
  };
  dfs(0);

  TrianglePacking p;
  for (auto i : best) p.triangles.push_back(tris[i]);
  assert(verify_triangle_packing(g, p));
  return p;
}

IndependentSet independence_number(const Graph& g, const SolveLimits& limits) {
  check_guard(g, limits, "independence_number");
  int n = g.n();
  std::vector<int> best, cur;

  std::function<void(Bitset)> dfs = [&](Bitset cand) {
    if (cur.size() + static_cast<std::size_t>(cand.count()) <= best.size()) return;
    int v = cand.first();
    if (v == n) {
      best = cur;
      return;
    }
    // Pivot: max degree within candidates, ties to the lowest id.
    int bestdeg = -1;
    for (int u : cand) {
      int d = g.neighbors(u).count_and(cand);
      if (d > bestdeg) {
        bestdeg = d;
        v = u;
      }
    }
    Bitset in_cand(cand);
    in_cand.reset(v);
    in_cand.subtract(g.neighbors(v));
    cur.push_back(v);
    dfs(in_cand);
    cur.pop_back();
    if (bestdeg > 0) {  // isolated candidates are always taken
      Bitset out_cand(cand);
      out_cand.reset(v);
      dfs(out_cand);
    }
  };
  dfs(Bitset::full(n));

  std::sort(best.begin(), best.end());
  return {static_cast<int>(best.size()), best};
}

bool has_two_disjoint_triangles(const Graph& g) {
  auto tris = all_triangles(g);
  std::vector<Bitset> masks;
  masks.reserve(tris.size());
  for (const auto& t : tris) {
    Bitset b(g.n());
    for (int v : t) b.set(v);
    masks.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (!masks[i].intersects(masks[j])) return true;
  return false;
}

bool is_wheel(const Graph& g) {
  int n = g.n();
  if (n < 4) return false;
  for (int hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    // Rim must induce a single cycle: 2-regular (every rim vertex sees the
    // hub, so total degree 3) and connected.
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (v != hub && g.degree(v) != 3) ok = false;
    if (!ok) continue;
    // connectivity of the rim
    int start = hub == 0 ? 1 : 0;
    Bitset seen(n);
    seen.set(start);
    std::vector<int> stack{start};
    int cnt = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (w == hub || seen.test(w)) continue;
        seen.set(w);
        ++cnt;
        stack.push_back(w);
      }
    }
    if (cnt == n - 1) return true;
  }
  return false;
}

bool is_kky_exception(const Graph& g, int k) {
  if (k < 1 || g.n() != 3 * k) return false;
  // In 2K_k v complement(K_k) the co-clique has degree 2k, both cliques 2k-1.
  std::vector<int> co;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 2 * k)
      co.push_back(v);
    else if (g.degree(v) != 2 * k - 1)
      return false;
  }
  if (static_cast<int>(co.size()) != k) return false;
  for (std::size_t i = 0; i < co.size(); ++i)
    for (std::size_t j = i + 1; j < co.size(); ++j)
      if (g.has_edge(co[i], co[j])) return false;

  // The rest must split into exactly two k-cliques with no edges between.
  std::vector<int> rest;
  Bitset in_co(g.n());
  for (int v : co) in_co.set(v);
  for (int v = 0; v < g.n(); ++v)
    if (!in_co.test(v)) rest.push_back(v);
  auto [h, vm] = induced(g, rest);
  (void)vm;

  Bitset seen(h.n());
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < h.n(); ++v) {
    if (seen.test(v)) continue;
    std::vector<int> comp{v};
    seen.set(v);
    for (std::size_t qi = 0; qi < comp.size(); ++qi)
      for (int w : h.neighbors(comp[qi]))
        if (!seen.test(w)) {
          seen.set(w);
          comp.push_back(w);
        }
    comps.push_back(std::move(comp));
  }
  if (comps.size() != 2) return false;
  for (const auto& comp : comps) {
    if (static_cast<int>(comp.size()) != k) return false;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!h.has_edge(comp[i], comp[j])) return false;
  }
  return true;
}

}  // namespace cyclepack
