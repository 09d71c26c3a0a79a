#include "cyclepack/exchange.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

namespace cyclepack {

static Bitset packing_vertices(const Graph& g, const TrianglePacking& p) {
  Bitset b(g.n());
  for (const auto& t : p.triangles)
    for (int v : t) b.set(v);
  return b;
}

static int fan_count(const Graph& g, int v, const std::array<int, 3>& t) {
  int c = 0;
  for (int u : t) c += g.has_edge(v, u) ? 1 : 0;
  return c;
}

static std::array<int, 3> sorted_triangle(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

static void canonicalize(TrianglePacking& p) {
  for (auto& t : p.triangles) std::sort(t.begin(), t.end());
  std::sort(p.triangles.begin(), p.triangles.end());
}

void validate_triangle_packing(const Graph& g, const TrianglePacking& p) {
  Bitset used(g.n());
  for (const auto& t : p.triangles) {
    for (int v : t) {
      if (v < 0 || v >= g.n())
        throw precondition_error("triangle packing: vertex out of range");
      if (used.test(v)) throw precondition_error("triangle packing: triangles overlap");
      used.set(v);
    }
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2]))
      throw precondition_error("triangle packing: vertex triple does not induce a triangle");
  }
}

TriangleDigraph build_aux_digraph(const Graph& g, const TrianglePacking& p) {
  validate_triangle_packing(g, p);
  int nt = static_cast<int>(p.triangles.size());
  TriangleDigraph d;
  d.out.resize(nt);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nt; ++j) {
      if (i == j) continue;  // a triangle vertex has only 2 in-triangle neighbors
      int witness = -1;
      for (int v : sorted_triangle(p.triangles[i])) {
        if (fan_count(g, v, p.triangles[j]) == 3) {
          witness = v;
          break;
        }
      }
      if (witness != -1) d.out[i].push_back({j, witness});
    }
  }
  return d;
}

static int triangle_index(const TrianglePacking& p, const std::array<int, 3>& t) {
  auto key = sorted_triangle(t);
  for (std::size_t i = 0; i < p.triangles.size(); ++i)
    if (sorted_triangle(p.triangles[i]) == key) return static_cast<int>(i);
  return -1;
}

std::vector<int> b_set(const Graph& g, const TrianglePacking& p,
                       const std::array<int, 3>& t0) {
  validate_triangle_packing(g, p);
  int idx = triangle_index(p, t0);
  if (idx < 0) throw precondition_error("b_set: t0 is not a member of the packing");
  Bitset in_packing = packing_vertices(g, p);
  std::vector<int> b;
  for (int v = 0; v < g.n(); ++v)
    if (!in_packing.test(v) && fan_count(g, v, p.triangles[idx]) == 3) b.push_back(v);
  return b;
}

/// Reverse-reachability to `target`, breadth-first, target first.
static std::vector<int> reaching_set(const TriangleDigraph& d, int target) {
  int nt = d.node_count();
  std::vector<std::vector<int>> rev(nt);
  for (int i = 0; i < nt; ++i)
    for (const auto& a : d.out[i]) rev[a.to].push_back(i);
  std::vector<char> seen(nt, 0);
  std::vector<int> order;
  std::deque<int> q{target};
  seen[target] = 1;
  while (!q.empty()) {
    int t = q.front();
    q.pop_front();
    order.push_back(t);
    for (int s : rev[t])
      if (!seen[s]) {
        seen[s] = 1;
        q.push_back(s);
      }
  }
  return order;
}

/// Breadth-first path from -> to in d, following arcs in stored order.
static DigraphPath bfs_path(const TriangleDigraph& d, int from, int to) {
  int nt = d.node_count();
  std::vector<int> parent(nt, -1), parent_witness(nt, -1);
  std::vector<char> seen(nt, 0);
  std::deque<int> q{from};
  seen[from] = 1;
  while (!q.empty()) {
    int t = q.front();
    q.pop_front();
    if (t == to) break;
    for (const auto& a : d.out[t])
      if (!seen[a.to]) {
        seen[a.to] = 1;
        parent[a.to] = t;
        parent_witness[a.to] = a.witness;
        q.push_back(a.to);
      }
  }
  assert(seen[to]);
  std::vector<int> rtrail{to};
  std::vector<int> rwit;
  int cur = to;
  while (cur != from) {
    rwit.push_back(parent_witness[cur]);
    cur = parent[cur];
    rtrail.push_back(cur);
  }
  DigraphPath path;
  path.trail.assign(rtrail.rbegin(), rtrail.rend());
  path.witnesses.assign(rwit.rbegin(), rwit.rend());
  return path;
}

TrianglePacking rotate_along_path(const Graph& g, const TrianglePacking& p,
                                  const DigraphPath& path, int v) {
  validate_triangle_packing(g, p);
  int nt = static_cast<int>(p.triangles.size());
  int len = static_cast<int>(path.trail.size());
  if (len < 2) throw precondition_error("rotate: path must contain at least one hop");
  if (static_cast<int>(path.witnesses.size()) != len - 1)
    throw precondition_error("rotate: each hop of the path must carry its witness");
  std::vector<char> on_path(nt, 0);
  for (int t : path.trail) {
    if (t < 0 || t >= nt || on_path[t])
      throw precondition_error("rotate: path triangles must be distinct packing members");
    on_path[t] = 1;
  }
  for (int i = 0; i + 1 < len; ++i) {
    int w = path.witnesses[i];
    const auto& tri = p.triangles[path.trail[i]];
    if (std::find(tri.begin(), tri.end(), w) == tri.end())
      throw precondition_error("rotate: witness v_i must lie in its triangle");
    if (fan_count(g, w, p.triangles[path.trail[i + 1]]) != 3)
      throw precondition_error("rotate: witness must be fully joined to the next triangle");
  }
  if (v < 0 || v >= g.n() || packing_vertices(g, p).test(v))
    throw precondition_error("rotate: v must lie outside the packing");
  const auto& t0 = p.triangles[path.trail.back()];
  if (fan_count(g, v, t0) == 3)
    throw precondition_error("rotate: v must not already lie in B (fully joined to T0)");
  if (fan_count(g, v, p.triangles[path.trail.front()]) != 3)
    throw precondition_error("rotate: v must be fully joined to the path's first triangle");

  auto swap_into = [](const std::array<int, 3>& tri, int out, int in) {
    std::array<int, 3> r = tri;
    *std::find(r.begin(), r.end(), out) = in;
    std::sort(r.begin(), r.end());
    return r;
  };

  TrianglePacking result = p;
  result.triangles[path.trail[0]] = swap_into(p.triangles[path.trail[0]], path.witnesses[0], v);
  for (int i = 1; i + 1 < len; ++i)
    result.triangles[path.trail[i]] =
        swap_into(p.triangles[path.trail[i]], path.witnesses[i], path.witnesses[i - 1]);
  canonicalize(result);

  // Lemma postconditions hold unconditionally; keep them as hard checks.
  validate_triangle_packing(g, result);
  assert(result.triangles.size() == p.triangles.size());
  assert(triangle_index(result, t0) >= 0);
  int last_witness = path.witnesses[len - 2];
  Bitset before = packing_vertices(g, p), after = packing_vertices(g, result);
  before.set(v);
  before.reset(last_witness);
  assert(before == after);
  auto b_before = b_set(g, p, t0), b_after = b_set(g, result, t0);
  b_before.push_back(last_witness);
  std::sort(b_before.begin(), b_before.end());
  assert(b_before == b_after);
  (void)last_witness;
  return result;
}

TrianglePacking max_packing_through(const Graph& g, int x, const SolveLimits& limits) {
  if (x < 0 || x >= g.n())
    throw precondition_error("max_packing_through: x out of range");
  std::vector<std::array<int, 3>> own;
  for (const auto& t : all_triangles(g))
    if (t[0] == x || t[1] == x || t[2] == x) own.push_back(t);
  if (own.empty())
    throw precondition_error("max_packing_through: x lies in no triangle");

  TrianglePacking best;
  for (const auto& t : own) {
    auto [rest, vm] = delete_vertices(g, {t[0], t[1], t[2]});
    TrianglePacking sub = max_triangle_packing(rest, limits);
    if (sub.triangles.size() + 1 > best.triangles.size()) {
      best.triangles.clear();
      best.triangles.push_back(t);
      for (const auto& st : sub.triangles)
        best.triangles.push_back(
            sorted_triangle({vm.primary[st[0]], vm.primary[st[1]], vm.primary[st[2]]}));
    }
  }
  canonicalize(best);
  return best;
}

std::optional<RotationOpportunity> find_rotation(const Graph& g, const TrianglePacking& p,
                                                 int t0) {
  TriangleDigraph d = build_aux_digraph(g, p);
  std::vector<int> reach = reaching_set(d, t0);
  Bitset in_packing = packing_vertices(g, p);
  std::vector<int> b = b_set(g, p, p.triangles[t0]);
  Bitset excluded = in_packing;
  for (int v : b) excluded.set(v);

  for (int v = 0; v < g.n(); ++v) {
    if (excluded.test(v)) continue;
    for (int t : reach) {
      if (fan_count(g, v, p.triangles[t]) == 3) {
        // t != t0 is automatic: full adjacency to T0 would have put v in B
        return RotationOpportunity{v, bfs_path(d, t, t0)};
      }
    }
  }
  return std::nullopt;
}

std::pair<TriangleDigraph, std::vector<int>> star_reach(const Graph& g,
                                                        const ExchangeState& s) {
  int nt = static_cast<int>(s.packing.triangles.size());
  std::vector<std::vector<int>> node_vertices(nt);
  for (int i = 0; i < nt; ++i) {
    if (i == s.t0)
      node_vertices[i] = s.tstar;
    else
      node_vertices[i].assign(s.packing.triangles[i].begin(), s.packing.triangles[i].end());
  }
  auto fan_at_least_3 = [&](int v, const std::vector<int>& target) {
    int c = 0;
    for (int u : target) c += g.has_edge(v, u) ? 1 : 0;
    return c >= 3;
  };
  TriangleDigraph d;
  d.out.resize(nt);
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nt; ++j) {
      if (i == j) continue;
      int witness = -1;
      for (int v : node_vertices[i])
        if (fan_at_least_3(v, node_vertices[j])) {
          witness = v;
          break;
        }
      if (witness != -1) d.out[i].push_back({j, witness});
    }
  return {d, reaching_set(d, s.t0)};
}

static ExchangeState make_state(const Graph& g, TrianglePacking p, int x) {
  ExchangeState s;
  s.host = g;
  s.packing = std::move(p);
  s.x = x;
  s.t0 = -1;
  for (std::size_t i = 0; i < s.packing.triangles.size(); ++i) {
    const auto& t = s.packing.triangles[i];
    if (t[0] == x || t[1] == x || t[2] == x) s.t0 = static_cast<int>(i);
  }
  assert(s.t0 >= 0);
  s.d = build_aux_digraph(g, s.packing);
  s.reach = reaching_set(s.d, s.t0);
  s.b = b_set(g, s.packing, s.packing.triangles[s.t0]);
  s.tstar.assign(s.packing.triangles[s.t0].begin(), s.packing.triangles[s.t0].end());
  for (int v : s.b) s.tstar.push_back(v);
  std::sort(s.tstar.begin(), s.tstar.end());
  auto [dstar, rstar] = star_reach(g, s);
  s.dstar = std::move(dstar);
  s.star_reach_set = std::move(rstar);
  return s;
}

std::optional<ExchangeState> grow_packing_with_vertex(const Graph& g, int x,
                                                      const SolveLimits& limits) {
  if (x < 0 || x >= g.n())
    throw precondition_error("grow_packing_with_vertex: x out of range");
  bool in_triangle = false;
  for (int u : g.neighbors(x)) {
    if (g.neighbors(x).intersects(g.neighbors(u))) {
      in_triangle = true;
      break;
    }
  }
  if (!in_triangle) return std::nullopt;

  TrianglePacking p = max_packing_through(g, x, limits);
  int t0 = -1;
  for (std::size_t i = 0; i < p.triangles.size(); ++i) {
    const auto& t = p.triangles[i];
    if (t[0] == x || t[1] == x || t[2] == x) t0 = static_cast<int>(i);
  }
  // Each rotation grows |B| by one, so this terminates within n steps.
  std::size_t b_size = b_set(g, p, p.triangles[t0]).size();
  while (auto opp = find_rotation(g, p, t0)) {
    p = rotate_along_path(g, p, opp->path, opp->v);
    t0 = -1;
    for (std::size_t i = 0; i < p.triangles.size(); ++i) {
      const auto& t = p.triangles[i];
      if (t[0] == x || t[1] == x || t[2] == x) t0 = static_cast<int>(i);
    }
    std::size_t nb = b_set(g, p, p.triangles[t0]).size();
    assert(nb == b_size + 1);
    b_size = nb;
  }
  return make_state(g, std::move(p), x);
}

ExchangeState reroot_t0(const Graph& g, const ExchangeState& s, int u) {
  if (std::find(s.b.begin(), s.b.end(), u) == s.b.end())
    throw precondition_error("reroot_t0: u must be a member of B");
  const auto& t0 = s.packing.triangles[s.t0];
  int y = -1, z = -1;
  for (int v : t0)
    if (v != s.x) {
      if (y == -1)
        y = v;
      else
        z = v;
    }
  (void)z;
  TrianglePacking p = s.packing;
  std::array<int, 3> nt{s.x, y, u};
  std::sort(nt.begin(), nt.end());
  p.triangles[s.t0] = nt;
  canonicalize(p);
  return make_state(g, std::move(p), s.x);
}

}  // namespace cyclepack
