#include "cyclepack/reduce.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <string>

namespace cyclepack {

/// Apply one recorded step to `g` and return the post-step graph.
static Graph apply_step(const Graph& g, const ReductionStep& step) {
  switch (step.kind) {
    case ReductionStep::Kind::DeleteLowDegree:
      return delete_vertices(g, {step.a}).first;
    case ReductionStep::Kind::Suppress: {
      // delete x, insert edge yz (renumbered)
      auto [h, vm] = delete_vertices(g, {step.a});
      std::vector<int> to_new(g.n(), -1);
      for (int i = 0; i < vm.size(); ++i) to_new[vm.primary[i]] = i;
      GraphBuilder bld(h.n());
      for (int u = 0; u < h.n(); ++u)
        for (int v : h.neighbors(u))
          if (v > u) bld.add_edge(u, v);
      bld.add_edge(to_new[step.b], to_new[step.c]);
      return bld.build();
    }
    case ReductionStep::Kind::Contract:
      return contract(g, step.a, step.b).first;
  }
  return g;  // unreachable
}

Graph ReductionTrace::replay() const {
  Graph cur = original;
  for (const auto& step : steps) cur = apply_step(cur, step);
  return cur;
}

std::vector<std::vector<int>> ReductionTrace::kernel_to_original() const {
  // start with identity on the original, push through each step's map
  std::vector<std::vector<int>> cur(original.n());
  for (int v = 0; v < original.n(); ++v) cur[v] = {v};
  for (const auto& step : steps) {
    std::vector<std::vector<int>> next(step.map.size());
    for (int v = 0; v < step.map.size(); ++v) {
      next[v] = cur[step.map.primary[v]];
      if (step.map.secondary[v] != -1) {
        const auto& extra = cur[step.map.secondary[v]];
        next[v].insert(next[v].end(), extra.begin(), extra.end());
        std::sort(next[v].begin(), next[v].end());
      }
    }
    cur = std::move(next);
  }
  return cur;
}

void ReductionTrace::dump(std::ostream& os) const {
  for (const auto& step : steps) {
    switch (step.kind) {
      case ReductionStep::Kind::DeleteLowDegree:
        os << "delete v=" << step.a << "\n";
        break;
      case ReductionStep::Kind::Suppress:
        os << "suppress x=" << step.a << " y=" << step.b << " z=" << step.c
           << " (edge " << step.b << "-" << step.c << " inserted)\n";
        break;
      case ReductionStep::Kind::Contract:
        os << "contract x=" << step.a << " y=" << step.b << "\n";
        break;
    }
  }
}

std::pair<Graph, ReductionTrace> kernelize(const Graph& g, int k, ReduceMode mode) {
  if (k < 1) throw precondition_error("kernelize requires k >= 1");
  ReductionTrace trace;
  trace.original = g;
  Graph cur = g;

  for (;;) {
    bool applied = false;

    for (int v = 0; v < cur.n() && !applied; ++v) {
      if (cur.degree(v) <= 1) {
        auto [next, vm] = delete_vertices(cur, {v});
        trace.steps.push_back({ReductionStep::Kind::DeleteLowDegree, v, -1, -1, vm});
        cur = next;
        applied = true;
      }
    }
    if (applied) continue;

    for (int v = 0; v < cur.n() && !applied; ++v) {
      if (cur.degree(v) != 2) continue;
      int y = cur.neighbors(v).first();
      int z = cur.neighbors(v).next(y);
      if (cur.has_edge(y, z)) continue;
      ReductionStep step{ReductionStep::Kind::Suppress, v, y, z, {}};
      Graph next = apply_step(cur, step);
      auto vm = delete_vertices(cur, {v}).second;
      step.map = vm;
      trace.steps.push_back(step);
      cur = next;
      applied = true;
    }
    if (applied) continue;

    if (mode == ReduceMode::Aggressive) {
      auto dc = degree_classes(cur, k);
      for (int x : dc.L) {
        for (int y : cur.neighbors(x)) {
          if (cur.neighbors(x).intersects(cur.neighbors(y))) continue;  // xy in a triangle
          auto [next, vm] = contract(cur, x, y);
          trace.steps.push_back({ReductionStep::Kind::Contract, x, y, -1, vm});
          cur = next;
          applied = true;
          break;
        }
        if (applied) break;
      }
    }
    if (!applied) break;
  }
  return {cur, trace};
}

CyclePacking lift(const ReductionTrace& trace, const CyclePacking& p) {
  // rebuild the intermediate graphs so each undo can consult pre-step adjacency
  std::vector<Graph> seq{trace.original};
  for (const auto& step : trace.steps) seq.push_back(apply_step(seq.back(), step));

  if (!verify_cycle_packing(seq.back(), p, 0))
    throw precondition_error("lift: packing is not valid in the kernel");

  CyclePacking cur = p;
  for (int si = static_cast<int>(trace.steps.size()) - 1; si >= 0; --si) {
    const auto& step = trace.steps[si];
    const Graph& pre = seq[si];

    if (step.kind == ReductionStep::Kind::Contract) {
      int merged = -1;
      for (int v = 0; v < step.map.size(); ++v)
        if (step.map.is_contracted(v)) merged = v;
      assert(merged >= 0);
      int x = step.a, y = step.b;
      for (auto& cyc : cur.cycles) {
        auto it = std::find(cyc.begin(), cyc.end(), merged);
        std::vector<int> mapped;
        mapped.reserve(cyc.size() + 1);
        if (it == cyc.end()) {
          for (int v : cyc) mapped.push_back(step.map.primary[v]);
        } else {
          std::size_t pos = static_cast<std::size_t>(it - cyc.begin());
          std::size_t len = cyc.size();
          int a = step.map.primary[cyc[(pos + len - 1) % len]];
          int b = step.map.primary[cyc[(pos + 1) % len]];
          // route the cycle through x, y, or the edge xy
          std::vector<int> expansion;
          if (pre.has_edge(a, x) && pre.has_edge(b, x))
            expansion = {x};
          else if (pre.has_edge(a, y) && pre.has_edge(b, y))
            expansion = {y};
          else if (pre.has_edge(a, x) && pre.has_edge(b, y))
            expansion = {x, y};
          else
            expansion = {y, x};
          for (std::size_t i = 0; i < len; ++i) {
            int v = cyc[(pos + i) % len];
            if (v == merged)
              mapped.insert(mapped.end(), expansion.begin(), expansion.end());
            else
              mapped.push_back(step.map.primary[v]);
          }
        }
        cyc = std::move(mapped);
      }
    } else {
      for (auto& cyc : cur.cycles)
        for (auto& v : cyc) v = step.map.primary[v];
      if (step.kind == ReductionStep::Kind::Suppress) {
        int x = step.a, y = step.b, z = step.c;
        for (auto& cyc : cur.cycles) {
          std::size_t len = cyc.size();
          for (std::size_t i = 0; i < len; ++i) {
            int u = cyc[i], w = cyc[(i + 1) % len];
            if ((u == y && w == z) || (u == z && w == y)) {
              cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(i) + 1, x);
              break;  // disjointness: at most one cycle uses the inserted edge
            }
          }
        }
      }
    }
  }

  assert(verify_cycle_packing(trace.original, cur, static_cast<int>(cur.cycles.size())));
  return cur;
}

std::vector<Edge> hypothesis_edges(const Graph& g, int k) {
  auto exempt = [&](int v) {
    int d = g.degree(v);
    return d == 2 * k - 1 || d == 2 * k;
  };
  std::vector<Edge> out;
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u && !exempt(u) && !exempt(v)) out.push_back({u, v});
  return out;
}

std::optional<CyclePacking> find_with_reduction(const Graph& g, int k, ReduceMode mode,
                                                const SolveLimits& limits) {
  auto [kernel, trace] = kernelize(g, k, mode);
  if (kernel.n() >= 3 * k) {
    auto found = find_disjoint_cycles(kernel, k, limits);
    if (found) return lift(trace, *found);
  }
  if (mode == ReduceMode::Aggressive) return find_disjoint_cycles(g, k, limits);
  return std::nullopt;
}

}  // namespace cyclepack
