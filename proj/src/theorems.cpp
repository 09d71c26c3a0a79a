#include "cyclepack/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include "cyclepack/io.hpp"

namespace cyclepack {

static int pair_count(int n) { return n * (n - 1) / 2; }

static bool has_k_cycles(const Graph& g, int k, const SolveLimits& limits) {
  return find_disjoint_cycles(g, k, limits).has_value();
}

static int t_of(const Graph& g, const SolveLimits& limits) {
  return static_cast<int>(max_triangle_packing(g, limits).triangles.size());
}

/// g isomorphic to SK_5: one degree-2 vertex whose neighbors are the unique
/// non-adjacent pair among five degree-4 vertices.
static bool is_sk5_shape(const Graph& g) {
  if (g.n() != 6 || g.m() != 11) return false;
  int u = -1;
  for (int v = 0; v < 6; ++v) {
    if (g.degree(v) == 2) {
      if (u != -1) return false;
      u = v;
    } else if (g.degree(v) != 4) {
      return false;
    }
  }
  if (u == -1) return false;
  int a = g.neighbors(u).first();
  int b = g.neighbors(u).next(a);
  if (g.has_edge(a, b)) return false;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      if (i == u || j == u) continue;
      if ((i == a && j == b) || (i == b && j == a)) continue;
      if (!g.has_edge(i, j)) return false;
    }
  return true;
}

static bool l33_hypothesis(const Graph& g, const SolveLimits& limits) {
  (void)limits;
  auto dc = degree_classes(g, 2);
  Bitset inH(g.n()), inL(g.n());
  for (int v : dc.H) inH.set(v);
  for (int v : dc.L) inL.set(v);
  for (const auto& x : all_triangles(g)) {
    Bitset xs(g.n());
    for (int v : x) xs.set(v);
    bool fan_ok = true;
    for (int v = 0; v < g.n() && fan_ok; ++v) {
      if (xs.test(v)) continue;
      if (g.neighbors(v).count_and(xs) > 2) fan_ok = false;
    }
    if (!fan_ok) continue;
    int h_out = dc.h() - inH.count_and(xs);
    int l_out = dc.ell() - inL.count_and(xs);
    if (h_out - l_out >= 2) return true;
  }
  return false;
}

const std::vector<TheoremPredicate>& theorem_registry() {
  static const std::vector<TheoremPredicate> reg = [] {
    std::vector<TheoremPredicate> v;
    auto concl_cycles = [](const Graph& g, int k, const SolveLimits& lim) {
      return has_k_cycles(g, k, lim);
    };

    v.push_back({"ch", 1, 0,
                 [](const Graph& g, int k, const SolveLimits&) {
                   return g.n() >= 3 * k && g.n() > 0 && g.min_degree() >= 2 * k;
                 },
                 concl_cycles});

    v.push_back({"de", 3, 0,
                 [](const Graph& g, int k, const SolveLimits&) {
                   auto dc = degree_classes(g, k);
                   return dc.h() - dc.ell() >= k * k + 2 * k - 4;
                 },
                 concl_cycles});

    v.push_back({"main", 2, 0,
                 [](const Graph& g, int k, const SolveLimits& lim) {
                   if (g.n() < 3 * k) return false;
                   auto dc = degree_classes(g, k);
                   if (dc.h() - dc.ell() < 2 * k) return false;  // cheap cutoff
                   return dc.h() - dc.ell() >= 2 * k + t_of(g, lim);
                 },
                 concl_cycles});

    v.push_back({"cor-t1", 2, 0,
                 [](const Graph& g, int k, const SolveLimits& lim) {
                   auto dc = degree_classes(g, k);
                   if (dc.h() - dc.ell() < 2 * k + 1) return false;
                   return dc.h() - dc.ell() >= 2 * k + t_of(g, lim) + 1;
                 },
                 concl_cycles});

    v.push_back({"cor-3k", 2, 0,
                 [](const Graph& g, int k, const SolveLimits&) {
                   auto dc = degree_classes(g, k);
                   return dc.h() - dc.ell() >= 3 * k;
                 },
                 concl_cycles});

    v.push_back({"planar", 2, 0,
                 [](const Graph& g, int k, const SolveLimits&) {
                   auto dc = degree_classes(g, k);
                   return dc.h() - dc.ell() >= 2 * k && is_planar(g);
                 },
                 concl_cycles});

    v.push_back({"one-tri", 3, 0,
                 [](const Graph& g, int k, const SolveLimits&) {
                   auto dc = degree_classes(g, k);
                   if (dc.h() - dc.ell() < 2 * k) return false;
                   return !has_two_disjoint_triangles(g);
                 },
                 concl_cycles});

    v.push_back({"kky", 2, 0,
                 [](const Graph& g, int k, const SolveLimits& lim) {
                   return g.n() >= 3 * k && g.n() > 0 && g.min_degree() >= 2 * k - 1 &&
                          !has_k_cycles(g, k, lim);
                 },
                 [](const Graph& g, int k, const SolveLimits& lim) {
                   if (independence_number(g, lim).alpha >= g.n() - 2 * k + 1) return true;
                   if (k % 2 == 1 && is_kky_exception(g, k)) return true;
                   return k == 2 && is_wheel(g);
                 }});

    v.push_back({"cor-kky", 2, 0,
                 [](const Graph& g, int k, const SolveLimits&) {
                   auto dc = degree_classes(g, k);
                   return g.n() >= 3 * k && g.n() > 0 && dc.h() >= 2 * k &&
                          g.min_degree() >= 2 * k - 1;
                 },
                 concl_cycles});

    v.push_back({"l31", 2, 2,
                 [](const Graph& g, int, const SolveLimits&) {
                   auto dc = degree_classes(g, 2);
                   return dc.h() >= dc.ell() + 4 && is_triangle_free(g);
                 },
                 concl_cycles});

    v.push_back({"l32", 2, 2,
                 [](const Graph& g, int, const SolveLimits&) {
                   auto dc = degree_classes(g, 2);
                   if (dc.h() - dc.ell() < 4) return false;
                   auto [core, vm] = two_core(g);
                   (void)vm;
                   return core.n() >= 6 && !is_sk5_shape(core);
                 },
                 concl_cycles});

    v.push_back({"l33", 2, 2,
                 [](const Graph& g, int, const SolveLimits& lim) {
                   return l33_hypothesis(g, lim);
                 },
                 concl_cycles});

    v.push_back({"tf-lemma", 1, 0,
                 [](const Graph& g, int k, const SolveLimits&) {
                   if (g.n() == 0) return false;
                   auto [hi, lo] = threshold_classes(g, 2 * k + 1, 2 * k - 1);
                   return static_cast<int>(hi.size()) - static_cast<int>(lo.size()) >=
                              2 * k - 2 &&
                          is_triangle_free(g);
                 },
                 concl_cycles});
    return v;
  }();
  return reg;
}

const TheoremPredicate* find_theorem(std::string_view name) {
  for (const auto& p : theorem_registry())
    if (p.name == name) return &p;
  return nullptr;
}

const std::vector<OpenQuestion>& open_question_registry() {
  static const std::vector<OpenQuestion> reg = [] {
    std::vector<OpenQuestion> v;
    v.push_back({"remark1", 2, [](const Graph& g, int k, const SolveLimits&) {
                   if (g.n() < 4 * k + 1) return false;
                   auto dc = degree_classes(g, k);
                   return dc.h() - dc.ell() >= 2 * k;
                 }});
    v.push_back({"remark2", 1, [](const Graph& g, int k, const SolveLimits&) {
                   if (g.n() == 0) return false;
                   auto [hi, lo] = threshold_classes(g, 2 * k + 1, 2 * k - 1);
                   return static_cast<int>(hi.size()) - static_cast<int>(lo.size()) >=
                          2 * k - 2;
                 }});
    return v;
  }();
  return reg;
}

const OpenQuestion* find_open_question(std::string_view name) {
  for (const auto& q : open_question_registry())
    if (q.name == name) return &q;
  return nullptr;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["predicate"] = r.predicate;
  j["k"] = r.k;
  j["scanned"] = r.scanned;
  j["hits"] = r.hits;
  j["violations"] = r.violations;
  j["parse_errors"] = r.parse_errors;
  j["wall_ms"] = r.wall_ms;
  return j;
}

EnumerateStream::EnumerateStream(int n) : n_(n) {
  if (n < 0 || n > 7)
    throw input_error(
        "enumerate: built-in labeled enumeration is capped at n = 7; pipe graph6 "
        "from an external generator for larger scans");
  total_ = 1ull << pair_count(n);
}

bool EnumerateStream::next(IndexedGraph& out) {
  if (mask_ >= total_) return false;
  GraphBuilder b(n_);
  int bit = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask_ >> bit) & 1) b.add_edge(i, j);
  out.index = static_cast<long long>(mask_);
  out.g = b.build();
  ++mask_;
  return true;
}

G6Stream::G6Stream(std::istream& in, bool strict) : in_(in), strict_(strict) {}

bool G6Stream::next(IndexedGraph& out) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.g = parse_graph6(line);
      out.index = index_++;
      return true;
    } catch (const input_error& e) {
      std::string msg = "line " + std::to_string(line_no_) + ": " + e.what();
      if (strict_) throw input_error(msg);
      ++errors_;
      if (messages_.size() < 100) messages_.push_back(msg);
    }
  }
  return false;
}

bool VectorStream::next(IndexedGraph& out) {
  if (pos_ >= graphs_.size()) return false;
  out.index = static_cast<long long>(pos_);
  out.g = graphs_[pos_++];
  return true;
}

namespace {

struct Verdict {
  long long index;
  bool hit;
  bool violation;
  std::string g6;  // only filled for violations
};

using EvalFn = std::function<Verdict(const IndexedGraph&)>;

Report run_scan(const std::string& name, int k, GraphStream& stream, const EvalFn& eval,
                const RunOptions& opts) {
  auto t_start = std::chrono::steady_clock::now();
  Report r;
  r.predicate = name;
  r.k = k;
  std::vector<std::pair<long long, std::string>> violations;

  if (opts.jobs <= 1) {
    IndexedGraph item;
    while (stream.next(item)) {
      ++r.scanned;
      Verdict v = eval(item);
      if (v.hit) ++r.hits;
      if (v.violation) violations.push_back({v.index, v.g6});
    }
  } else {
    // one reader feeds a bounded queue of batches; workers are pure
    constexpr std::size_t kBatch = 256;
    const std::size_t cap = static_cast<std::size_t>(opts.jobs) * 4;
    std::deque<std::vector<IndexedGraph>> queue;
    std::mutex mu;
    std::condition_variable cv_put, cv_get;
    bool done = false;

    struct Local {
      long long scanned = 0, hits = 0;
      std::vector<std::pair<long long, std::string>> violations;
    };
    std::vector<Local> locals(static_cast<std::size_t>(opts.jobs));

    std::vector<std::thread> workers;
    for (int w = 0; w < opts.jobs; ++w) {
      workers.emplace_back([&, w] {
        Local& local = locals[static_cast<std::size_t>(w)];
        for (;;) {
          std::vector<IndexedGraph> batch;
          {
            std::unique_lock<std::mutex> lock(mu);
            cv_get.wait(lock, [&] { return !queue.empty() || done; });
            if (queue.empty()) return;
            batch = std::move(queue.front());
            queue.pop_front();
          }
          cv_put.notify_one();
          for (const auto& item : batch) {
            ++local.scanned;
            Verdict v = eval(item);
            if (v.hit) ++local.hits;
            if (v.violation) local.violations.push_back({v.index, v.g6});
          }
        }
      });
    }

    {
      std::vector<IndexedGraph> batch;
      batch.reserve(kBatch);
      IndexedGraph item;
      while (stream.next(item)) {
        batch.push_back(std::move(item));
        if (batch.size() == kBatch) {
          std::unique_lock<std::mutex> lock(mu);
          cv_put.wait(lock, [&] { return queue.size() < cap; });
          queue.push_back(std::move(batch));
          lock.unlock();
          cv_get.notify_one();
          batch.clear();
          batch.reserve(kBatch);
        }
      }
      if (!batch.empty()) {
        std::unique_lock<std::mutex> lock(mu);
        queue.push_back(std::move(batch));
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        done = true;
      }
      cv_get.notify_all();
    }
    for (auto& w : workers) w.join();
    for (const auto& local : locals) {
      r.scanned += local.scanned;
      r.hits += local.hits;
      violations.insert(violations.end(), local.violations.begin(), local.violations.end());
    }
  }

  std::sort(violations.begin(), violations.end());
  for (auto& [idx, g6] : violations) r.violations.push_back(std::move(g6));
  r.parse_errors = stream.parse_errors();
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                        t_start)
                  .count();
  return r;
}

}  // namespace

Report check_theorem(const TheoremPredicate& p, int k, GraphStream& stream,
                     const RunOptions& opts) {
  if (k < 1) throw input_error("check_theorem: k must be at least 1");
  if (p.fixed_k && k != p.fixed_k)
    throw input_error("predicate " + p.name + " is a k=" + std::to_string(p.fixed_k) +
                      " statement");
  EvalFn eval = [&p, k, &opts](const IndexedGraph& item) -> Verdict {
    Verdict v{item.index, false, false, {}};
    if (p.hypothesis(item.g, k, opts.limits)) {
      v.hit = true;
      if (!p.conclusion(item.g, k, opts.limits)) {
        v.violation = true;
        v.g6 = write_graph6(item.g);
      }
    }
    return v;
  };
  return run_scan(p.name, k, stream, eval, opts);
}

Report search_open(const OpenQuestion& q, int k, GraphStream& stream,
                   const RunOptions& opts) {
  if (k < q.min_k)
    throw input_error("open question " + q.name + " requires k >= " +
                      std::to_string(q.min_k));
  EvalFn eval = [&q, k, &opts](const IndexedGraph& item) -> Verdict {
    Verdict v{item.index, false, false, {}};
    if (q.hypothesis_fn(item.g, k, opts.limits)) {
      v.hit = true;
      if (!find_disjoint_cycles(item.g, k, opts.limits)) {
        v.violation = true;  // a flag: research finding, not an error
        v.g6 = write_graph6(item.g);
      }
    }
    return v;
  };
  return run_scan(q.name, k, stream, eval, opts);
}

}  // namespace cyclepack
