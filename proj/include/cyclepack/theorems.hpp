#ifndef CYCLEPACK_THEOREMS_HPP
#define CYCLEPACK_THEOREMS_HPP

#include <functional>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclepack/solvers.hpp"

namespace cyclepack {

/// A checkable statement: hypothesis(g,k) -> conclusion(g,k). Hypotheses
/// embed their statement's own k-bound (min_k), so a scan below it is
/// vacuous rather than an error; l31/l32/l33 are k=2 statements and reject
/// other k outright (fixed_k).
struct TheoremPredicate {
  std::string name;
  int min_k = 1;
  int fixed_k = 0;  // 0 = any k >= min_k
  std::function<bool(const Graph&, int, const SolveLimits&)> hypothesis_fn;
  std::function<bool(const Graph&, int, const SolveLimits&)> conclusion_fn;

  bool hypothesis(const Graph& g, int k, const SolveLimits& limits = SolveLimits()) const {
    if (k < min_k) return false;
    return hypothesis_fn(g, k, limits);
  }
  bool conclusion(const Graph& g, int k, const SolveLimits& limits = SolveLimits()) const {
    return conclusion_fn(g, k, limits);
  }
};

const std::vector<TheoremPredicate>& theorem_registry();
const TheoremPredicate* find_theorem(std::string_view name);

/// Open-question scan: flag graphs meeting the hypothesis without k disjoint
/// cycles. A flag is a research finding (CLI exit 3), not a failure.
struct OpenQuestion {
  std::string name;
  int min_k = 1;
  std::function<bool(const Graph&, int, const SolveLimits&)> hypothesis_fn;
};

const std::vector<OpenQuestion>& open_question_registry();
const OpenQuestion* find_open_question(std::string_view name);

struct Report {
  std::string predicate;
  int k = 0;
  long long scanned = 0;
  long long hits = 0;
  long long parse_errors = 0;
  std::vector<std::string> violations;  // offending graphs in graph6, input order
  double wall_ms = 0;
};

/// schema 1; byte-identical for identical inputs modulo the wall_ms field.
nlohmann::ordered_json report_to_json(const Report& r);

struct IndexedGraph {
  long long index = 0;
  Graph g;
};

class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual bool next(IndexedGraph& out) = 0;
  virtual long long parse_errors() const { return 0; }
};

/// All 2^(n choose 2) labeled graphs on n vertices in edge-mask order (mask
/// bit t is the t-th pair in graph6 column order). Capped at n = 7; larger
/// scans should pipe graph6 from an external generator.
class EnumerateStream : public GraphStream {
 public:
  explicit EnumerateStream(int n);
  bool next(IndexedGraph& out) override;

 private:
  int n_;
  unsigned long long mask_ = 0, total_;
};

/// One graph6 line per graph. Parse errors are reported with line numbers
/// and either skipped (default) or fatal (strict).
class G6Stream : public GraphStream {
 public:
  explicit G6Stream(std::istream& in, bool strict = false);
  bool next(IndexedGraph& out) override;
  long long parse_errors() const override { return errors_; }
  const std::vector<std::string>& error_messages() const { return messages_; }

 private:
  std::istream& in_;
  bool strict_;
  long long line_no_ = 0, index_ = 0, errors_ = 0;
  std::vector<std::string> messages_;
};

class VectorStream : public GraphStream {
 public:
  explicit VectorStream(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  bool next(IndexedGraph& out) override;

 private:
  std::vector<Graph> graphs_;
  std::size_t pos_ = 0;
};

struct RunOptions {
  int jobs = 1;
  SolveLimits limits{};
};

/// Evaluate the predicate over the stream; violations are hypothesis hits
/// whose conclusion fails, listed in first-seen input order regardless of
/// the number of workers.
Report check_theorem(const TheoremPredicate& p, int k, GraphStream& stream,
                     const RunOptions& opts = RunOptions());

Report search_open(const OpenQuestion& q, int k, GraphStream& stream,
                   const RunOptions& opts = RunOptions());

}  // namespace cyclepack

#endif
