#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclepack/exchange.hpp"
#include "cyclepack/families.hpp"
#include "cyclepack/io.hpp"
#include "cyclepack/reduce.hpp"
#include "cyclepack/theorems.hpp"

using namespace cyclepack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;  // violations found / packing not found / invalid
constexpr int kExitInput = 2;
constexpr int kExitFlag = 3;  // open-question flag: a research finding

struct CommonOpts {
  std::string input = "-";
  std::string format = "g6";
  bool json = false;
  bool strict = false;
  int jobs = 1;
  int enumerate_n = -1;
};

void add_input_opts(CLI::App* cmd, CommonOpts& o, bool with_enumerate = false) {
  cmd->add_option("--input", o.input, "input path or - for stdin")->capture_default_str();
  cmd->add_option("--format", o.format, "input format")
      ->check(CLI::IsMember({"g6", "edges"}))
      ->capture_default_str();
  cmd->add_flag("--strict", o.strict, "treat stream parse errors as fatal");
  if (with_enumerate)
    cmd->add_option("--enumerate", o.enumerate_n,
                    "scan all labeled graphs on N <= 7 vertices instead of reading input");
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw input_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Graphs from --input per --format. Edge-list files hold a single graph.
std::vector<Graph> read_graphs(const CommonOpts& o) {
  if (o.format == "edges") return {parse_edge_list(slurp(o.input))};
  std::vector<Graph> graphs;
  std::istringstream in(slurp(o.input));
  G6Stream stream(in, o.strict);
  IndexedGraph item;
  while (stream.next(item)) graphs.push_back(std::move(item.g));
  for (const auto& msg : stream.error_messages()) std::cerr << "parse error: " << msg << "\n";
  return graphs;
}

std::unique_ptr<GraphStream> open_stream(const CommonOpts& o, std::istringstream& storage) {
  if (o.enumerate_n >= 0) return std::make_unique<EnumerateStream>(o.enumerate_n);
  if (o.format == "edges") {
    std::vector<Graph> one{parse_edge_list(slurp(o.input))};
    return std::make_unique<VectorStream>(std::move(one));
  }
  storage.str(slurp(o.input));
  return std::make_unique<G6Stream>(storage, o.strict);
}

void emit_graph(const Graph& g, const std::string& format) {
  if (format == "edges")
    std::cout << write_edge_list(g);
  else
    std::cout << write_graph6(g) << "\n";
}

int cmd_gen(const std::string& family, int m, int n, int k, const std::string& format) {
  Graph g;
  if (family == "sk")
    g = gen_sk(m);
  else if (family == "gnk")
    g = gen_gnk(n, k);
  else if (family == "de")
    g = gen_de_matching(n, k);
  else if (family == "kky")
    g = gen_kky_exception(k);
  else if (family == "wheel")
    g = gen_wheel(n);
  else if (family == "remark8")
    g = gen_remark8(k);
  else if (family == "complete")
    g = gen_complete(n);
  else if (family == "cycle")
    g = gen_cycle(n);
  else if (family == "path")
    g = gen_path(n);
  else
    throw input_error("unknown family: " + family);
  emit_graph(g, format);
  return kExitOk;
}

int cmd_analyze(const CommonOpts& o, int k) {
  for (const Graph& g : read_graphs(o)) {
    auto dc = degree_classes(g, k);
    int t = static_cast<int>(max_triangle_packing(g).triangles.size());
    bool planar = is_planar(g);
    if (o.json) {
      nlohmann::ordered_json j;
      j["n"] = g.n();
      j["m"] = g.m();
      j["delta"] = g.min_degree();
      j["h"] = dc.h();
      j["l"] = dc.ell();
      j["t"] = t;
      j["planar"] = planar;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "n=" << g.n() << " m=" << g.m() << " delta=" << g.min_degree()
                << " h=" << dc.h() << " l=" << dc.ell() << " t=" << t
                << " planar=" << (planar ? "true" : "false") << "\n";
    }
  }
  return kExitOk;
}

int cmd_find(const CommonOpts& o, int k, const std::string& mode, bool trace) {
  ReduceMode rm = mode == "aggressive" ? ReduceMode::Aggressive : ReduceMode::Exact;
  bool all_found = true;
  for (const Graph& g : read_graphs(o)) {
    auto [kernel, tr] = kernelize(g, k, rm);
    if (trace) {
      std::cerr << "kernel: n=" << kernel.n() << " m=" << kernel.m() << "\n";
      tr.dump(std::cerr);
    }
    std::optional<CyclePacking> found;
    if (kernel.n() >= 3 * k) {
      auto kp = find_disjoint_cycles(kernel, k);
      if (kp) found = lift(tr, *kp);
    }
    if (!found && rm == ReduceMode::Aggressive) found = find_disjoint_cycles(g, k);
    if (found)
      std::cout << write_certificate(*found);
    else {
      std::cout << "none\n";
      all_found = false;
    }
  }
  return all_found ? kExitOk : kExitNotFound;
}

int cmd_verify(const CommonOpts& o, int k, const std::string& cert_path) {
  auto graphs = read_graphs(o);
  if (graphs.size() != 1) throw input_error("verify expects exactly one input graph");
  CyclePacking p = parse_certificate(slurp(cert_path));
  int want = k > 0 ? k : static_cast<int>(p.cycles.size());
  bool ok = verify_cycle_packing(graphs[0], p, want);
  std::cout << (ok ? "ok" : "invalid") << "\n";
  return ok ? kExitOk : kExitNotFound;
}

int report_out(const Report& r, bool json, bool flag_semantics) {
  if (json) {
    std::cout << report_to_json(r).dump() << "\n";
  } else {
    std::cout << r.predicate << " k=" << r.k << " scanned=" << r.scanned
              << " hits=" << r.hits << (flag_semantics ? " flags=" : " violations=")
              << r.violations.size() << " parse_errors=" << r.parse_errors << " wall_ms="
              << static_cast<long long>(r.wall_ms) << "\n";
    for (const auto& g6 : r.violations)
      std::cout << (flag_semantics ? "flag: " : "violation: ") << g6 << "\n";
  }
  if (r.violations.empty()) return kExitOk;
  return flag_semantics ? kExitFlag : kExitNotFound;
}

int cmd_theorem(const CommonOpts& o, const std::string& name, int k) {
  const TheoremPredicate* p = find_theorem(name);
  if (!p) throw input_error("unknown theorem predicate: " + name);
  std::istringstream storage;
  auto stream = open_stream(o, storage);
  RunOptions opts;
  opts.jobs = o.jobs;
  Report r = check_theorem(*p, k, *stream, opts);
  if (auto* g6 = dynamic_cast<G6Stream*>(stream.get()))
    for (const auto& msg : g6->error_messages()) std::cerr << "parse error: " << msg << "\n";
  return report_out(r, o.json, false);
}

int cmd_search_open(const CommonOpts& o, const std::string& which, int k) {
  const OpenQuestion* q = find_open_question(which);
  if (!q) throw input_error("unknown open question: " + which);
  std::istringstream storage;
  auto stream = open_stream(o, storage);
  RunOptions opts;
  opts.jobs = o.jobs;
  Report r = search_open(*q, k, *stream, opts);
  if (auto* g6 = dynamic_cast<G6Stream*>(stream.get()))
    for (const auto& msg : g6->error_messages()) std::cerr << "parse error: " << msg << "\n";
  return report_out(r, o.json, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclepack: disjoint-cycle packing, degree-class analysis, and "
               "exhaustive theorem checking on small graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a named construction");
  std::string family, gen_format = "g6";
  int gen_m = 0, gen_n = 0, gen_k = 0;
  gen->add_option("--family", family, "sk|gnk|de|kky|wheel|remark8|complete|cycle|path")
      ->required();
  gen->add_option("--m", gen_m, "order parameter for sk");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--k", gen_k, "cycle parameter");
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"g6", "edges"}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "print n, m, delta, h, l, t, planar");
  CommonOpts ao;
  int ak = 2;
  analyze->add_option("--k", ak, "k for the degree classes")->capture_default_str();
  analyze->add_flag("--json", ao.json);
  add_input_opts(analyze, ao);

  // find
  auto* find = app.add_subcommand("find", "find k vertex-disjoint cycles");
  CommonOpts fo;
  int fk = 1;
  std::string fmode = "exact";
  bool ftrace = false;
  find->add_option("--k", fk)->required();
  find->add_option("--mode", fmode)->check(CLI::IsMember({"exact", "aggressive"}));
  find->add_flag("--trace", ftrace, "dump the reduction trace to stderr");
  add_input_opts(find, fo);

  // verify
  auto* verify = app.add_subcommand("verify", "verify a cycle-packing certificate");
  CommonOpts vo;
  int vk = 0;
  std::string cert = "-";
  verify->add_option("--k", vk, "required packing size (default: certificate size)");
  verify->add_option("--cert", cert, "certificate path or - for stdin")->required();
  add_input_opts(verify, vo);

  // theorem
  auto* theorem = app.add_subcommand("theorem", "scan a graph stream for violations");
  CommonOpts to;
  std::string tname;
  int tk = 2;
  theorem->add_option("--name", tname, "predicate name (ch, de, main, cor-t1, cor-3k, "
                                       "planar, one-tri, kky, cor-kky, l31, l32, l33, "
                                       "tf-lemma)")
      ->required();
  theorem->add_option("--k", tk)->required();
  theorem->add_option("--jobs", to.jobs, "worker threads")->capture_default_str();
  theorem->add_flag("--json", to.json);
  add_input_opts(theorem, to, true);

  // search-open
  auto* search = app.add_subcommand("search-open", "scan for open-question counterexamples");
  CommonOpts so;
  std::string which;
  int sk = 2;
  search->add_option("--which", which, "remark1|remark2")->required();
  search->add_option("--k", sk)->required();
  search->add_option("--jobs", so.jobs)->capture_default_str();
  search->add_flag("--json", so.json);
  add_input_opts(search, so, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, gen_m, gen_n, gen_k, gen_format);
    if (analyze->parsed()) return cmd_analyze(ao, ak);
    if (find->parsed()) return cmd_find(fo, fk, fmode, ftrace);
    if (verify->parsed()) return cmd_verify(vo, vk, cert);
    if (theorem->parsed()) return cmd_theorem(to, tname, tk);
    if (search->parsed()) return cmd_search_open(so, which, sk);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const too_large_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
