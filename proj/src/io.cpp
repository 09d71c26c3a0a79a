#include "cyclepack/io.hpp"

#include <sstream>
#include <string>

namespace cyclepack {

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw input_error("graph6: empty line at byte 0");
  unsigned first = static_cast<unsigned char>(line[0]);
  if (first < 63 || first > 126)
    throw input_error("graph6: invalid header byte at byte 0");
  if (first == 126)
    throw input_error("graph6: long form (n > 62) not supported at byte 0");
  int n = static_cast<int>(first) - 63;

  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(line.size()) != 1 + nbytes)
    throw input_error("graph6: expected " + std::to_string(1 + nbytes) +
                      " bytes for n=" + std::to_string(n) + ", got " +
                      std::to_string(line.size()) + " at byte " +
                      std::to_string(std::min<std::size_t>(line.size(), 1 + nbytes)));

  GraphBuilder b(n);
  int bit = 0;
  int i = 0, j = 1;  // column-major upper triangle: x(0,1), x(0,2), x(1,2), ...
  for (int byte = 0; byte < nbytes; ++byte) {
    unsigned c = static_cast<unsigned char>(line[1 + byte]);
    if (c < 63 || c > 126)
      throw input_error("graph6: invalid data byte at byte " + std::to_string(1 + byte));
    unsigned val = c - 63;
    for (int s = 5; s >= 0; --s, ++bit) {
      bool on = (val >> s) & 1;
      if (bit < nbits) {
        if (on) b.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (on) {
        throw input_error("graph6: nonzero padding at byte " + std::to_string(1 + byte));
      }
    }
  }
  return b.build();
}

std::string write_graph6(const Graph& g) {
  int n = g.n();
  if (n > 62) throw input_error("graph6: short form requires n <= 62");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw input_error("edge list: expected \"n m\" header on line " +
                          std::to_string(lineno));
    } else {
      long u, v;
      if (!(ls >> u >> v))
        throw input_error("edge list: expected \"u v\" on line " + std::to_string(lineno));
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw input_error("edge list: vertex id out of range on line " +
                          std::to_string(lineno));
      if (u == v)
        throw input_error("edge list: loop edge on line " + std::to_string(lineno));
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#')
      throw input_error("edge list: trailing tokens on line " + std::to_string(lineno));
  }
  if (n < 0) throw input_error("edge list: missing \"n m\" header");
  if (static_cast<long>(edges.size()) != m)
    throw input_error("edge list: header promises " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  return build_graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m() << "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) out << u << " " << v << "\n";
  return out.str();
}

CyclePacking parse_certificate(const std::string& text) {
  CyclePacking p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<int> cyc;
    long v;
    while (ls >> v) {
      if (v < 0) throw input_error("certificate: negative id on line " + std::to_string(lineno));
      cyc.push_back(static_cast<int>(v));
    }
    if (!ls.eof())
      throw input_error("certificate: malformed token on line " + std::to_string(lineno));
    if (!cyc.empty()) p.cycles.push_back(std::move(cyc));
  }
  return p;
}

std::string write_certificate(const CyclePacking& p) {
  std::ostringstream out;
  for (const auto& cyc : p.cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cyc[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace cyclepack
