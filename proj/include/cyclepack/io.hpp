#ifndef CYCLEPACK_IO_HPP
#define CYCLEPACK_IO_HPP

#include <string>
#include <string_view>

#include "cyclepack/solvers.hpp"

namespace cyclepack {

/// graph6 short form, n <= 62, one graph per line. Malformed input raises
/// input_error carrying the byte offset.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Edge list: first content line "n m", then m lines "u v" (0-indexed);
/// '#' starts a comment line; trailing newline optional.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Certificate: one cycle per line, space-separated ids in cyclic order.
CyclePacking parse_certificate(const std::string& text);
std::string write_certificate(const CyclePacking& p);

}  // namespace cyclepack

#endif
