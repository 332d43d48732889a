#pragma once

#include <filesystem>
#include <iosfwd>

#include "lrw/graph.hpp"

namespace lrw {

// Edge-list format:
//
//   N <n>
//   cases <k>
//   <i> <j>        one line per edge, 0-based ids, i < j, sorted
//
// The first k nodes carry y = 1, the rest y = 0. Blank lines and lines
// starting with '#' are ignored on input. write(read(f)) reproduces a file
// written by write() byte for byte.

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

/// Throws ConfigError when the node values are not a 0/1 case prefix.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Number of leading y = 1 nodes, or throws if values are not of that shape.
std::size_t case_prefix_length(const Graph& g);

}  // namespace lrw
