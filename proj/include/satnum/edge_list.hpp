#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "satnum/graph.hpp"

namespace satnum {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n m
//   u v        (m lines, 0-based ids)
//
// Blank lines and trailing whitespace are ignored on read. The writer emits
// the header followed by the edges in sorted order, one per line, with '\n'
// line endings and no comments.

Graph parse_edge_list(std::string_view text,
                      std::size_t max_vertices = kDefaultMaxVertices);
Graph read_edge_list(const std::filesystem::path& path,
                     std::size_t max_vertices = kDefaultMaxVertices);

std::string format_edge_list(const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace satnum
