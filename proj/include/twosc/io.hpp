#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twosc/graph.hpp"

namespace twosc {

/// graph6 encoding: size header, then the upper triangle in column order
/// packed 6 bits per printable character (63..126), big-endian.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" prefix is accepted.
/// Throws ParseError (line 1, offset of the bad byte) on malformed input.
Graph from_graph6(std::string_view record);

/// Reads newline-separated graph6 records; blank lines are skipped.
/// ParseError carries the 1-based line number of the bad record.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Plain edge list: first line `n`, then one `u v` pair per line, 0-indexed.
/// Text after `#` is ignored.
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

/// Undirected DOT. `labels` optionally renames vertices at the output boundary.
std::string to_dot(const Graph& g, const std::map<int, std::string>& labels = {},
                   std::string_view name = "G");

/// Reads every graph from `in`, which holds either graph6 records or a single
/// edge list (detected by a leading integer).
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace twosc
