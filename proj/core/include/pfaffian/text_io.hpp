#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfaffian/graph.hpp"

// Line-oriented text formats. Files use 1-based vertex numbers; everything in
// memory is 0-based. Lines starting with '#' and blank lines are ignored.
//
//   graph:        bipartite <n_a> <n_b>      then   e <a> <b>
//   digraph:      digraph <n>                then   a <u> <v>
//   matrix:       one row per line, integers in {-1, 0, 1}
//   orientation:  e <a> <b> <dir>            dir is '>' (A to B) or '<' (B to A)
//
// All parsers throw ParseError.
namespace pfaffian::text {

BipartiteGraph parse_graph(std::istream &in);
Digraph parse_digraph(std::istream &in);
std::vector<std::vector<int>> parse_matrix(std::istream &in);
// Every edge of `graph` must appear exactly once.
Orientation parse_orientation(std::istream &in, const BipartiteGraph &graph);

void write_graph(std::ostream &out, const BipartiteGraph &graph);
void write_digraph(std::ostream &out, const Digraph &digraph);
template <typename Entries>
void write_matrix(std::ostream &out, const SquareMatrix<Entries> &m);
// Edges in sorted order, one per line.
void write_orientation(std::ostream &out, const BipartiteGraph &graph, const Orientation &orientation);
void write_dot(std::ostream &out, const BipartiteGraph &graph, const Orientation &orientation);

BipartiteGraph graph_from_string(const std::string &s);
Digraph digraph_from_string(const std::string &s);

}  // namespace pfaffian::text
