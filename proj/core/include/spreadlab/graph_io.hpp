// Copyright 2026 The spreadlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPREADLAB_GRAPH_IO_HPP_
#define SPREADLAB_GRAPH_IO_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

// graph6: first byte(s) encode n (n+63 for n < 63, otherwise '~' followed by
// three 6-bit groups), then the upper triangle read column by column
// (column j, rows 0..j-1) packed big-endian into 6-bit groups, each +63.
// Decoding is strict: wrong length, bytes outside [63,126], and nonzero
// padding bits are ParseErrors carrying the byte offset.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge list: first line "n m", then m lines "i j" with 0 <= i < j < n.
// ParseError offsets are 1-based line numbers.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Reads either a graph6 stream (one graph per line, blank lines and a
// leading ">>graph6<<" header skipped) or a single edge list. The format is
// picked from the first non-blank line: two whitespace-separated integers
// mean edge list.
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace spreadlab

#endif  // SPREADLAB_GRAPH_IO_HPP_
