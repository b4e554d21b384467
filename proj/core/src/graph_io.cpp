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

#include "spreadlab/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr long kMaxShortOrder = 62;
constexpr long kMaxMediumOrder = 258047;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 text too short", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kMaxByte) {
    throw ParseError("graph6 byte " + std::to_string(c) + " outside [63,126]", pos);
  }
  return c - kBias;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view token, long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool looks_like_edge_list_header(std::string_view line) {
  const auto tokens = split_ws(line);
  long a = 0;
  long b = 0;
  return tokens.size() == 2 && parse_int(tokens[0], a) && parse_int(tokens[1], b);
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  std::size_t pos = 0;
  long n = sextet(text, pos);
  if (n == kMaxByte - kBias) {
    if (text.size() > 1 && text[1] == '~') {
      throw ParseError("graph6 orders above 258047 are not supported", 1);
    }
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | sextet(text, k);
    if (n <= kMaxShortOrder) {
      throw ParseError("non-canonical long order encoding", 1);
    }
    pos = 4;
  } else {
    pos = 1;
  }

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < expected) {
    throw ParseError("graph6 text too short for order " + std::to_string(n),
                     text.size());
  }
  if (text.size() > expected) {
    throw ParseError("trailing bytes after graph6 body", expected);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      const int shift = 5 - static_cast<int>(k % 6);
      if ((sextet(text, byte) >> shift) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(text, last) & pad_mask) {
      throw ParseError("nonzero graph6 padding bits", last);
    }
  }
  for (std::size_t b = pos; b < expected; ++b) sextet(text, b);
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMaxMediumOrder) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    throw CapacityError("graph6 encoding supports orders up to 258047");
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  std::size_t idx = 0;
  while (idx < lines.size() && trim(lines[idx]).empty()) ++idx;
  if (idx == lines.size()) throw ParseError("empty edge list", 1);

  const auto header = split_ws(trim(lines[idx]));
  long n = 0;
  long m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) ||
      n < 0 || m < 0) {
    throw ParseError("edge list header must be \"n m\"", idx + 1);
  }
  std::vector<Edge> edges;
  for (++idx; idx < lines.size(); ++idx) {
    const auto line = trim(lines[idx]);
    if (line.empty()) continue;
    const auto tok = split_ws(line);
    long i = 0;
    long j = 0;
    if (tok.size() != 2 || !parse_int(tok[0], i) || !parse_int(tok[1], j)) {
      throw ParseError("edge line must be \"i j\"", idx + 1);
    }
    if (!(0 <= i && i < j && j < n)) {
      throw ParseError("edge must satisfy 0 <= i < j < n", idx + 1);
    }
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError("edge list declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     lines.size());
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::vector<std::string_view> lines;
  std::string_view rest(text);
  while (!rest.empty()) {
    const std::size_t end = rest.find('\n');
    lines.push_back(rest.substr(0, end));
    if (end == std::string_view::npos) break;
    rest.remove_prefix(end + 1);
  }

  for (const auto raw : lines) {
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (looks_like_edge_list_header(line)) return {from_edge_list(text)};
    break;
  }

  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(i + 1) + ": " + e.what(), e.offset());
    }
  }
  return graphs;
}

}  // namespace spreadlab
