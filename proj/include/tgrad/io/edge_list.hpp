// Copyright 2026 The tgrad Authors
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

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tgrad/errors.hpp"
#include "tgrad/graph.hpp"

namespace tgrad::io {

// Edge-list format: the first significant line is the vertex count, every
// further line is "u v" with 0-based vertex ids. '#' starts a comment; blank
// lines are ignored.

namespace detail {

inline std::string_view strip(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

inline std::vector<std::string_view> fields(std::string_view line) {
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

inline bool to_index(std::string_view text, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::strip(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    auto parts = detail::fields(line);
    if (!n) {
      std::uint64_t count = 0;
      if (parts.size() != 1 || !detail::to_index(parts[0], count))
        throw ParseError(line_no, "expected vertex count");
      if (count > 0xFFFFFFFFull) throw ParseError(line_no, "vertex count too large");
      n = count;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (parts.size() != 2 || !detail::to_index(parts[0], u) || !detail::to_index(parts[1], v))
      throw ParseError(line_no, "expected 'u v'");
    if (u >= *n || v >= *n) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "loop");
    Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
  return Graph(static_cast<std::size_t>(*n), edges);
}

/// Canonical text: vertex count, then edges sorted with u < v.
inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kInvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

}  // namespace tgrad::io
