// Copyright 2026 The ergof Authors.
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

// Text formats for SimpleGraph.
//
// Edge list:
//   n <vertex count>
//   <i> <j>            one pair per line, 1-indexed, i < j
// Blank lines and lines starting with '#' are ignored.
//
// Matrix CSV: n lines of n comma-separated 0/1 entries; symmetric, zero
// diagonal.

#ifndef ERGOF_GRAPH_IO_HPP
#define ERGOF_GRAPH_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ergof/error.hpp"
#include "ergof/graph.hpp"

namespace ergof {

namespace io_detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool skippable(const std::string& line) { return line.empty() || line[0] == '#'; }

}  // namespace io_detail

inline SimpleGraph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<Edge, int>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = io_detail::trim(raw);
    if (io_detail::skippable(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n") throw ParseError("expected header 'n <count>'", line_no);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing characters after header", line_no);
      if (n < 1 || n > kMaxVertices) throw ParseError("vertex count out of range", line_no);
      continue;
    }
    long long i = 0;
    long long j = 0;
    if (!(ls >> i >> j)) throw ParseError("expected two vertex indices", line_no);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing characters after edge", line_no);
    if (i >= j) throw ParseError("edge endpoints must satisfy i < j", line_no);
    if (i < 1 || j > n) throw ParseError("vertex index outside 1..n", line_no);
    edges.push_back({{static_cast<int>(i - 1), static_cast<int>(j - 1)}, line_no});
  }
  if (n < 0) throw ParseError("missing header 'n <count>'", line_no);
  GraphBuilder b(n);
  for (const auto& [edge, at] : edges) {
    if (!b.add_edge(edge.first, edge.second)) throw ParseError("duplicate edge", at);
  }
  return std::move(b).build();
}

inline SimpleGraph read_matrix_csv(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::vector<std::vector<char>> rows;
  std::vector<int> row_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = io_detail::trim(raw);
    if (io_detail::skippable(line)) continue;
    std::vector<char> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      cell = io_detail::trim(cell);
      if (cell != "0" && cell != "1") throw ParseError("matrix entries must be 0 or 1", line_no);
      row.push_back(cell == "1");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged matrix row", line_no);
    }
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
    if (rows.size() > static_cast<std::size_t>(kMaxVertices)) {
      throw ParseError("matrix too large", line_no);
    }
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ParseError("empty matrix", line_no);
  if (rows.front().size() != rows.size()) throw ParseError("matrix is not square", line_no);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i][i]) throw ParseError("nonzero diagonal (self-loop)", row_lines[i]);
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ParseError("matrix is not symmetric in column " + std::to_string(j + 1),
                         row_lines[i]);
      }
      if (rows[i][j]) b.set_unchecked(i, j);
    }
  }
  return std::move(b).build();
}

/// Reads either format; a file whose first significant token is `n` is an
/// edge list, anything else is parsed as a matrix CSV.
inline SimpleGraph read_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream probe(text);
  std::string line;
  bool edge_list = false;
  while (std::getline(probe, line)) {
    line = io_detail::trim(line);
    if (io_detail::skippable(line)) continue;
    edge_list = line[0] == 'n';
    break;
  }
  std::istringstream src(text);
  return edge_list ? read_edge_list(src) : read_matrix_csv(src);
}

inline SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file: " + path);
  return read_graph(in);
}

inline void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (const auto& [i, j] : g.edges()) out << (i + 1) << ' ' << (j + 1) << '\n';
}

inline void write_matrix_csv(std::ostream& out, const SimpleGraph& g) {
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ',';
      out << (g.has_edge(i, j) ? '1' : '0');
    }
    out << '\n';
  }
}

}  // namespace ergof

#endif  // ERGOF_GRAPH_IO_HPP
