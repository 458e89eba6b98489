// Copyright 2026 The lsmatch Authors.
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

#include "lsmatch/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "lsmatch/errors.hpp"

namespace lsmatch {
namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!skippable(line)) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> FormatError {
    return FormatError("edge list line " + std::to_string(lineno) + ": " +
                       what);
  };

  if (!next_line()) throw FormatError("edge list: missing 'n m' header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0 ||
        n > static_cast<long long>(UINT32_MAX)) {
      throw fail("expected 'n m' header");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_line()) {
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex id out of range");
    if (u == v) throw fail("self-loop");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw FormatError("edge list: header declares " + std::to_string(m) +
                      " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(static_cast<VertexId>(n), edges);
  } catch (const FormatError&) {
    throw;
  } catch (const InputError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_edge_list(const Graph& g,
                             const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_edge_list(out, g, comments);
  return out.str();
}

}  // namespace lsmatch
