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

#include "lsmatch/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "lsmatch/errors.hpp"

namespace lsmatch {

const char* to_string(WitnessProvenance p) {
  switch (p) {
    case WitnessProvenance::kByConstruction:
      return "by-construction";
    case WitnessProvenance::kDensityOracle:
      return "density-oracle";
    case WitnessProvenance::kUnknown:
      break;
  }
  return "unknown";
}

Graph Graph::from_edges(VertexId n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw InputError("duplicate edge (" + std::to_string(std::min(v, *dup)) +
                       ", " + std::to_string(std::max(v, *dup)) + ")");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw InputError("vertex id " + std::to_string(v) +
                     " out of range for graph with " +
                     std::to_string(vertex_count()) + " vertices");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

std::uint32_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<std::uint32_t>(adj_[v].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_locally_superior(const Graph& g, VertexId v) {
  const auto deg = g.degree(v);
  for (VertexId w : g.neighbors(v)) {
    if (g.degree(w) <= deg) return true;
  }
  return false;
}

std::size_t locally_superior_count(const Graph& g) {
  std::size_t count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (is_locally_superior(g, v)) ++count;
  }
  return count;
}

HalfUnits a_prime_term(std::uint32_t degree) {
  // min{d/2, 4 - d/2} in halves is min{d, 8 - d}.
  const std::int64_t d = degree;
  return {std::min<std::int64_t>(d, 8 - d)};
}

HalfUnits a_prime(const Graph& g) {
  HalfUnits total;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    total += a_prime_term(g.degree(v));
  }
  return total;
}

std::uint32_t nash_williams_density(const Graph& g,
                                    std::uint32_t max_subset_size) {
  constexpr std::uint32_t kLimit = 20;
  const VertexId n = g.vertex_count();
  if (max_subset_size > kLimit || n > max_subset_size) {
    throw CapabilityError("exhaustive density scan supports at most " +
                          std::to_string(std::min(max_subset_size, kLimit)) +
                          " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::uint32_t> mask(n, 0);
  for (auto [u, v] : g.edges()) {
    mask[u] |= 1u << v;
    mask[v] |= 1u << u;
  }
  std::uint32_t best = 0;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    std::uint32_t twice_edges = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      twice_edges += static_cast<std::uint32_t>(std::popcount(mask[v] & s));
    }
    const std::uint32_t e = twice_edges / 2;
    const std::uint32_t denom = static_cast<std::uint32_t>(size - 1);
    best = std::max(best, (e + denom - 1) / denom);
  }
  return best;
}

std::uint32_t degeneracy(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // Bucket queue keyed by current degree; stale entries are skipped.
  std::vector<std::vector<VertexId>> buckets(max_deg + 1);
  for (VertexId v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::uint32_t result = 0;
  std::uint32_t cursor = 0;
  for (VertexId done = 0; done < n;) {
    while (buckets[cursor].empty()) ++cursor;
    const VertexId v = buckets[cursor].back();
    buckets[cursor].pop_back();
    if (removed[v] || deg[v] != cursor) continue;
    removed[v] = true;
    ++done;
    result = std::max(result, cursor);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      buckets[deg[w]].push_back(w);
      cursor = std::min(cursor, deg[w]);
    }
  }
  return result;
}

void require_permutation(std::span<const VertexId> order, VertexId n) {
  if (order.size() != n) {
    throw InputError("vertex order has " + std::to_string(order.size()) +
                     " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (VertexId v : order) {
    if (v >= n || seen[v]) {
      throw InputError("vertex order is not a permutation (entry " +
                       std::to_string(v) + ")");
    }
    seen[v] = true;
  }
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  require_permutation(perm, g.vertex_count());
  auto edges = g.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace lsmatch
