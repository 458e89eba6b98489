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

#pragma once

// Graph builders shared by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lsmatch/generators.hpp"
#include "lsmatch/graph.hpp"
#include "lsmatch/matching.hpp"
#include "lsmatch/protocol.hpp"
#include "lsmatch/random.hpp"

namespace lsmatch::testing {

inline Graph graph_of(VertexId n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

// G(n, p), then trimmed to at most max_edges uniformly chosen edges.
inline Graph random_graph(VertexId n, double p, Rng& rng,
                          std::size_t max_edges = SIZE_MAX) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  if (edges.size() > max_edges) {
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(max_edges);
  }
  return Graph::from_edges(n, edges);
}

inline Graph random_relabel(const Graph& g, Rng& rng) {
  const auto perm = random_vertex_order(g.vertex_count(), rng);
  return relabel(g, perm);
}

// Disjoint union; the second graph's ids are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) {
    edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  }
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

// K_{2,j}: vertices 0 and 1 joined to each of 2..j+1. Planar, m = 2.
inline Graph complete_bipartite_2(VertexId j) {
  std::vector<Edge> edges;
  for (VertexId v = 2; v < j + 2; ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(1, v);
  }
  return Graph::from_edges(j + 2, edges);
}

// Planar graph on exactly n vertices whose maximum matching is at most
// max_matching: a few stars, K_{2,j}'s, triangles and tiny stacked
// triangulations, padded with isolated vertices and randomly relabelled.
inline Graph small_matching_planar(VertexId n, std::size_t max_matching,
                                   Rng& rng) {
  for (;;) {
    Graph g;
    std::size_t budget = max_matching;
    std::uniform_int_distribution<int> kind(0, 3);
    while (budget > 0 && g.vertex_count() + 8 <= n) {
      Graph part;
      std::size_t cost = 0;
      switch (kind(rng)) {
        case 0: {
          std::uniform_int_distribution<VertexId> leaves(1, 6);
          part = gen_basic(Family::kStar, leaves(rng) + 1);
          cost = 1;
          break;
        }
        case 1: {
          std::uniform_int_distribution<VertexId> j(2, 5);
          part = complete_bipartite_2(j(rng));
          cost = 2;
          break;
        }
        case 2:
          part = gen_basic(Family::kCycle, 3);
          cost = 1;
          break;
        default: {
          std::uniform_int_distribution<VertexId> size(4, 5);
          part = gen_stacked_triangulation(size(rng), rng);
          cost = part.vertex_count() / 2;
          break;
        }
      }
      if (cost > budget) break;
      budget -= cost;
      g = disjoint_union(g, part);
    }
    if (g.vertex_count() > n) continue;
    g = disjoint_union(g, Graph(n - g.vertex_count()));
    g = random_relabel(g, rng);
    if (maximum_matching_size(g) <= max_matching) return g;
  }
}

// Deterministic planar corpus member i with n in [lo, hi]: rotates through
// stacked triangulations, grids, paths, cycles and small-matching graphs.
struct PlanarSample {
  Graph graph;
  const char* family;
};

inline PlanarSample planar_corpus_member(std::size_t i, VertexId lo,
                                         VertexId hi, std::uint64_t seed) {
  auto rng = substream(seed, "planar-corpus", i);
  std::uniform_int_distribution<VertexId> size(lo, hi);
  const VertexId n = size(rng);
  switch (i % 6) {
    case 0:
    case 1:
      return {gen_stacked_triangulation(n, rng), "stacked-triangulation"};
    case 2:
      return {random_relabel(gen_basic(Family::kGrid, n), rng), "grid"};
    case 3:
      return {random_relabel(gen_basic(Family::kPath, n), rng), "path"};
    case 4:
      return {random_relabel(gen_basic(Family::kCycle, n), rng), "cycle"};
    default:
      return {small_matching_planar(n, ceil_cbrt(n), rng), "small-matching"};
  }
}

}  // namespace lsmatch::testing
