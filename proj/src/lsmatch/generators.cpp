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

#include "lsmatch/generators.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <vector>

#include "lsmatch/errors.hpp"
#include "lsmatch/stream.hpp"

namespace lsmatch {
namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 7> kFamilies{{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kStar, "star"},
    {Family::kGrid, "grid"},
    {Family::kStackedTriangulation, "stacked-triangulation"},
    {Family::kForestUnion, "forest-union"},
    {Family::kNamedExample, "named-example"},
}};

void require_min(Family f, VertexId n, VertexId min) {
  if (n < min) {
    throw InputError(std::string(to_string(f)) + " needs n >= " +
                     std::to_string(min) + ", got " + std::to_string(n));
  }
}

// Decodes a Pruefer sequence into the edges of a labeled tree on n vertices.
std::vector<Edge> pruefer_tree(VertexId n, Rng& rng) {
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::uint32_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[c] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  const VertexId b = leaves.top();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return edges;
}

}  // namespace

const char* to_string(Family f) {
  for (const auto& entry : kFamilies) {
    if (entry.family == f) return entry.name.data();
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (const auto& entry : kFamilies) {
    if (entry.name == name) return entry.family;
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

Graph gen_basic(Family family, VertexId n) {
  std::vector<Edge> edges;
  switch (family) {
    case Family::kPath:
      require_min(family, n, 1);
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::kCycle:
      require_min(family, n, 3);
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, n - 1);
      break;
    case Family::kStar:
      require_min(family, n, 1);
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::kGrid: {
      require_min(family, n, 1);
      const VertexId width = ceil_sqrt(n);
      for (VertexId v = 0; v < n; ++v) {
        if ((v + 1) % width != 0 && v + 1 < n) edges.emplace_back(v, v + 1);
        if (v + width < n) edges.emplace_back(v, v + width);
      }
      break;
    }
    default:
      throw InputError(std::string(to_string(family)) +
                       " is not a basic family");
  }
  return Graph::from_edges(n, edges);
}

Graph gen_stacked_triangulation(VertexId n, Rng& rng) {
  require_min(Family::kStackedTriangulation, n, 3);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  // Both sides of the initial triangle are faces.
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (VertexId v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    const std::size_t f = pick(rng);
    const auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return Graph::from_edges(n, edges);
}

Graph gen_forest_union(VertexId n, std::uint32_t alpha, Rng& rng) {
  require_min(Family::kForestUnion, n, 2);
  if (alpha == 0) throw InputError("forest-union needs alpha >= 1");
  std::set<Edge> merged;
  for (std::uint32_t i = 0; i < alpha; ++i) {
    for (auto e : pruefer_tree(n, rng)) merged.insert(e);
  }
  std::vector<Edge> edges(merged.begin(), merged.end());
  return Graph::from_edges(n, edges);
}

const std::vector<std::vector<VertexId>>& planar_9_rotation() {
  static const std::vector<std::vector<VertexId>> rotation{
      {4, 6, 2, 3}, {3, 2, 5, 8}, {1, 0, 6, 5}, {4, 0, 1, 8}, {0, 3, 7, 6},
      {7, 8, 1, 2}, {2, 0, 4, 7}, {6, 4, 8, 5}, {5, 7, 3, 1},
  };
  return rotation;
}

Graph gen_4regular_planar_9() {
  static const std::vector<Edge> edges{
      {0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 2}, {1, 3}, {1, 5}, {1, 8}, {2, 5},
      {2, 6}, {3, 4}, {3, 8}, {4, 6}, {4, 7}, {5, 7}, {5, 8}, {6, 7}, {7, 8},
  };
  return Graph::from_edges(9, edges);
}

GeneratedGraph generate(const GeneratorSpec& spec) {
  auto rng = substream(spec.seed, "gen");
  GeneratedGraph out;
  out.spec = spec;
  out.witness.provenance = WitnessProvenance::kByConstruction;
  switch (spec.family) {
    case Family::kPath:
    case Family::kStar:
      out.graph = gen_basic(spec.family, spec.n);
      out.witness.alpha = 1;
      break;
    case Family::kCycle:
      out.graph = gen_basic(spec.family, spec.n);
      out.witness.alpha = 2;
      break;
    case Family::kGrid:
      out.graph = gen_basic(spec.family, spec.n);
      out.witness.alpha = 3;
      break;
    case Family::kStackedTriangulation:
      out.graph = gen_stacked_triangulation(spec.n, rng);
      out.witness.alpha = 3;
      break;
    case Family::kForestUnion:
      out.graph = gen_forest_union(spec.n, spec.alpha, rng);
      out.witness.alpha = spec.alpha;
      break;
    case Family::kNamedExample:
      out.graph = gen_4regular_planar_9();
      out.witness.alpha = 3;
      out.spec.n = 9;
      break;
  }
  return out;
}

}  // namespace lsmatch
