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

#include <cstdint>
#include <string>
#include <string_view>

#include "lsmatch/graph.hpp"
#include "lsmatch/random.hpp"

namespace lsmatch {

enum class Family {
  kPath,
  kCycle,
  kStar,
  kGrid,
  kStackedTriangulation,
  kForestUnion,
  kNamedExample,
};

const char* to_string(Family f);
// Throws InputError for unknown names.
Family family_from_string(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kPath;
  VertexId n = 1;
  std::uint32_t alpha = 1;  // forest-union only
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  ArboricityWitness witness;
  GeneratorSpec spec;
};

// path (n >= 1), cycle (n >= 3), star centered at 0 (n >= 1), and grid:
// vertices laid out row-major with width ceil(sqrt n), joined to their right
// and lower neighbors (n >= 1).
Graph gen_basic(Family family, VertexId n);

// Starts from a triangle and repeatedly puts a new vertex into a uniformly
// chosen face, joined to its three corners. Planar, 3n - 6 edges. n >= 3.
Graph gen_stacked_triangulation(VertexId n, Rng& rng);

// Union of alpha uniform labeled trees (Pruefer codes), duplicates merged.
// n >= 2, alpha >= 1.
Graph gen_forest_union(VertexId n, std::uint32_t alpha, Rng& rng);

// A fixed 4-regular planar graph on 9 vertices with maximum matching 4.
Graph gen_4regular_planar_9();

// Rotation system (clockwise neighbor order per vertex) of a planar embedding
// of gen_4regular_planar_9().
const std::vector<std::vector<VertexId>>& planar_9_rotation();

// Dispatches on spec.family; randomness comes from substream(seed, "gen").
GeneratedGraph generate(const GeneratorSpec& spec);

}  // namespace lsmatch
