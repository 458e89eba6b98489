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
#include <random>
#include <string_view>
#include <vector>

#include "lsmatch/graph.hpp"

namespace lsmatch {

using Rng = std::mt19937_64;

// Independent generator for (seed, label, index). Every party holding the
// seed derives the same stream, which is how shared randomness is modelled.
Rng substream(std::uint64_t seed, std::string_view label,
              std::uint64_t index = 0);

// Exactly s distinct ids from 0..n-1, uniform over s-subsets, ascending.
// Throws InputError when s > n.
std::vector<VertexId> sample_without_replacement(VertexId n, VertexId s,
                                                 Rng& rng);

// Uniform permutation of 0..n-1.
std::vector<VertexId> random_vertex_order(VertexId n, Rng& rng);

}  // namespace lsmatch
