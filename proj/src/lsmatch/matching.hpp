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

#include <cstddef>
#include <span>
#include <vector>

#include "lsmatch/graph.hpp"

namespace lsmatch {

// Vertex-disjoint edges, each stored as (u, v) with u < v.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
};

// True iff every edge exists in g and no vertex is used twice.
bool is_matching(const Graph& g, const Matching& m);

// True iff m is a matching and no edge of g has both endpoints unmatched.
bool is_maximal_matching(const Graph& g, const Matching& m);

// Processes vertices in the given order; an unmatched vertex takes its
// lowest-id unmatched neighbor. Throws InputError if order is not a
// permutation of 0..n-1.
Matching greedy_maximal_matching(const Graph& g,
                                 std::span<const VertexId> vertex_order);

// Edmonds' augmenting-path algorithm with blossom contraction, O(n^3).
Matching maximum_matching(const Graph& g);
std::size_t maximum_matching_size(const Graph& g);

// Exhaustive search over edge subsets. Independent of the blossom code and
// limited to 25 edges (CapabilityError above that).
std::size_t brute_force_matching_size(const Graph& g);

}  // namespace lsmatch
