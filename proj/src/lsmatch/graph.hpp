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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lsmatch {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Exact multiple of 1/2. Used for A'(G) so that partial sums computed by
// different parties add up without rounding.
struct HalfUnits {
  std::int64_t count = 0;

  constexpr double value() const { return static_cast<double>(count) / 2.0; }
  friend constexpr HalfUnits operator+(HalfUnits a, HalfUnits b) {
    return {a.count + b.count};
  }
  HalfUnits& operator+=(HalfUnits o) {
    count += o.count;
    return *this;
  }
  friend constexpr auto operator<=>(HalfUnits, HalfUnits) = default;
};

enum class WitnessProvenance { kByConstruction, kDensityOracle, kUnknown };

// Upper bound on the arboricity together with where the bound came from.
struct ArboricityWitness {
  std::uint32_t alpha = 0;
  WitnessProvenance provenance = WitnessProvenance::kUnknown;

  friend bool operator==(const ArboricityWitness&,
                         const ArboricityWitness&) = default;
};

const char* to_string(WitnessProvenance p);

// Undirected simple graph on vertices 0..n-1. Adjacency lists are sorted
// ascending and the object is immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId n) : adj_(n) {}

  // Throws InputError on self-loops, duplicate edges or ids >= n. Edges may
  // be given in either orientation.
  static Graph from_edges(VertexId n, std::span<const Edge> edges);

  VertexId vertex_count() const { return static_cast<VertexId>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::uint32_t degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  // All edges as (u, v) with u < v, lexicographically ordered.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

// v has a neighbor w with deg(v) >= deg(w). Isolated vertices never qualify.
bool is_locally_superior(const Graph& g, VertexId v);

// Number of locally superior vertices, l(G).
std::size_t locally_superior_count(const Graph& g);

// Sum over u of min{deg(u)/2, 4 - deg(u)/2}. Terms for deg(u) > 8 are
// negative and are kept as is.
HalfUnits a_prime(const Graph& g);
HalfUnits a_prime_term(std::uint32_t degree);

// Exhaustive Nash-Williams density: max over vertex subsets S with |S| >= 2 of
// ceil(|E(S)| / (|S| - 1)). Equals the arboricity. Requires
// g.vertex_count() <= max_subset_size <= 20, otherwise CapabilityError.
std::uint32_t nash_williams_density(const Graph& g,
                                    std::uint32_t max_subset_size = 20);

// Largest minimum degree seen while repeatedly deleting a min-degree vertex.
std::uint32_t degeneracy(const Graph& g);

// Throws InputError unless order is a permutation of 0..n-1.
void require_permutation(std::span<const VertexId> order, VertexId n);

// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const VertexId> perm);

}  // namespace lsmatch
