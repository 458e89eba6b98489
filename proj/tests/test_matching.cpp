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

#include <doctest.h>

#include <numeric>

#include "lsmatch/errors.hpp"
#include "lsmatch/matching.hpp"
#include "test_support.hpp"

using namespace lsmatch;
using lsmatch::testing::graph_of;

namespace {

std::vector<VertexId> identity(VertexId n) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  return order;
}

}  // namespace

TEST_CASE("greedy maximal matching examples") {
  const auto path = graph_of(3, {{0, 1}, {1, 2}});
  const auto c4 = gen_basic(Family::kCycle, 4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rng = substream(seed, "order");
    CHECK(greedy_maximal_matching(path, random_vertex_order(3, rng)).size() == 1);
    CHECK(greedy_maximal_matching(c4, random_vertex_order(4, rng)).size() == 2);
  }
  CHECK(greedy_maximal_matching(Graph(4), identity(4)).size() == 0);
}

TEST_CASE("greedy takes the lowest-id free neighbor") {
  const auto star = gen_basic(Family::kStar, 4);
  const auto m = greedy_maximal_matching(star, std::vector<VertexId>{0, 3, 2, 1});
  REQUIRE(m.size() == 1);
  CHECK(m.edges[0] == Edge{0, 1});
}

TEST_CASE("greedy rejects a non-permutation") {
  const auto path = graph_of(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(greedy_maximal_matching(path, std::vector<VertexId>{0, 1}),
                  InputError);
  CHECK_THROWS_AS(
      greedy_maximal_matching(path, std::vector<VertexId>{0, 1, 1}),
      InputError);
}

TEST_CASE("maximum matching examples") {
  CHECK(maximum_matching_size(graph_of(3, {{0, 1}, {1, 2}})) == 1);
  CHECK(maximum_matching_size(gen_basic(Family::kCycle, 5)) == 2);
  CHECK(maximum_matching_size(gen_4regular_planar_9()) == 4);
  CHECK(maximum_matching_size(Graph()) == 0);
  // Petersen graph has a perfect matching and plenty of odd cycles.
  const auto petersen = graph_of(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
           {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  CHECK(maximum_matching_size(petersen) == 5);
}

TEST_CASE("brute force matching examples") {
  CHECK(brute_force_matching_size(graph_of(2, {{0, 1}})) == 1);
  CHECK(brute_force_matching_size(graph_of(4, {{0, 1}, {2, 3}})) == 2);
  CHECK(brute_force_matching_size(
            graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 2);
  CHECK_THROWS_AS(brute_force_matching_size(gen_basic(Family::kPath, 27)),
                  CapabilityError);
}

// Build gate: the whole acceptance suite keys off the blossom result.
TEST_CASE("blossom agrees with brute force on random small graphs") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto rng = substream(seed, "oracle-gate");
    std::uniform_int_distribution<VertexId> size(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    const auto g = testing::random_graph(size(rng), density(rng), rng, 25);
    const auto m = maximum_matching(g);
    REQUIRE(is_matching(g, m));
    REQUIRE(m.size() == brute_force_matching_size(g));
  }
}

TEST_CASE("greedy is maximal and within factor two") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto rng = substream(seed, "greedy");
    std::uniform_int_distribution<VertexId> size(1, 40);
    std::uniform_real_distribution<double> density(0.02, 0.6);
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    const auto greedy =
        greedy_maximal_matching(g, random_vertex_order(g.vertex_count(), rng));
    REQUIRE(is_maximal_matching(g, greedy));
    const auto m = maximum_matching_size(g);
    REQUIRE(2 * greedy.size() >= m);
    REQUIRE(greedy.size() <= m);
  }
}
