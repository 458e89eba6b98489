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

#include <sstream>

#include "lsmatch/errors.hpp"
#include "lsmatch/graph.hpp"
#include "lsmatch/graph_io.hpp"
#include "test_support.hpp"

using namespace lsmatch;
using lsmatch::testing::graph_of;

namespace {

const Graph kPath3 = graph_of(3, {{0, 1}, {1, 2}});
const Graph kC4 = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const Graph kK4 = graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
const Graph kStar4 = graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});

}  // namespace

TEST_CASE("graph construction keeps adjacency sorted and symmetric") {
  const auto g = graph_of(4, {{3, 1}, {0, 3}, {2, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()) ==
        std::vector<VertexId>{2, 3});
  CHECK(std::vector<VertexId>(g.neighbors(3).begin(), g.neighbors(3).end()) ==
        std::vector<VertexId>{0, 1});
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    degree_sum += g.degree(v);
    for (VertexId w : g.neighbors(v)) CHECK(g.has_edge(w, v));
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(graph_of(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(graph_of(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(graph_of(3, {{0, 3}}), InputError);
}

TEST_CASE("degree") {
  CHECK(kPath3.degree(1) == 2);
  CHECK(Graph(3).degree(2) == 0);
  CHECK(kStar4.degree(0) == 4);
  CHECK_THROWS_AS(kPath3.degree(3), InputError);
}

TEST_CASE("is_locally_superior") {
  const auto edge = graph_of(2, {{0, 1}});
  CHECK(is_locally_superior(edge, 0));
  CHECK_FALSE(is_locally_superior(kPath3, 0));
  CHECK(is_locally_superior(kPath3, 1));
  CHECK_FALSE(is_locally_superior(Graph(1), 0));
  CHECK_THROWS_AS(is_locally_superior(kPath3, 7), InputError);
}

TEST_CASE("locally_superior_count") {
  CHECK(locally_superior_count(Graph(5)) == 0);
  CHECK(locally_superior_count(kC4) == 4);
  CHECK(locally_superior_count(kPath3) == 1);
  CHECK(locally_superior_count(kStar4) == 1);
  CHECK(locally_superior_count(Graph()) == 0);
}

TEST_CASE("a_prime is exact in half units") {
  CHECK(a_prime(graph_of(2, {{0, 1}})) == HalfUnits{2});
  CHECK(a_prime(kC4) == HalfUnits{8});
  CHECK(a_prime(kStar4) == HalfUnits{8});
  CHECK(a_prime(kPath3).value() == 2.0);
  // Degree 10 contributes 4 - 5 = -1: the formula is not clamped.
  CHECK(a_prime_term(10) == HalfUnits{-2});
  CHECK(a_prime_term(8) == HalfUnits{0});
  CHECK(a_prime_term(4) == HalfUnits{4});
}

TEST_CASE("nash_williams_density") {
  CHECK(nash_williams_density(kK4) == 2);
  CHECK(nash_williams_density(kC4) == 2);
  CHECK(nash_williams_density(kPath3) == 1);
  CHECK_THROWS_AS(nash_williams_density(Graph(21)), CapabilityError);
  CHECK_THROWS_AS(nash_williams_density(kK4, 3), CapabilityError);

  SUBCASE("random trees have density 1") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto rng = substream(seed, "tree");
      std::uniform_int_distribution<VertexId> size(2, 10);
      const auto tree = gen_forest_union(size(rng), 1, rng);
      REQUIRE(nash_williams_density(tree) == 1);
    }
  }
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(kPath3) == 1);
  CHECK(degeneracy(kStar4) == 1);
  CHECK(degeneracy(kC4) == 2);
  CHECK(degeneracy(kK4) == 3);
  CHECK(degeneracy(Graph(4)) == 0);
}

TEST_CASE("degeneracy bounds the exhaustive density") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = substream(seed, "degeneracy");
    std::uniform_int_distribution<VertexId> size(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    REQUIRE(degeneracy(g) >= nash_williams_density(g));
  }
}

TEST_CASE("locally superior status is invariant under relabeling") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rng = substream(seed, "relabel");
    std::uniform_int_distribution<VertexId> size(1, 30);
    std::uniform_real_distribution<double> density(0.02, 0.5);
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    const auto perm = random_vertex_order(g.vertex_count(), rng);
    const auto h = relabel(g, perm);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      REQUIRE(is_locally_superior(g, v) == is_locally_superior(h, perm[v]));
    }
  }
}

TEST_CASE("edge list parsing") {
  const auto g = parse_edge_list("# comment\n3 2\n0 1\n1 2\n");
  CHECK(g == kPath3);
  CHECK(format_edge_list(g) == "3 2\n0 1\n1 2\n");
  CHECK(parse_edge_list(format_edge_list(kK4, {"family=k4"})) == kK4);

  CHECK_THROWS_AS(parse_edge_list(""), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), FormatError);
  CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.txt"), FormatError);
}
