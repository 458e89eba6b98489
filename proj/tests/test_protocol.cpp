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

#include <cmath>
#include <map>
#include <memory>

#include "lsmatch/errors.hpp"
#include "lsmatch/protocol.hpp"
#include "test_support.hpp"

using namespace lsmatch;
using lsmatch::testing::graph_of;

namespace {

Partition explicit_partition(std::uint32_t t, std::vector<std::uint32_t> parts) {
  return Partition{t, std::move(parts)};
}

std::vector<Edge> view_edges(const PlayerView& v) {
  return {v.edges().begin(), v.edges().end()};
}

}  // namespace

TEST_CASE("partition_vertices") {
  auto rng = substream(0, "partition");
  const auto one = partition_vertices(4, 1, PartitionMode::kRandom, rng);
  CHECK(one.part_of == std::vector<std::uint32_t>{0, 0, 0, 0});
  const auto rr = partition_vertices(4, 4, PartitionMode::kRoundRobin, rng);
  CHECK(rr.part_of == std::vector<std::uint32_t>{0, 1, 2, 3});
  auto a = substream(5, "partition");
  auto b = substream(5, "partition");
  CHECK(partition_vertices(50, 3, PartitionMode::kRandom, a) ==
        partition_vertices(50, 3, PartitionMode::kRandom, b));
  CHECK_THROWS_AS(partition_vertices(3, 4, PartitionMode::kRandom, rng),
                  InputError);
  CHECK_THROWS_AS(partition_vertices(3, 0, PartitionMode::kRandom, rng),
                  InputError);
}

TEST_CASE("player views follow the incidence rule") {
  const auto edge = graph_of(2, {{0, 1}});
  auto views = build_player_views(edge, explicit_partition(2, {0, 1}));
  CHECK(view_edges(views[0]) == std::vector<Edge>{{0, 1}});
  CHECK(view_edges(views[1]) == std::vector<Edge>{{0, 1}});

  const auto tri = gen_basic(Family::kCycle, 3);
  views = build_player_views(tri, explicit_partition(2, {0, 0, 1}));
  CHECK(view_edges(views[0]) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(view_edges(views[1]) == std::vector<Edge>{{0, 2}, {1, 2}});

  views = build_player_views(tri, explicit_partition(1, {0, 0, 0}));
  CHECK(view_edges(views[0]).size() == 3);

  CHECK_THROWS_AS(build_player_views(tri, explicit_partition(2, {0, 1})),
                  InputError);
}

TEST_CASE("bit widths") {
  const auto w = BitWidths::for_graph(7, 8);
  CHECK(w.width(Tag::kVertex) == 3);
  CHECK(w.width(Tag::kDegree) == 3);
  CHECK(w.width(Tag::kEdge) == 6);
  CHECK(w.width(Tag::kCount) == 4);
  CHECK(w.width(Tag::kHalfUnits) == 6);  // ceil(log2(29)) + 1
  CHECK(BitWidths::for_graph(8, 0).id_bits == 4);
  CHECK(BitWidths::for_graph(8, 0).count_bits == 0);
}

TEST_CASE("edge codes round trip") {
  for (VertexId u = 0; u < 9; ++u) {
    for (VertexId v = u + 1; v < 9; ++v) {
      CHECK(decode_edge(encode_edge({u, v}, 9), 9) == Edge{u, v});
    }
  }
}

TEST_CASE("ls player messages on the split path") {
  const auto path = gen_basic(Family::kPath, 3);
  const auto views = build_player_views(path, explicit_partition(2, {0, 0, 1}));
  const auto w = widths_for_views(views);
  const std::vector<VertexId> s{1};
  const auto m0 = ls_player_message(views[0], s, w);
  const auto m1 = ls_player_message(views[1], s, w);
  CHECK(m0.entries == std::vector<MessageEntry>{{Tag::kVertex, 1},
                                                {Tag::kDegree, 2},
                                                {Tag::kMinNeighborDegree, 1}});
  CHECK(m1.entries == std::vector<MessageEntry>{{Tag::kVertex, 1},
                                                {Tag::kMinNeighborDegree, 1}});
  CHECK(m0.bit_size == recompute_bits(m0, w));
  CHECK(m1.bit_size == 4);
}

TEST_CASE("ls_protocol examples") {
  const auto path = gen_basic(Family::kPath, 3);
  const auto views = build_player_views(path, explicit_partition(2, {0, 0, 1}));
  // Find a seed whose single draw is vertex 1, then run the protocol on it.
  for (std::uint64_t seed = 0;; ++seed) {
    SamplerConfig cfg;
    cfg.s = 1;
    cfg.repetitions = 1;
    cfg.seed = seed;
    if (repetition_sample(3, cfg, 0) != std::vector<VertexId>{1}) continue;
    CHECK(ls_protocol(views, cfg).z1 == 3.0);
    break;
  }

  auto rng = substream(8, "graph");
  const auto g = gen_stacked_triangulation(30, rng);
  SamplerConfig cfg;
  cfg.s = 5;
  cfg.epsilon = 0.4;
  cfg.seed = 8;
  const auto solo = build_player_views(
      g, partition_vertices(30, 1, PartitionMode::kRandom, rng));
  CHECK(ls_protocol(solo, cfg).z1 == estimate_ls(g, cfg).value);

  cfg.s = 30;
  const auto many = build_player_views(
      g, partition_vertices(30, 5, PartitionMode::kRandom, rng));
  CHECK(ls_protocol(many, cfg).z1 ==
        static_cast<double>(locally_superior_count(g)));
}

TEST_CASE("referee decisions match the offline definition") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = substream(seed, "referee-agreement");
    std::uniform_int_distribution<VertexId> size(2, 40);
    std::uniform_real_distribution<double> density(0.03, 0.4);
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    const VertexId n = g.vertex_count();
    std::uniform_int_distribution<std::uint32_t> players(1, std::min<VertexId>(n, 6));
    const auto views = build_player_views(
        g, partition_vertices(n, players(rng), PartitionMode::kRandom, rng));
    SamplerConfig cfg;
    cfg.s = std::max<VertexId>(1, n / 3);
    cfg.repetitions = 4;
    cfg.seed = seed;
    const auto res = ls_protocol(views, cfg);
    REQUIRE_FALSE(res.decisions.empty());
    for (auto [u, superior] : res.decisions) {
      REQUIRE(superior == is_locally_superior(g, u));
    }
  }
}

TEST_CASE("sample primitive on a single edge") {
  const auto edge = graph_of(2, {{0, 1}});
  const auto views = build_player_views(edge, explicit_partition(2, {0, 1}));
  std::vector<Message> msgs;
  const std::vector<std::uint32_t> split{0, 1};
  CHECK(sample_instance(views, split, 2, 1, 0, msgs) == std::vector<Edge>{{0, 1}});
  // Only the lower endpoint's owner speaks for the edge.
  CHECK(msgs[0].entries.size() == 2);
  CHECK(msgs[1].entries.empty());
  msgs.clear();
  const std::vector<std::uint32_t> mono{3, 3};
  CHECK(sample_instance(views, mono, 2, 1, 0, msgs).empty());
  CHECK(sample_instance(views, mono, 1, 1, 0, msgs) == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(sample_instance(views, mono, 3, 1, 0, msgs), InputError);
}

// Coloring (0, 1, 1): class {0,1} holds (0,1) and (0,2); (1,2) is
// monochromatic and never sampled with d = 2.
TEST_CASE("sample primitive picks uniformly within a class") {
  const auto tri = gen_basic(Family::kCycle, 3);
  const std::vector<std::uint32_t> colors{0, 1, 1};
  constexpr int kTrials = 20000;
  for (std::uint32_t t : {1u, 2u, 3u}) {
    auto prng = substream(t, "partition");
    const auto views = build_player_views(
        tri, partition_vertices(3, t, PartitionMode::kRoundRobin, prng));
    std::map<Edge, int> hits;
    for (int i = 0; i < kTrials; ++i) {
      std::vector<Message> msgs;
      const auto got = sample_instance(views, colors, 2, i, 0, msgs);
      REQUIRE(got.size() == 1);
      ++hits[got[0]];
    }
    CHECK(hits.count({1, 2}) == 0);
    const double sd = std::sqrt(kTrials * 0.25);
    CHECK(std::abs(hits[{0, 1}] - kTrials / 2.0) <= 3 * sd);
    CHECK(std::abs(hits[{0, 2}] - kTrials / 2.0) <= 3 * sd);
  }
}

TEST_CASE("sample primitive output is a subgraph") {
  auto rng = substream(3, "graph");
  const auto g = gen_stacked_triangulation(40, rng);
  const auto views = build_player_views(
      g, partition_vertices(40, 4, PartitionMode::kRandom, rng));
  const auto res = sample_primitive(views, 30, 2, 5, 77);
  CHECK_FALSE(res.edges.empty());
  for (auto [u, v] : res.edges) CHECK(g.has_edge(u, v));
  CHECK(res.messages.size() == 4);
  const auto w = widths_for_views(views);
  for (const auto& m : res.messages) CHECK(m.bit_size == recompute_bits(m, w));
  CHECK(res.edges == sample_primitive(views, 30, 2, 5, 77).edges);
}

TEST_CASE("a_prime_protocol is exact") {
  const auto c4 = gen_basic(Family::kCycle, 4);
  const auto split = build_player_views(c4, explicit_partition(2, {0, 0, 1, 1}));
  const auto res = a_prime_protocol(split);
  CHECK(res.z3.value() == 4.0);
  CHECK(res.messages[0].entries[0].value == 4);
  CHECK(res.messages[1].entries[0].value == 4);
  CHECK(a_prime_protocol(build_player_views(Graph(3), explicit_partition(1, {0, 0, 0})))
            .z3 == HalfUnits{0});

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rng = substream(seed, "a-prime");
    const auto g = testing::random_graph(30, 0.3, rng);
    std::uniform_int_distribution<std::uint32_t> players(1, 10);
    const auto views = build_player_views(
        g, partition_vertices(30, players(rng), PartitionMode::kRandom, rng));
    REQUIRE(a_prime_protocol(views).z3 == a_prime(g));
  }
}

TEST_CASE("protocol parameter resolution") {
  ProtocolConfig cfg;
  auto p = resolve(cfg, 27);
  CHECK(p.k == 3);
  CHECK(p.b == 300);
  CHECK(p.r_sample == 20);
  CHECK(p.s == 27);
  CHECK(p.ls_repetitions == 128);
  p = resolve(cfg, 1000000);
  CHECK(p.k == 100);
  CHECK(p.r_sample == 70);
  CHECK(p.s == 125000);
  CHECK(ceil_cbrt(0) == 1);
  CHECK(ceil_cbrt(8) == 2);
  CHECK(ceil_cbrt(9) == 3);

  CHECK(meets_threshold(HalfUnits{6}, 3, TauRule::kK));
  CHECK_FALSE(meets_threshold(HalfUnits{5}, 3, TauRule::kK));
  // 3 / 12.5 = 0.24 -> one half unit suffices.
  CHECK(meets_threshold(HalfUnits{1}, 3, TauRule::kKOver12_5));
  CHECK_FALSE(meets_threshold(HalfUnits{0}, 3, TauRule::kKOver12_5));

  cfg.d = 3;
  CHECK_THROWS_AS(resolve(cfg, 10), InputError);
}

TEST_CASE("final protocol examples") {
  SUBCASE("empty graph") {
    const auto views = build_player_views(Graph(8), explicit_partition(1, std::vector<std::uint32_t>(8, 0)));
    ProtocolConfig cfg;
    cfg.seed = 1;
    const auto r = final_protocol(views, cfg).report;
    CHECK(r.value == 0.0);
    CHECK(r.z3 == HalfUnits{0});
    CHECK(r.branch == std::string(kBranchZ2));
  }

  SUBCASE("two disjoint edges on 27 vertices") {
    const auto g = graph_of(27, {{0, 1}, {2, 3}});
    int exact = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      auto rng = substream(seed, "partition");
      const auto views = build_player_views(
          g, partition_vertices(27, 2, PartitionMode::kRandom, rng));
      ProtocolConfig cfg;
      cfg.seed = seed;
      const auto r = final_protocol(views, cfg).report;
      REQUIRE(r.z3->value() == 2.0);
      REQUIRE(r.branch == std::string(kBranchZ2));
      if (r.value == 2.0) ++exact;
    }
    CHECK(exact >= 350);
  }

  SUBCASE("single player on a dense-matching planar graph") {
    auto rng = substream(4, "graph");
    const auto g = gen_stacked_triangulation(60, rng);
    const double ell = static_cast<double>(locally_superior_count(g));
    const auto views = build_player_views(g, explicit_partition(1, std::vector<std::uint32_t>(60, 0)));
    int inside = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      ProtocolConfig cfg;
      cfg.seed = seed;
      const auto r = final_protocol(views, cfg).report;
      REQUIRE(r.branch == std::string(kBranchZ1));
      if (std::abs(r.value - ell) <= 0.25 * ell) ++inside;
    }
    CHECK(inside >= 88);
  }
}

TEST_CASE("final protocol accounting and determinism") {
  auto rng = substream(12, "graph");
  const auto g = gen_stacked_triangulation(64, rng);
  const auto views = build_player_views(
      g, partition_vertices(64, 4, PartitionMode::kRandom, rng));
  ProtocolConfig cfg;
  cfg.seed = 5;
  const auto a = final_protocol(views, cfg);
  const auto b = final_protocol(views, cfg);
  CHECK(a.report == b.report);
  const auto w = widths_for_views(views);
  std::vector<std::uint64_t> per_player(4, 0);
  for (const auto& m : a.transcript) {
    CHECK(m.bit_size == recompute_bits(m, w));
    per_player[m.player] += m.bit_size;
  }
  CHECK(per_player == a.report.player_bits);
  CHECK(*a.report.max_player_bits ==
        *std::max_element(per_player.begin(), per_player.end()));
}

TEST_CASE("players only read their own view") {
  auto rng = substream(21, "graph");
  const auto g = gen_stacked_triangulation(40, rng);
  auto views = build_player_views(
      g, partition_vertices(40, 3, PartitionMode::kRandom, rng));
  AccessTracker tracker;
  for (auto& v : views) v.set_tracker(&tracker);
  ProtocolConfig cfg;
  cfg.seed = 21;
  final_protocol(views, cfg, &tracker);
  CHECK(tracker.reads() > 0);
  CHECK_FALSE(tracker.violated());

  // The double does catch a cross-view read.
  AccessTracker spy;
  for (auto& v : views) v.set_tracker(&spy);
  spy.enter(0);
  (void)views[1].edges();
  spy.leave();
  CHECK(spy.violated());
}
