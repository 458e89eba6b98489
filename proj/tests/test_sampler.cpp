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
#include <numeric>

#include "lsmatch/errors.hpp"
#include "lsmatch/sampler.hpp"
#include "test_support.hpp"

using namespace lsmatch;
using lsmatch::testing::graph_of;

TEST_CASE("default repetitions") {
  CHECK(default_repetitions(0.5) == 32);
  CHECK(default_repetitions(0.2) == 200);
  CHECK(default_repetitions(0.25) == 128);
  CHECK(default_repetitions(0.3) == 89);
  CHECK(default_repetitions(4.0) == 1);
}

TEST_CASE("sample_without_replacement") {
  auto rng = substream(1, "t");
  CHECK(sample_without_replacement(5, 5, rng) ==
        std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(sample_without_replacement(1, 1, rng) == std::vector<VertexId>{0});
  auto a = substream(9, "t");
  auto b = substream(9, "t");
  const auto sa = sample_without_replacement(100, 10, a);
  CHECK(sa == sample_without_replacement(100, 10, b));
  CHECK(sa.size() == 10);
  CHECK(std::adjacent_find(sa.begin(), sa.end()) == sa.end());
  CHECK_THROWS_AS(sample_without_replacement(3, 4, rng), InputError);
}

TEST_CASE("sample_without_replacement hits every id uniformly") {
  constexpr int kDraws = 20000;
  std::vector<int> hits(10, 0);
  auto rng = substream(3, "uniform");
  for (int i = 0; i < kDraws; ++i) {
    for (VertexId v : sample_without_replacement(10, 3, rng)) ++hits[v];
  }
  const double p = 0.3;
  const double sd = std::sqrt(kDraws * p * (1 - p));
  for (int h : hits) CHECK(std::abs(h - kDraws * p) <= 4 * sd);
}

TEST_CASE("single_shot_estimate") {
  const auto c4 = gen_basic(Family::kCycle, 4);
  const auto path = gen_basic(Family::kPath, 3);
  CHECK(single_shot_estimate(c4, std::vector<VertexId>{0, 1}) == 4.0);
  CHECK(single_shot_estimate(path, std::vector<VertexId>{0, 2}) == 0.0);
  CHECK(single_shot_estimate(path, std::vector<VertexId>{0, 1, 2}) == 1.0);
  CHECK_THROWS_AS(single_shot_estimate(path, std::vector<VertexId>{}),
                  InputError);
  CHECK_THROWS_AS(single_shot_estimate(path, std::vector<VertexId>{5}),
                  InputError);
}

TEST_CASE("estimate_ls examples") {
  SamplerConfig cfg;
  cfg.s = 2;
  cfg.seed = 11;
  const auto r = estimate_ls(gen_basic(Family::kCycle, 4), cfg);
  CHECK(r.value == 4.0);
  CHECK(r.repetitions.size() == 32);
  for (double x : r.repetitions) CHECK(x == 4.0);
  CHECK(r.config["s"] == 2);
  CHECK(r.seed == 11);

  CHECK(estimate_ls(Graph(6), cfg).value == 0.0);

  cfg.s = 100;
  const auto star = gen_basic(Family::kStar, 7);
  CHECK(estimate_ls(star, cfg).value == 1.0);
}

TEST_CASE("estimate_ls is deterministic and thread-count independent") {
  auto rng = substream(5, "graph");
  const auto g = gen_stacked_triangulation(50, rng);
  SamplerConfig cfg;
  cfg.s = 7;
  cfg.epsilon = 0.3;
  cfg.seed = 99;
  const auto one = estimate_ls(g, cfg);
  CHECK(one == estimate_ls(g, cfg));
  cfg.threads = 4;
  CHECK(one == estimate_ls(g, cfg));
}

TEST_CASE("median of group means") {
  std::vector<double> values{1, 1, 10, 10, 2, 2};
  CHECK(combine_repetitions(values, 0) == doctest::Approx(26.0 / 6));
  CHECK(combine_repetitions(values, 3) == 2.0);
}

TEST_CASE("config validation") {
  SamplerConfig cfg;
  cfg.s = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.s = 1;
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.epsilon = 0.5;
  cfg.repetitions = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
}

TEST_CASE("single shot is unbiased on C8") {
  const auto c8 = gen_basic(Family::kCycle, 8);
  constexpr int kTrials = 10000;
  auto rng = substream(17, "unbiased");
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    const double x =
        single_shot_estimate(c8, sample_without_replacement(8, 4, rng));
    sum += x;
    sq += x * x;
  }
  const double mean = sum / kTrials;
  const double var = sq / kTrials - mean * mean;
  CHECK(std::abs(mean - 8.0) <= 4 * std::sqrt(var / kTrials) + 1e-12);
}

TEST_CASE("single shot is unbiased on a planar graph") {
  auto grng = substream(2, "graph");
  const auto g = gen_stacked_triangulation(30, grng);
  const double ell = static_cast<double>(locally_superior_count(g));
  constexpr int kTrials = 10000;
  auto rng = substream(18, "unbiased");
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    const double x =
        single_shot_estimate(g, sample_without_replacement(30, 3, rng));
    sum += x;
    sq += x * x;
  }
  const double mean = sum / kTrials;
  const double var = sq / kTrials - mean * mean;
  CHECK(std::abs(mean - ell) <= 4 * std::sqrt(var / kTrials));
}
