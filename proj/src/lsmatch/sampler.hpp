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
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "lsmatch/graph.hpp"
#include "lsmatch/report.hpp"

namespace lsmatch {

// ceil(8 / epsilon^2), robust to the float error in e.g. 8 / 0.2^2.
std::uint32_t default_repetitions(double epsilon);

struct SamplerConfig {
  // Requested sample size per repetition; clamped to n when applied.
  VertexId s = 1;
  double epsilon = 0.5;
  // Defaults to default_repetitions(epsilon).
  std::optional<std::uint32_t> repetitions;
  std::uint64_t seed = 0;
  // Values > 1 switch the combiner from a plain mean to the median of that
  // many group means.
  std::uint32_t median_groups = 0;
  // Worker threads for the repetitions. Output does not depend on it.
  std::uint32_t threads = 1;

  std::uint32_t resolved_repetitions() const;
  // Throws InputError on s == 0, epsilon <= 0, repetitions == 0.
  void validate() const;
};

nlohmann::json to_json(const SamplerConfig& cfg);

// Sample for repetition rep, drawn from substream (seed, "sample", rep). The
// streaming engine and the protocol referee use the same draw so that their
// outputs can be compared with the offline estimator exactly.
std::vector<VertexId> repetition_sample(VertexId n, const SamplerConfig& cfg,
                                        std::uint32_t rep);

// (n / sample_size) * count.
double scaled_count(VertexId n, std::size_t sample_size, std::size_t count);

// Mean of the repetitions, or median of group means.
double combine_repetitions(std::span<const double> values,
                           std::uint32_t median_groups);

// (n / |sample|) * |{v in sample : v locally superior}|.
double single_shot_estimate(const Graph& g, std::span<const VertexId> sample);

// Mean of r single-shot estimates, each on a fresh sample of size
// min(s, n).
EstimateReport estimate_ls(const Graph& g, const SamplerConfig& cfg);

}  // namespace lsmatch
