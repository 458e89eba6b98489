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

#include "lsmatch/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "lsmatch/errors.hpp"
#include "lsmatch/random.hpp"

namespace lsmatch {

std::uint32_t default_repetitions(double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  const double raw = 8.0 / (epsilon * epsilon);
  return static_cast<std::uint32_t>(
      std::max(1.0, std::ceil(raw - 1e-9 * raw)));
}

std::uint32_t SamplerConfig::resolved_repetitions() const {
  return repetitions ? *repetitions : default_repetitions(epsilon);
}

void SamplerConfig::validate() const {
  if (s == 0) throw InputError("sample size s must be at least 1");
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (repetitions && *repetitions == 0) {
    throw InputError("repetition count must be at least 1");
  }
}

nlohmann::json to_json(const SamplerConfig& cfg) {
  nlohmann::json j;
  j["s"] = cfg.s;
  j["epsilon"] = cfg.epsilon;
  j["r"] = cfg.resolved_repetitions();
  if (cfg.median_groups > 1) j["median_groups"] = cfg.median_groups;
  return j;
}

std::vector<VertexId> repetition_sample(VertexId n, const SamplerConfig& cfg,
                                        std::uint32_t rep) {
  auto rng = substream(cfg.seed, "sample", rep);
  return sample_without_replacement(n, std::min(cfg.s, n), rng);
}

double scaled_count(VertexId n, std::size_t sample_size, std::size_t count) {
  return static_cast<double>(n) / static_cast<double>(sample_size) *
         static_cast<double>(count);
}

double combine_repetitions(std::span<const double> values,
                           std::uint32_t median_groups) {
  if (values.empty()) return 0.0;
  auto mean = [](std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
  };
  const std::size_t groups =
      std::min<std::size_t>(median_groups, values.size());
  if (groups <= 1) return mean(values);

  std::vector<double> means;
  means.reserve(groups);
  std::size_t begin = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t end = values.size() * (g + 1) / groups;
    means.push_back(mean(values.subspan(begin, end - begin)));
    begin = end;
  }
  std::sort(means.begin(), means.end());
  const std::size_t mid = means.size() / 2;
  return means.size() % 2 == 1 ? means[mid]
                               : (means[mid - 1] + means[mid]) / 2.0;
}

double single_shot_estimate(const Graph& g, std::span<const VertexId> sample) {
  if (sample.empty()) throw InputError("sample must be nonempty");
  std::vector<VertexId> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("sample contains a repeated vertex");
  }
  std::size_t count = 0;
  for (VertexId v : sorted) {
    if (is_locally_superior(g, v)) ++count;
  }
  return scaled_count(g.vertex_count(), sorted.size(), count);
}

EstimateReport estimate_ls(const Graph& g, const SamplerConfig& cfg) {
  cfg.validate();
  const VertexId n = g.vertex_count();
  const std::uint32_t r = cfg.resolved_repetitions();

  EstimateReport report;
  report.estimator = "ls-sampler";
  report.seed = cfg.seed;
  report.config = to_json(cfg);
  report.repetitions.assign(r, 0.0);

  if (n > 0) {
    auto run = [&](std::uint32_t first, std::uint32_t step) {
      for (std::uint32_t rep = first; rep < r; rep += step) {
        report.repetitions[rep] =
            single_shot_estimate(g, repetition_sample(n, cfg, rep));
      }
    };
    const std::uint32_t workers = std::clamp<std::uint32_t>(cfg.threads, 1, r);
    if (workers == 1) {
      run(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    }
  }
  report.value = combine_repetitions(report.repetitions, cfg.median_groups);
  return report;
}

}  // namespace lsmatch
