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
#include <string>
#include <vector>

#include <json.hpp>

#include "lsmatch/graph.hpp"

namespace lsmatch {

// Output of every estimator in the library. Fields that do not apply to a
// given estimator stay empty and are omitted from the JSON form.
struct EstimateReport {
  std::string estimator;
  double value = 0.0;
  std::optional<std::string> branch;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<double> repetitions;

  std::optional<std::int64_t> exact_m;
  std::optional<std::int64_t> ell;
  std::optional<double> ratio;

  // Streaming accounting, in machine words.
  std::optional<std::uint64_t> words_peak;
  // Protocol accounting, in bits.
  std::vector<std::uint64_t> player_bits;
  std::optional<std::uint64_t> max_player_bits;

  std::optional<double> z1;
  std::optional<double> z2;
  std::optional<HalfUnits> z3;

  friend bool operator==(const EstimateReport&,
                         const EstimateReport&) = default;
};

// Records the exact oracle values; ratio = value / m when m > 0.
void attach_exact(EstimateReport& report, std::size_t exact_m,
                  std::size_t ell);

nlohmann::json to_json(const EstimateReport& report);
EstimateReport report_from_json(const nlohmann::json& j);

}  // namespace lsmatch
