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

#include "lsmatch/report.hpp"

#include "lsmatch/errors.hpp"

namespace lsmatch {
namespace {

template <typename T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

}  // namespace

void attach_exact(EstimateReport& report, std::size_t exact_m,
                  std::size_t ell) {
  report.exact_m = static_cast<std::int64_t>(exact_m);
  report.ell = static_cast<std::int64_t>(ell);
  if (exact_m > 0) {
    report.ratio = report.value / static_cast<double>(exact_m);
  } else {
    report.ratio.reset();
  }
}

nlohmann::json to_json(const EstimateReport& r) {
  nlohmann::json j;
  j["estimator"] = r.estimator;
  j["value"] = r.value;
  put(j, "branch", r.branch);
  j["config"] = r.config;
  j["seed"] = r.seed;
  if (!r.repetitions.empty()) j["repetitions"] = r.repetitions;
  put(j, "exact_m", r.exact_m);
  put(j, "ell", r.ell);
  put(j, "ratio", r.ratio);
  put(j, "words_peak", r.words_peak);
  if (!r.player_bits.empty()) j["player_bits"] = r.player_bits;
  put(j, "max_player_bits", r.max_player_bits);
  put(j, "z1", r.z1);
  put(j, "z2", r.z2);
  if (r.z3) {
    j["z3"] = r.z3->value();
    j["z3_half_units"] = r.z3->count;
  }
  return j;
}

EstimateReport report_from_json(const nlohmann::json& j) {
  try {
    EstimateReport r;
    r.estimator = j.at("estimator").get<std::string>();
    r.value = j.at("value").get<double>();
    get(j, "branch", r.branch);
    r.config = j.at("config");
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("repetitions")) {
      r.repetitions = j.at("repetitions").get<std::vector<double>>();
    }
    get(j, "exact_m", r.exact_m);
    get(j, "ell", r.ell);
    get(j, "ratio", r.ratio);
    get(j, "words_peak", r.words_peak);
    if (j.contains("player_bits")) {
      r.player_bits = j.at("player_bits").get<std::vector<std::uint64_t>>();
    }
    get(j, "max_player_bits", r.max_player_bits);
    get(j, "z1", r.z1);
    get(j, "z2", r.z2);
    if (j.contains("z3_half_units")) {
      r.z3 = HalfUnits{j.at("z3_half_units").get<std::int64_t>()};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace lsmatch
