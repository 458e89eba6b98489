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

#include "lsmatch/lsmatch.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsmatch/errors.hpp"
#include "lsmatch/generators.hpp"
#include "lsmatch/graph.hpp"
#include "lsmatch/graph_io.hpp"
#include "lsmatch/matching.hpp"
#include "lsmatch/protocol.hpp"
#include "lsmatch/report.hpp"
#include "lsmatch/sampler.hpp"
#include "lsmatch/stream.hpp"

struct lsm_graph {
  lsmatch::Graph graph;
  std::optional<lsmatch::GeneratedGraph> origin;
};

namespace {

thread_local std::string g_last_error;

lsm_status fail(lsm_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
lsm_status guarded(Body&& body) {
  try {
    body();
    return LSM_OK;
  } catch (const lsmatch::FormatError& e) {
    return fail(LSM_ERR_FORMAT, e.what());
  } catch (const lsmatch::InputError& e) {
    return fail(LSM_ERR_INPUT, e.what());
  } catch (const lsmatch::CapabilityError& e) {
    return fail(LSM_ERR_CAPABILITY, e.what());
  } catch (const std::exception& e) {
    return fail(LSM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LSM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw lsmatch::InputError(what);
}

std::vector<std::string> header_for(const lsm_graph& g) {
  if (!g.origin) return {};
  const auto& o = *g.origin;
  std::string line = "family=" + std::string(lsmatch::to_string(o.spec.family)) +
                     " n=" + std::to_string(o.spec.n) +
                     " seed=" + std::to_string(o.spec.seed);
  if (o.spec.family == lsmatch::Family::kForestUnion) {
    line += " alpha=" + std::to_string(o.spec.alpha);
  }
  line += " witness_alpha=" + std::to_string(o.witness.alpha) +
          " witness=" + lsmatch::to_string(o.witness.provenance);
  return {line};
}

std::vector<lsmatch::VertexId> order_or_identity(const lsm_graph& g,
                                                 const uint32_t* order) {
  const auto n = g.graph.vertex_count();
  std::vector<lsmatch::VertexId> out(n);
  for (lsmatch::VertexId v = 0; v < n; ++v) out[v] = order ? order[v] : v;
  return out;
}

std::string dump(const lsmatch::EstimateReport& r) {
  return lsmatch::to_json(r).dump();
}

}  // namespace

extern "C" {

const char* lsm_version(void) { return "0.1.0"; }

const char* lsm_last_error(void) { return g_last_error.c_str(); }

void lsm_string_free(char* s) { std::free(s); }

lsm_status lsm_graph_from_edges(uint32_t n, const uint32_t* endpoints,
                                size_t edge_count, lsm_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    require(endpoints != nullptr || edge_count == 0,
            "endpoints must not be NULL");
    std::vector<lsmatch::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    }
    *out = new lsm_graph{lsmatch::Graph::from_edges(n, edges), std::nullopt};
  });
}

lsm_status lsm_graph_parse(const char* text, lsm_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new lsm_graph{lsmatch::parse_edge_list(text), std::nullopt};
  });
}

lsm_status lsm_graph_load(const char* path, lsm_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new lsm_graph{lsmatch::load_edge_list(path), std::nullopt};
  });
}

lsm_status lsm_graph_load_stream(const char* path, lsm_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "arguments must not be NULL");
    std::ifstream in(path);
    if (!in) {
      throw lsmatch::FormatError("cannot open stream file '" +
                                 std::string(path) + "'");
    }
    auto stream = lsmatch::read_stream(in);
    *out = new lsm_graph{lsmatch::graph_from_stream(stream), std::nullopt};
  });
}

lsm_status lsm_graph_generate(const char* family, uint32_t n, uint32_t alpha,
                              uint64_t seed, lsm_graph** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be NULL");
    lsmatch::GeneratorSpec spec;
    spec.family = lsmatch::family_from_string(family);
    spec.n = n;
    spec.alpha = alpha;
    spec.seed = seed;
    auto generated = lsmatch::generate(spec);
    auto graph = generated.graph;
    *out = new lsm_graph{std::move(graph), std::move(generated)};
  });
}

void lsm_graph_free(lsm_graph* g) { delete g; }

uint32_t lsm_graph_vertex_count(const lsm_graph* g) {
  return g ? g->graph.vertex_count() : 0;
}

size_t lsm_graph_edge_count(const lsm_graph* g) {
  return g ? g->graph.edge_count() : 0;
}

lsm_status lsm_graph_degree(const lsm_graph* g, uint32_t v, uint32_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be NULL");
    *out = g->graph.degree(v);
  });
}

lsm_status lsm_graph_is_locally_superior(const lsm_graph* g, uint32_t v,
                                         int* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be NULL");
    *out = lsmatch::is_locally_superior(g->graph, v) ? 1 : 0;
  });
}

lsm_status lsm_graph_to_text(const lsm_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dup_string(lsmatch::format_edge_list(g->graph, header_for(*g)));
  });
}

lsm_status lsm_graph_save(const lsm_graph* g, const char* path) {
  return guarded([&] {
    require(g != nullptr && path != nullptr, "arguments must not be NULL");
    std::ofstream out(path);
    if (!out) {
      throw lsmatch::FormatError("cannot write '" + std::string(path) + "'");
    }
    lsmatch::write_edge_list(out, g->graph, header_for(*g));
  });
}

lsm_status lsm_exact(const lsm_graph* g, lsm_exact_stats* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be NULL");
    out->max_matching = lsmatch::maximum_matching_size(g->graph);
    out->locally_superior = lsmatch::locally_superior_count(g->graph);
    out->a_prime_half_units = lsmatch::a_prime(g->graph).count;
    out->degeneracy = lsmatch::degeneracy(g->graph);
    const auto witness =
        g->origin ? g->origin->witness : lsmatch::ArboricityWitness{};
    out->witness_alpha = witness.alpha;
    out->witness_provenance = lsmatch::to_string(witness.provenance);
  });
}

lsm_status lsm_nash_williams_density(const lsm_graph* g, uint32_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be NULL");
    *out = lsmatch::nash_williams_density(g->graph, 20);
  });
}

lsm_status lsm_brute_force_matching(const lsm_graph* g, uint64_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "arguments must not be NULL");
    *out = lsmatch::brute_force_matching_size(g->graph);
  });
}

lsm_status lsm_report_attach_exact(const char* report_json,
                                   const lsm_graph* g, char** out) {
  return guarded([&] {
    require(report_json && g && out, "arguments must not be NULL");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(report_json);
    } catch (const nlohmann::json::exception& e) {
      throw lsmatch::FormatError(std::string("report is not JSON: ") +
                                 e.what());
    }
    auto report = lsmatch::report_from_json(j);
    lsmatch::attach_exact(report, lsmatch::maximum_matching_size(g->graph),
                          lsmatch::locally_superior_count(g->graph));
    *out = dup_string(dump(report));
  });
}

void lsm_sampler_config_init(lsm_sampler_config* cfg) {
  if (!cfg) return;
  *cfg = lsm_sampler_config{};
  cfg->s = 1;
  cfg->epsilon = 0.5;
  cfg->threads = 1;
}

lsm_status lsm_estimate_ls(const lsm_graph* g, const lsm_sampler_config* cfg,
                           char** report_json) {
  return guarded([&] {
    require(g && cfg && report_json, "arguments must not be NULL");
    lsmatch::SamplerConfig c;
    c.s = cfg->s;
    c.epsilon = cfg->epsilon;
    if (cfg->repetitions > 0) c.repetitions = cfg->repetitions;
    c.seed = cfg->seed;
    c.median_groups = cfg->median_groups;
    c.threads = cfg->threads == 0 ? 1 : cfg->threads;
    *report_json = dup_string(dump(lsmatch::estimate_ls(g->graph, c)));
  });
}

lsm_status lsm_random_order(uint32_t n, uint64_t seed, uint32_t* out) {
  return guarded([&] {
    require(out != nullptr || n == 0, "out must not be NULL");
    auto rng = lsmatch::substream(seed, "order");
    const auto order = lsmatch::random_vertex_order(n, rng);
    std::copy(order.begin(), order.end(), out);
  });
}

lsm_status lsm_stream_format(const lsm_graph* g, const uint32_t* order,
                             char** out) {
  return guarded([&] {
    require(g && out, "arguments must not be NULL");
    const auto stream =
        lsmatch::stream_from_graph(g->graph, order_or_identity(*g, order));
    *out = dup_string(lsmatch::format_stream(stream));
  });
}

lsm_status lsm_stream_approx_file(const char* path, double epsilon,
                                  uint64_t seed, char** report_json) {
  return guarded([&] {
    require(path && report_json, "arguments must not be NULL");
    std::ifstream in(path);
    if (!in) {
      throw lsmatch::FormatError("cannot open stream file '" +
                                 std::string(path) + "'");
    }
    lsmatch::TextSource source(in);
    *report_json =
        dup_string(dump(lsmatch::approx_matching_stream(source, epsilon, seed)));
  });
}

lsm_status lsm_stream_approx_graph(const lsm_graph* g, const uint32_t* order,
                                   double epsilon, uint64_t seed,
                                   char** report_json) {
  return guarded([&] {
    require(g && report_json, "arguments must not be NULL");
    const auto stream =
        lsmatch::stream_from_graph(g->graph, order_or_identity(*g, order));
    *report_json =
        dup_string(dump(lsmatch::approx_matching_stream(stream, epsilon, seed)));
  });
}

void lsm_protocol_config_init(lsm_protocol_config* cfg) {
  if (!cfg) return;
  *cfg = lsm_protocol_config{};
  cfg->players = 2;
  cfg->partition = LSM_PARTITION_RANDOM;
  cfg->epsilon = 0.25;
  cfg->d = 2;
  cfg->c_r = 10;
  cfg->tau = LSM_TAU_K;
}

lsm_status lsm_protocol_run(const lsm_graph* g, const lsm_protocol_config* cfg,
                            char** report_json) {
  return guarded([&] {
    require(g && cfg && report_json, "arguments must not be NULL");
    lsmatch::ProtocolConfig c;
    c.epsilon = cfg->epsilon;
    c.seed = cfg->seed;
    if (cfg->k) c.k = cfg->k;
    if (cfg->b) c.b = cfg->b;
    c.d = cfg->d;
    if (cfg->r_sample) c.r_sample = cfg->r_sample;
    c.c_r = cfg->c_r;
    c.tau = cfg->tau == LSM_TAU_K_OVER_12_5 ? lsmatch::TauRule::kKOver12_5
                                            : lsmatch::TauRule::kK;
    const auto mode = cfg->partition == LSM_PARTITION_ROUND_ROBIN
                          ? lsmatch::PartitionMode::kRoundRobin
                          : lsmatch::PartitionMode::kRandom;
    auto rng = lsmatch::substream(cfg->seed, "partition");
    const auto partition = lsmatch::partition_vertices(
        g->graph.vertex_count(), cfg->players, mode, rng);
    const auto views = lsmatch::build_player_views(g->graph, partition);
    auto result = lsmatch::final_protocol(views, c);
    auto j = lsmatch::to_json(result.report);
    j["config"]["partition"] =
        mode == lsmatch::PartitionMode::kRoundRobin ? "round-robin" : "random";
    if (cfg->include_transcript) {
      j["transcript"] = lsmatch::transcript_to_json(result.transcript);
    }
    *report_json = dup_string(j.dump());
  });
}

}  // extern "C"
