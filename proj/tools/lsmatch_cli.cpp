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

// lsmatch command-line front end. Talks to the library only through the C
// interface in lsmatch/lsmatch.h.
//
//   lsmatch gen      --family F --n N --seed S [--alpha A] [--format edges|stream]
//   lsmatch exact    (FILE | --family F --n N --seed S)
//   lsmatch ls       (FILE | generator flags) --seed S [--s K] [--epsilon E]
//   lsmatch stream   (FILE | --stream-file PATH | generator flags) --seed S
//   lsmatch protocol (FILE | generator flags) --seed S [--t T] [--players MODE]
//   lsmatch bench    --family F[,F..] --n N[,N..] --trials K --seed S
//
// Exit codes: 0 ok, 1 internal, 2 usage, 3 input format, 4 capability.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsmatch/lsmatch.h"

namespace {

using nlohmann::json;

enum ExitCode {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitFormat = 3,
  kExitCapability = 4,
};

struct Failure : std::runtime_error {
  Failure(int code, const std::string& what)
      : std::runtime_error(what), code(code) {}
  int code;
};

int exit_code_for(lsm_status st) {
  switch (st) {
    case LSM_OK:
      return kExitOk;
    case LSM_ERR_INPUT:
      return kExitUsage;
    case LSM_ERR_FORMAT:
      return kExitFormat;
    case LSM_ERR_CAPABILITY:
      return kExitCapability;
    default:
      return kExitInternal;
  }
}

void check(lsm_status st) {
  if (st != LSM_OK) throw Failure(exit_code_for(st), lsm_last_error());
}

struct GraphDeleter {
  void operator()(lsm_graph* g) const { lsm_graph_free(g); }
};
using GraphPtr = std::unique_ptr<lsm_graph, GraphDeleter>;

// Takes ownership of a string allocated by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  lsm_string_free(s);
  return out;
}

// --- shared options ------------------------------------------------------

struct InputOptions {
  std::string file;
  std::string family;
  std::uint32_t n = 0;
  std::uint32_t alpha = 1;
  std::optional<std::uint64_t> seed;
};

void add_generator_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--family", in.family,
                  "path, cycle, star, grid, stacked-triangulation, "
                  "forest-union, named-example");
  cmd->add_option("--n", in.n, "vertex count")->check(CLI::PositiveNumber);
  cmd->add_option("--alpha", in.alpha, "forests in a forest-union")
      ->check(CLI::PositiveNumber);
}

void add_seed_flag(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--seed", in.seed, "RNG seed (required)")->required();
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("graph", in.file, "edge-list file");
  add_generator_flags(cmd, in);
}

GraphPtr generate_graph(const std::string& family, std::uint32_t n,
                        std::uint32_t alpha, std::uint64_t seed) {
  lsm_graph* g = nullptr;
  check(lsm_graph_generate(family.c_str(), n, alpha, seed, &g));
  return GraphPtr(g);
}

GraphPtr load_input(const InputOptions& in) {
  const bool have_file = !in.file.empty();
  const bool have_gen = !in.family.empty();
  if (have_file == have_gen) {
    throw Failure(kExitUsage,
                  "give exactly one of: a graph file, or --family with --n");
  }
  if (have_file) {
    lsm_graph* g = nullptr;
    check(lsm_graph_load(in.file.c_str(), &g));
    return GraphPtr(g);
  }
  if (in.n == 0) throw Failure(kExitUsage, "--family needs --n");
  if (!in.seed) throw Failure(kExitUsage, "--family needs --seed");
  return generate_graph(in.family, in.n, in.alpha, *in.seed);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Failure(kExitInternal, "cannot write '" + out_path + "'");
  f << text;
  if (!f) throw Failure(kExitInternal, "write to '" + out_path + "' failed");
}

std::string attach_exact(const std::string& report, const lsm_graph* g) {
  char* out = nullptr;
  check(lsm_report_attach_exact(report.c_str(), g, &out));
  return take(out);
}

std::uint32_t ceil_sqrt(std::uint32_t n) {
  auto r = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(n)));
  while (static_cast<std::uint64_t>(r) * r < n) ++r;
  while (r > 0 && static_cast<std::uint64_t>(r - 1) * (r - 1) >= n) --r;
  return r;
}

std::vector<std::uint32_t> random_order(std::uint32_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> order(n);
  check(lsm_random_order(n, seed, order.data()));
  return order;
}

json exact_json(const lsm_graph* g, bool density) {
  lsm_exact_stats st{};
  check(lsm_exact(g, &st));
  json j;
  j["n"] = lsm_graph_vertex_count(g);
  j["edges"] = lsm_graph_edge_count(g);
  j["m"] = st.max_matching;
  j["ell"] = st.locally_superior;
  if (st.max_matching > 0) {
    j["ell_over_m"] = static_cast<double>(st.locally_superior) /
                      static_cast<double>(st.max_matching);
  }
  j["a_prime"] = static_cast<double>(st.a_prime_half_units) / 2.0;
  j["a_prime_half_units"] = st.a_prime_half_units;
  j["degeneracy"] = st.degeneracy;
  if (st.witness_alpha > 0) {
    j["witness_alpha"] = st.witness_alpha;
    j["witness_provenance"] = st.witness_provenance;
  }
  if (density) {
    std::uint32_t d = 0;
    check(lsm_nash_williams_density(g, &d));
    j["nash_williams_density"] = d;
  }
  return j;
}

// --- estimator runs, shared by the single-run commands and bench ----------

struct LsOptions {
  std::optional<std::uint32_t> s;
  double epsilon = 0.5;
  std::uint32_t repetitions = 0;
  std::uint32_t median_groups = 0;
  std::uint32_t threads = 1;
};

std::string run_ls(const lsm_graph* g, const LsOptions& o, std::uint64_t seed) {
  lsm_sampler_config cfg;
  lsm_sampler_config_init(&cfg);
  cfg.s = o.s ? *o.s : std::max<std::uint32_t>(1, ceil_sqrt(lsm_graph_vertex_count(g)));
  cfg.epsilon = o.epsilon;
  cfg.repetitions = o.repetitions;
  cfg.seed = seed;
  cfg.median_groups = o.median_groups;
  cfg.threads = o.threads;
  char* out = nullptr;
  check(lsm_estimate_ls(g, &cfg, &out));
  return take(out);
}

std::string run_stream(const lsm_graph* g, double epsilon, std::uint64_t seed) {
  const auto order = random_order(lsm_graph_vertex_count(g), seed);
  char* out = nullptr;
  check(lsm_stream_approx_graph(g, order.data(), epsilon, seed, &out));
  return take(out);
}

struct ProtocolOptions {
  std::uint32_t t = 2;
  std::string players = "random";
  std::string tau = "k";
  double epsilon = 0.25;
  std::uint32_t k = 0;
  std::uint32_t b = 0;
  std::uint32_t d = 2;
  std::uint32_t r_sample = 0;
  std::uint32_t c_r = 10;
  bool transcript = false;
};

std::string run_protocol(const lsm_graph* g, const ProtocolOptions& o,
                         std::uint64_t seed) {
  lsm_protocol_config cfg;
  lsm_protocol_config_init(&cfg);
  cfg.players = o.t;
  cfg.partition =
      o.players == "round-robin" ? LSM_PARTITION_ROUND_ROBIN : LSM_PARTITION_RANDOM;
  cfg.epsilon = o.epsilon;
  cfg.seed = seed;
  cfg.k = o.k;
  cfg.b = o.b;
  cfg.d = o.d;
  cfg.r_sample = o.r_sample;
  cfg.c_r = o.c_r;
  cfg.tau = o.tau == "k-over-12.5" ? LSM_TAU_K_OVER_12_5 : LSM_TAU_K;
  cfg.include_transcript = o.transcript ? 1 : 0;
  char* out = nullptr;
  check(lsm_protocol_run(g, &cfg, &out));
  return take(out);
}

void add_protocol_flags(CLI::App* cmd, ProtocolOptions& o) {
  cmd->add_option("--t", o.t, "player count")->check(CLI::PositiveNumber);
  cmd->add_option("--players", o.players, "vertex partition mode")
      ->check(CLI::IsMember({"random", "round-robin"}));
  cmd->add_option("--tau", o.tau, "referee threshold")
      ->check(CLI::IsMember({"k", "k-over-12.5"}));
  cmd->add_option("--k", o.k, "threshold parameter (default ceil(n^(1/3)))");
  cmd->add_option("--b", o.b, "colors for the edge sampler (default 100k)");
  cmd->add_option("--d", o.d, "color-set size")->check(CLI::IsMember({1, 2}));
  cmd->add_option("--r-sample", o.r_sample, "edge sampler repetitions");
  cmd->add_option("--c-r", o.c_r, "edge sampler repetition constant");
}

// --- bench ----------------------------------------------------------------

struct BenchOptions {
  std::vector<std::string> families;
  std::vector<std::uint32_t> ns;
  std::uint32_t alpha = 1;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  std::string estimator = "ls";
  std::uint32_t threads = 1;
  std::string out;
  LsOptions ls;
  ProtocolOptions protocol;
  bool epsilon_set = false;
  double epsilon = 0.0;
};

const char* kCsvHeader =
    "family,n,alpha,seed,edges,m,ell,ratio,estimator,epsilon,t,estimate,"
    "branch,space,space_unit\n";

std::string csv_number(double x) { return json(x).dump(); }

std::string bench_row(const BenchOptions& o, const std::string& family,
                      std::uint32_t n, std::uint64_t seed) {
  const auto g = generate_graph(family, n, o.alpha, seed);
  lsm_exact_stats st{};
  check(lsm_exact(g.get(), &st));

  std::string report;
  double epsilon = 0.0;
  std::string t;
  if (o.estimator == "ls") {
    auto ls = o.ls;
    if (o.epsilon_set) ls.epsilon = o.epsilon;
    ls.threads = 1;
    epsilon = ls.epsilon;
    report = run_ls(g.get(), ls, seed);
  } else if (o.estimator == "stream") {
    epsilon = o.epsilon_set ? o.epsilon : 0.25;
    report = run_stream(g.get(), epsilon, seed);
  } else {
    auto p = o.protocol;
    if (o.epsilon_set) p.epsilon = o.epsilon;
    epsilon = p.epsilon;
    t = std::to_string(p.t);
    report = run_protocol(g.get(), p, seed);
  }
  const auto j = json::parse(report);

  std::ostringstream row;
  row << family << ',' << lsm_graph_vertex_count(g.get()) << ',';
  if (family == "forest-union") row << o.alpha;
  row << ',' << seed << ',' << lsm_graph_edge_count(g.get()) << ','
      << st.max_matching << ',' << st.locally_superior << ',';
  if (st.max_matching > 0) {
    row << csv_number(static_cast<double>(st.locally_superior) /
                      static_cast<double>(st.max_matching));
  }
  row << ',' << o.estimator << ',' << csv_number(epsilon) << ',' << t << ','
      << csv_number(j.at("value").get<double>()) << ','
      << j.value("branch", std::string()) << ',';
  if (j.contains("words_peak")) {
    row << j["words_peak"].get<std::uint64_t>() << ",words";
  } else if (j.contains("max_player_bits")) {
    row << j["max_player_bits"].get<std::uint64_t>() << ",bits";
  } else {
    row << ',';
  }
  row << '\n';
  return row.str();
}

std::string run_bench(const BenchOptions& o) {
  struct Job {
    std::string family;
    std::uint32_t n;
    std::uint64_t seed;
  };
  auto families = o.families;
  auto ns = o.ns;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<Job> jobs;
  for (const auto& f : families) {
    for (auto n : ns) {
      for (std::uint32_t i = 0; i < o.trials; ++i) jobs.push_back({f, n, o.seed + i});
    }
  }

  // Rows land in job order whatever the worker count.
  std::vector<std::string> rows(jobs.size());
  std::vector<std::optional<Failure>> errors(jobs.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < jobs.size(); i += stride) {
      try {
        rows[i] = bench_row(o, jobs[i].family, jobs[i].n, jobs[i].seed);
      } catch (const Failure& f) {
        errors[i] = f;
      }
    }
  };
  const std::uint32_t workers = std::max<std::uint32_t>(1, o.threads);
  {
    std::vector<std::jthread> pool;
    for (std::uint32_t w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
    work(0, workers);
  }
  for (auto& e : errors) {
    if (e) throw *e;
  }
  std::string csv = kCsvHeader;
  for (auto& r : rows) csv += r;
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching-size estimation via locally superior vertices"};
  app.set_version_flag("--version", std::string(lsm_version()));
  app.require_subcommand(1);

  InputOptions in;
  std::string out;
  std::string format = "edges";
  bool density = false;
  bool with_exact = false;
  LsOptions ls;
  double stream_epsilon = 0.25;
  std::string stream_file;
  ProtocolOptions protocol;
  BenchOptions bench;

  auto* gen = app.add_subcommand("gen", "generate a graph");
  add_generator_flags(gen, in);
  gen->get_option("--family")->required();
  gen->get_option("--n")->required();
  add_seed_flag(gen, in);
  gen->add_option("--format", format, "edges or stream (seeded arrival order)")
      ->check(CLI::IsMember({"edges", "stream"}));
  gen->add_option("--out", out, "output file (default stdout)");

  auto* exact = app.add_subcommand("exact", "exact m, l, A' and degeneracy");
  add_input(exact, in);
  exact->add_option("--seed", in.seed, "generator seed");
  exact->add_flag("--density", density,
                  "also run the exhaustive density scan (n <= 20)");
  exact->add_option("--out", out, "output file (default stdout)");

  auto* lscmd = app.add_subcommand("ls", "sampling estimate of l(G)");
  add_input(lscmd, in);
  add_seed_flag(lscmd, in);
  lscmd->add_option("--s", ls.s, "sample size (default ceil(sqrt(n)))")
      ->check(CLI::PositiveNumber);
  lscmd->add_option("--epsilon", ls.epsilon, "accuracy target")
      ->check(CLI::PositiveNumber);
  lscmd->add_option("--repetitions", ls.repetitions,
                    "repetitions (default ceil(8/epsilon^2))");
  lscmd->add_option("--median-groups", ls.median_groups,
                    "median of this many group means");
  lscmd->add_option("--threads", ls.threads, "worker threads");
  lscmd->add_flag("--exact", with_exact, "attach exact m and l");
  lscmd->add_option("--out", out, "output file (default stdout)");

  auto* stream = app.add_subcommand("stream", "one-pass vertex-arrival estimate");
  add_input(stream, in);
  add_seed_flag(stream, in);
  stream->add_option("--stream-file", stream_file, "vertex-arrival stream file");
  stream->add_option("--epsilon", stream_epsilon, "accuracy target")
      ->check(CLI::PositiveNumber);
  stream->add_flag("--exact", with_exact, "attach exact m and l");
  stream->add_option("--out", out, "output file (default stdout)");

  auto* proto = app.add_subcommand("protocol", "simultaneous protocol run");
  add_input(proto, in);
  add_seed_flag(proto, in);
  proto->add_option("--epsilon", protocol.epsilon, "accuracy target")
      ->check(CLI::PositiveNumber);
  add_protocol_flags(proto, protocol);
  proto->add_flag("--transcript", protocol.transcript, "include all messages");
  proto->add_flag("--exact", with_exact, "attach exact m and l");
  proto->add_option("--out", out, "output file (default stdout)");

  auto* benchcmd = app.add_subcommand("bench", "sweep generated graphs, emit CSV");
  benchcmd->add_option("--family", bench.families, "families, comma separated")
      ->required()
      ->delimiter(',');
  benchcmd->add_option("--n", bench.ns, "vertex counts, comma separated")
      ->required()
      ->delimiter(',');
  benchcmd->add_option("--alpha", bench.alpha, "forests in a forest-union")
      ->check(CLI::PositiveNumber);
  benchcmd->add_option("--trials", bench.trials, "seeds per (family, n)")
      ->check(CLI::PositiveNumber);
  benchcmd->add_option("--seed", bench.seed, "first seed (required)")->required();
  benchcmd->add_option("--estimator", bench.estimator, "ls, stream or protocol")
      ->check(CLI::IsMember({"ls", "stream", "protocol"}));
  auto* bench_eps = benchcmd->add_option("--epsilon", bench.epsilon,
                                         "accuracy target")
                        ->check(CLI::PositiveNumber);
  benchcmd->add_option("--s", bench.ls.s, "ls sample size")
      ->check(CLI::PositiveNumber);
  add_protocol_flags(benchcmd, bench.protocol);
  benchcmd->add_option("--threads", bench.threads, "worker threads");
  benchcmd->add_option("--out", bench.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const auto g = generate_graph(in.family, in.n, in.alpha, *in.seed);
      char* text = nullptr;
      if (format == "stream") {
        const auto order = random_order(lsm_graph_vertex_count(g.get()), *in.seed);
        check(lsm_stream_format(g.get(), order.data(), &text));
      } else {
        check(lsm_graph_to_text(g.get(), &text));
      }
      emit(out, take(text));
    } else if (*exact) {
      const auto g = load_input(in);
      emit(out, exact_json(g.get(), density).dump() + "\n");
    } else if (*lscmd) {
      const auto g = load_input(in);
      auto report = run_ls(g.get(), ls, *in.seed);
      if (with_exact) report = attach_exact(report, g.get());
      emit(out, report + "\n");
    } else if (*stream) {
      std::string report;
      if (!stream_file.empty()) {
        if (!in.file.empty() || !in.family.empty()) {
          throw Failure(kExitUsage, "--stream-file excludes other graph input");
        }
        char* r = nullptr;
        check(lsm_stream_approx_file(stream_file.c_str(), stream_epsilon,
                                     *in.seed, &r));
        report = take(r);
        if (with_exact) {
          lsm_graph* g = nullptr;
          check(lsm_graph_load_stream(stream_file.c_str(), &g));
          GraphPtr owned(g);
          report = attach_exact(report, owned.get());
        }
      } else {
        const auto g = load_input(in);
        report = run_stream(g.get(), stream_epsilon, *in.seed);
        if (with_exact) report = attach_exact(report, g.get());
      }
      emit(out, report + "\n");
    } else if (*proto) {
      const auto g = load_input(in);
      auto report = run_protocol(g.get(), protocol, *in.seed);
      if (with_exact) report = attach_exact(report, g.get());
      emit(out, report + "\n");
    } else if (*benchcmd) {
      bench.epsilon_set = bench_eps->count() > 0;
      emit(bench.out, run_bench(bench));
    }
  } catch (const Failure& f) {
    std::cerr << "lsmatch: " << f.what() << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "lsmatch: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
