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

#include "lsmatch/stream.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "lsmatch/errors.hpp"

namespace lsmatch {
namespace {

std::string describe(std::size_t index, VertexId head) {
  return "record " + std::to_string(index) + " (head " +
         std::to_string(head) + ")";
}

template <typename T>
bool parse_uint(std::string_view token, T& out) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

VertexArrivalStream stream_from_graph(const Graph& g,
                                      std::span<const VertexId> vertex_order) {
  require_permutation(vertex_order, g.vertex_count());
  VertexArrivalStream stream;
  stream.n = g.vertex_count();
  stream.records.reserve(g.vertex_count());
  for (VertexId v : vertex_order) {
    auto nbrs = g.neighbors(v);
    stream.records.push_back({v, {nbrs.begin(), nbrs.end()}});
  }
  return stream;
}

Graph graph_from_stream(const VertexArrivalStream& stream) {
  StreamValidator validator(stream.n);
  std::vector<Edge> edges;
  for (const auto& rec : stream.records) {
    validator.observe(rec);
    for (VertexId u : rec.neighbors) {
      if (rec.head < u) edges.emplace_back(rec.head, u);
    }
  }
  validator.finish();
  return Graph::from_edges(stream.n, edges);
}

void write_stream(std::ostream& out, const VertexArrivalStream& stream) {
  out << stream.n << '\n';
  for (const auto& rec : stream.records) {
    out << rec.head << ':';
    for (VertexId u : rec.neighbors) out << ' ' << u;
    out << '\n';
  }
}

std::string format_stream(const VertexArrivalStream& stream) {
  std::ostringstream out;
  write_stream(out, stream);
  return out.str();
}

VertexArrivalStream read_stream(std::istream& in) {
  TextSource source(in);
  VertexArrivalStream stream;
  stream.n = source.vertex_count();
  StreamRecord rec;
  while (source.next(rec)) stream.records.push_back(rec);
  return stream;
}

VertexArrivalStream parse_stream(const std::string& text) {
  std::istringstream in(text);
  return read_stream(in);
}

bool MemorySource::next(StreamRecord& out) {
  if (pos_ >= stream_.records.size()) return false;
  out = stream_.records[pos_++];
  return true;
}

TextSource::TextSource(std::istream& in) : in_(in) {
  std::string line;
  while (std::getline(in_, line) && blank(line)) ++line_;
  const auto tokens = split_ws(line);
  if (!in_ && line.empty()) throw FormatError("stream: missing header line");
  if (tokens.size() != 1 || !parse_uint(tokens[0], n_)) {
    throw FormatError("stream line " + std::to_string(line_) +
                      ": expected vertex count, got '" + line + "'");
  }
}

bool TextSource::next(StreamRecord& out) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (blank(line)) continue;
    const auto colon = line.find(':');
    const auto where = "stream line " + std::to_string(line_);
    if (colon == std::string::npos) {
      throw FormatError(where + ": missing ':' after record head");
    }
    const auto head = split_ws(std::string_view(line).substr(0, colon));
    if (head.size() != 1 || !parse_uint(head[0], out.head)) {
      throw FormatError(where + ": bad record head");
    }
    out.neighbors.clear();
    for (auto tok : split_ws(std::string_view(line).substr(colon + 1))) {
      VertexId u = 0;
      if (!parse_uint(tok, u)) {
        throw FormatError(where + ": bad neighbor id '" + std::string(tok) +
                          "'");
      }
      out.neighbors.push_back(u);
    }
    return true;
  }
  return false;
}

StreamValidator::StreamValidator(VertexId n) : n_(n), arrived_(n, false) {}

void StreamValidator::observe(const StreamRecord& rec) {
  const auto where = describe(index_++, rec.head);
  if (rec.head >= n_) {
    throw FormatError(where + ": unknown vertex id");
  }
  if (arrived_[rec.head]) {
    throw FormatError(where + ": duplicate record head");
  }
  arrived_[rec.head] = true;

  std::vector<VertexId> sorted = rec.neighbors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw FormatError(where + ": repeated neighbor");
  }
  auto it = pending_.find(rec.head);
  std::size_t matched = 0;
  for (VertexId u : sorted) {
    if (u >= n_) {
      throw FormatError(where + ": neighbor " + std::to_string(u) +
                        " is not a vertex");
    }
    if (u == rec.head) throw FormatError(where + ": self-loop");
    if (arrived_[u]) {
      if (it == pending_.end() || !it->second.contains(u)) {
        throw FormatError(where + ": edge to " + std::to_string(u) +
                          " missing from that vertex's record");
      }
      ++matched;
    } else {
      pending_[u].insert(rec.head);
      it = pending_.find(rec.head);
    }
  }
  if (it != pending_.end()) {
    if (matched != it->second.size()) {
      throw FormatError(where + ": an earlier record lists this vertex but "
                        "this record does not list it back");
    }
    pending_.erase(it);
  }
}

void StreamValidator::finish() const {
  if (index_ != n_) {
    throw FormatError("stream ended after " + std::to_string(index_) +
                      " records, expected " + std::to_string(n_));
  }
}

LsStreamEstimator::LsStreamEstimator(VertexId n, const SamplerConfig& cfg,
                                     WordMeter& meter)
    : n_(n), cfg_(cfg) {
  cfg_.validate();
  const std::uint32_t r = cfg_.resolved_repetitions();
  samples_.resize(r);
  slots_.resize(r);
  std::uint64_t slot_count = 0;
  if (n_ > 0) {
    for (std::uint32_t rep = 0; rep < r; ++rep) {
      samples_[rep] = repetition_sample(n_, cfg_, rep);
      slots_[rep].resize(samples_[rep].size());
      slot_count += samples_[rep].size();
      for (std::uint32_t i = 0; i < samples_[rep].size(); ++i) {
        where_[samples_[rep][i]].push_back({rep, i});
      }
    }
  }
  // Each repetition is its own estimator: (id, degree, min-neighbor-degree)
  // per slot. The vertex -> slots index costs a word per slot plus one per
  // key, and every repetition keeps a tally.
  meter.add(4 * slot_count + where_.size() + r);
}

void LsStreamEstimator::consume(const StreamRecord& rec) {
  const auto degree = static_cast<std::uint32_t>(rec.neighbors.size());
  if (auto it = where_.find(rec.head); it != where_.end()) {
    for (auto [rep, i] : it->second) slots_[rep][i].degree = degree;
  }
  for (VertexId u : rec.neighbors) {
    auto it = where_.find(u);
    if (it == where_.end()) continue;
    for (auto [rep, i] : it->second) {
      auto& m = slots_[rep][i].min_neighbor_degree;
      m = std::min(m, degree);
    }
  }
}

const LsStreamEstimator::Slot& LsStreamEstimator::first_slot(VertexId u) const {
  auto it = where_.find(u);
  if (it == where_.end()) {
    throw InputError("vertex " + std::to_string(u) + " was not sampled");
  }
  const auto [rep, i] = it->second.front();
  return slots_[rep][i];
}

bool LsStreamEstimator::superior(const Slot& slot) {
  return slot.degree != kUnknown && slot.min_neighbor_degree != kUnknown &&
         slot.degree >= slot.min_neighbor_degree;
}

bool LsStreamEstimator::judged_superior(VertexId u) const {
  return superior(first_slot(u));
}

std::uint32_t LsStreamEstimator::min_neighbor_degree(VertexId u) const {
  return first_slot(u).min_neighbor_degree;
}

EstimateReport LsStreamEstimator::finish() const {
  EstimateReport report;
  report.estimator = "ls-stream";
  report.seed = cfg_.seed;
  report.config = to_json(cfg_);
  report.repetitions.assign(samples_.size(), 0.0);
  for (std::size_t rep = 0; rep < samples_.size(); ++rep) {
    const auto& slots = slots_[rep];
    if (slots.empty()) continue;
    const auto count = static_cast<std::size_t>(
        std::count_if(slots.begin(), slots.end(), superior));
    report.repetitions[rep] = scaled_count(n_, slots.size(), count);
  }
  report.value = combine_repetitions(report.repetitions, cfg_.median_groups);
  return report;
}

GreedyStreamMatcher::GreedyStreamMatcher(std::uint32_t cap, WordMeter& meter)
    : cap_(cap), meter_(meter) {
  if (cap == 0) throw InputError("greedy cap must be at least 1");
  // size and cap counters
  meter_.add(2);
}

void GreedyStreamMatcher::consume(const StreamRecord& rec) {
  if (size_ >= cap_ || matched_.contains(rec.head)) return;
  VertexId best = std::numeric_limits<VertexId>::max();
  for (VertexId u : rec.neighbors) {
    if (u < best && u != rec.head && !matched_.contains(u)) best = u;
  }
  if (best == std::numeric_limits<VertexId>::max()) return;
  matched_.insert(rec.head);
  matched_.insert(best);
  meter_.add(2);
  ++size_;
}

std::uint32_t ceil_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint32_t>(r * r == n ? r : r + 1);
}

EstimateReport run_ls_stream_estimator(RecordSource& source,
                                       const SamplerConfig& cfg) {
  const VertexId n = source.vertex_count();
  WordMeter meter;
  LsStreamEstimator estimator(n, cfg, meter);
  StreamValidator validator(n);
  StreamRecord rec;
  while (source.next(rec)) {
    validator.observe(rec);
    estimator.consume(rec);
  }
  validator.finish();
  auto report = estimator.finish();
  report.words_peak = meter.peak();
  return report;
}

EstimateReport run_ls_stream_estimator(const VertexArrivalStream& stream,
                                       const SamplerConfig& cfg) {
  MemorySource source(stream);
  return run_ls_stream_estimator(source, cfg);
}

GreedyStreamResult run_greedy_stream(RecordSource& source, std::uint32_t cap) {
  WordMeter meter;
  GreedyStreamMatcher greedy(cap, meter);
  StreamValidator validator(source.vertex_count());
  StreamRecord rec;
  while (source.next(rec)) {
    validator.observe(rec);
    greedy.consume(rec);
  }
  validator.finish();
  return {greedy.size(), greedy.capped()};
}

GreedyStreamResult run_greedy_stream(const VertexArrivalStream& stream,
                                     std::uint32_t cap) {
  MemorySource source(stream);
  return run_greedy_stream(source, cap);
}

EstimateReport approx_matching_stream(RecordSource& source, double epsilon,
                                      std::uint64_t seed) {
  const VertexId n = source.vertex_count();
  const std::uint32_t root = std::max<std::uint32_t>(1, ceil_sqrt(n));
  SamplerConfig cfg;
  cfg.s = root;
  cfg.epsilon = epsilon;
  cfg.seed = seed;

  WordMeter meter;
  LsStreamEstimator estimator(n, cfg, meter);
  GreedyStreamMatcher greedy(root, meter);
  StreamValidator validator(n);
  StreamRecord rec;
  while (source.next(rec)) {
    validator.observe(rec);
    estimator.consume(rec);
    greedy.consume(rec);
  }
  validator.finish();

  auto report = estimator.finish();
  report.estimator = "approx-matching-stream";
  report.config["greedy_cap"] = root;
  report.config["greedy_size"] = greedy.size();
  report.config["greedy_capped"] = greedy.capped();
  report.words_peak = meter.peak();
  if (!greedy.capped() && greedy.size() < root) {
    report.branch = kBranchGreedy;
    report.value = greedy.size();
  } else {
    report.branch = kBranchSampler;
  }
  return report;
}

EstimateReport approx_matching_stream(const VertexArrivalStream& stream,
                                      double epsilon, std::uint64_t seed) {
  MemorySource source(stream);
  return approx_matching_stream(source, epsilon, seed);
}

}  // namespace lsmatch
