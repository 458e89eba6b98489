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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lsmatch/graph.hpp"
#include "lsmatch/report.hpp"
#include "lsmatch/sampler.hpp"

namespace lsmatch {

struct StreamRecord {
  VertexId head = 0;
  std::vector<VertexId> neighbors;

  friend bool operator==(const StreamRecord&, const StreamRecord&) = default;
};

// Vertex-arrival stream: every vertex appears once as a record head followed
// by its full neighbor list, so each edge is seen from both endpoints.
struct VertexArrivalStream {
  VertexId n = 0;
  std::vector<StreamRecord> records;

  friend bool operator==(const VertexArrivalStream&,
                         const VertexArrivalStream&) = default;
};

VertexArrivalStream stream_from_graph(const Graph& g,
                                      std::span<const VertexId> vertex_order);

// Validates the stream and rebuilds the graph it describes.
Graph graph_from_stream(const VertexArrivalStream& stream);

// Text form: a line "n", then one line "v: u1 u2 ..." per record.
void write_stream(std::ostream& out, const VertexArrivalStream& stream);
std::string format_stream(const VertexArrivalStream& stream);
VertexArrivalStream read_stream(std::istream& in);
VertexArrivalStream parse_stream(const std::string& text);

// One-pass access to records. n is known before the first record.
class RecordSource {
 public:
  virtual ~RecordSource() = default;
  virtual VertexId vertex_count() const = 0;
  // Fills out and returns true, or returns false at end of stream.
  virtual bool next(StreamRecord& out) = 0;
};

class MemorySource final : public RecordSource {
 public:
  explicit MemorySource(const VertexArrivalStream& stream)
      : stream_(stream) {}
  VertexId vertex_count() const override { return stream_.n; }
  bool next(StreamRecord& out) override;

 private:
  const VertexArrivalStream& stream_;
  std::size_t pos_ = 0;
};

// Reads records from text lazily; never holds more than one record.
class TextSource final : public RecordSource {
 public:
  explicit TextSource(std::istream& in);
  VertexId vertex_count() const override { return n_; }
  bool next(StreamRecord& out) override;

 private:
  std::istream& in_;
  VertexId n_ = 0;
  std::size_t line_ = 1;
};

// Checks the stream invariants as records go by and throws FormatError naming
// the first offending record. This is test instrumentation: its memory is not
// part of the algorithm's space accounting.
class StreamValidator {
 public:
  explicit StreamValidator(VertexId n);
  void observe(const StreamRecord& record);
  void finish() const;

 private:
  VertexId n_;
  std::size_t index_ = 0;
  std::vector<bool> arrived_;
  // pending_[v] = heads already seen that list v, awaiting v's record.
  std::unordered_map<VertexId, std::unordered_set<VertexId>> pending_;
};

// Machine words of live algorithm state.
class WordMeter {
 public:
  void add(std::uint64_t words) {
    current_ += words;
    if (current_ > peak_) peak_ = current_;
  }
  void release(std::uint64_t words) { current_ -= words; }
  std::uint64_t current() const { return current_; }
  std::uint64_t peak() const { return peak_; }

 private:
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
};

// Streaming form of the sampling estimator. All samples are drawn before the
// pass; per sampled vertex it keeps its degree once its record arrives and the
// minimum degree among neighbors whose records have arrived.
class LsStreamEstimator {
 public:
  static constexpr std::uint32_t kUnknown = UINT32_MAX;

  LsStreamEstimator(VertexId n, const SamplerConfig& cfg, WordMeter& meter);

  void consume(const StreamRecord& record);
  EstimateReport finish() const;

  std::uint32_t repetitions() const {
    return static_cast<std::uint32_t>(samples_.size());
  }
  std::span<const VertexId> sample(std::uint32_t rep) const {
    return samples_[rep];
  }
  // Whether sampled vertex u is locally superior given the records so far.
  bool judged_superior(VertexId u) const;
  std::uint32_t min_neighbor_degree(VertexId u) const;

 private:
  struct Slot {
    std::uint32_t degree = kUnknown;
    std::uint32_t min_neighbor_degree = kUnknown;
  };
  static bool superior(const Slot& slot);
  const Slot& first_slot(VertexId u) const;

  VertexId n_;
  SamplerConfig cfg_;
  std::vector<std::vector<VertexId>> samples_;
  std::vector<std::vector<Slot>> slots_;
  // Sampled vertex -> (repetition, slot) for every slot holding it.
  std::unordered_map<VertexId,
                     std::vector<std::pair<std::uint32_t, std::uint32_t>>>
      where_;
};

class GreedyStreamMatcher {
 public:
  GreedyStreamMatcher(std::uint32_t cap, WordMeter& meter);
  void consume(const StreamRecord& record);

  std::uint32_t size() const { return size_; }
  bool capped() const { return size_ >= cap_; }

 private:
  std::uint32_t cap_;
  std::uint32_t size_ = 0;
  std::unordered_set<VertexId> matched_;
  WordMeter& meter_;
};

struct GreedyStreamResult {
  std::uint32_t size = 0;
  bool capped = false;
};

// ceil(sqrt(n)) in integer arithmetic.
std::uint32_t ceil_sqrt(std::uint64_t n);

EstimateReport run_ls_stream_estimator(RecordSource& source,
                                       const SamplerConfig& cfg);
EstimateReport run_ls_stream_estimator(const VertexArrivalStream& stream,
                                       const SamplerConfig& cfg);

GreedyStreamResult run_greedy_stream(RecordSource& source, std::uint32_t cap);
GreedyStreamResult run_greedy_stream(const VertexArrivalStream& stream,
                                     std::uint32_t cap);

// Runs the estimator (s = ceil(sqrt n)) and the greedy matcher
// (cap = ceil(sqrt n)) in the same pass. Reports the greedy size when greedy
// finished uncapped below ceil(sqrt n), else the estimator value.
EstimateReport approx_matching_stream(RecordSource& source, double epsilon,
                                      std::uint64_t seed);
EstimateReport approx_matching_stream(const VertexArrivalStream& stream,
                                      double epsilon, std::uint64_t seed);

inline constexpr const char* kBranchGreedy = "greedy-exact-maximal";
inline constexpr const char* kBranchSampler = "sampler";

}  // namespace lsmatch
