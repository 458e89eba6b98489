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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lsmatch/graph.hpp"
#include "lsmatch/random.hpp"
#include "lsmatch/report.hpp"
#include "lsmatch/sampler.hpp"

namespace lsmatch {

// Simulator of the simultaneous vertex-partition model: t players each see the
// edges incident to their part, share a random seed with the referee, and send
// one message each. Nothing here touches a network.

enum class PartitionMode { kRandom, kRoundRobin };

struct Partition {
  std::uint32_t t = 1;
  std::vector<std::uint32_t> part_of;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws InputError unless 1 <= t <= n.
Partition partition_vertices(VertexId n, std::uint32_t t, PartitionMode mode,
                             Rng& rng);

// Records which party reads which view. A player may read only its own view
// and the referee reads none. Reads made outside any party context (input
// validation by the simulator) are not checked.
class AccessTracker {
 public:
  static constexpr std::uint32_t kNoParty = UINT32_MAX;
  static constexpr std::uint32_t kReferee = UINT32_MAX - 1;

  void enter(std::uint32_t party) { party_ = party; }
  void leave() { party_ = kNoParty; }
  void touch(std::uint32_t view_owner);

  bool violated() const { return violations_ > 0; }
  std::size_t reads() const { return reads_; }

 private:
  std::uint32_t party_ = kNoParty;
  std::size_t reads_ = 0;
  std::size_t violations_ = 0;
};

class PlayerView {
 public:
  PlayerView(std::uint32_t player, VertexId n,
             std::shared_ptr<const Partition> partition,
             std::vector<Edge> edges);

  std::uint32_t player() const { return player_; }
  VertexId vertex_count() const { return n_; }
  const Partition& partition() const { return *partition_; }
  bool owns(VertexId v) const { return partition_->part_of[v] == player_; }

  // Edges with at least one endpoint in this player's part, (u < v).
  std::span<const Edge> edges() const;

  void set_tracker(AccessTracker* tracker) { tracker_ = tracker; }

 private:
  std::uint32_t player_;
  VertexId n_;
  std::shared_ptr<const Partition> partition_;
  std::vector<Edge> edges_;
  AccessTracker* tracker_ = nullptr;
};

// Throws InputError if p does not cover g's vertices.
std::vector<PlayerView> build_player_views(const Graph& g, const Partition& p);

// Throws InputError unless the views agree on n and the partition, each view
// holds exactly edges incident to its part, and cross edges appear in both
// endpoint views.
void check_views(std::span<const PlayerView> views);

enum class Tag : std::uint8_t {
  kVertex,
  kDegree,
  kMinNeighborDegree,
  kEdge,
  kCount,
  kHalfUnits,
};

const char* to_string(Tag tag);

// Per-entry bit widths: ids and degrees ceil(log2(n+1)), edges twice that,
// counts ceil(log2(m+1)), half-unit values ceil(log2(4n+1)) + 1.
struct BitWidths {
  std::uint32_t id_bits = 0;
  std::uint32_t count_bits = 0;
  std::uint32_t half_bits = 0;

  static BitWidths for_graph(VertexId n, std::size_t edge_count);
  std::uint32_t width(Tag tag) const;
};

struct MessageEntry {
  Tag tag;
  std::int64_t value;

  friend bool operator==(const MessageEntry&, const MessageEntry&) = default;
};

struct Message {
  std::uint32_t player = 0;
  std::string thread;
  std::vector<MessageEntry> entries;
  std::uint64_t bit_size = 0;

  void push(Tag tag, std::int64_t value, const BitWidths& widths) {
    entries.push_back({tag, value});
    bit_size += widths.width(tag);
  }
};

std::uint64_t recompute_bits(const Message& m, const BitWidths& widths);
nlohmann::json transcript_to_json(std::span<const Message> messages);

// Edges travel as one integer u * n + v.
std::int64_t encode_edge(Edge e, VertexId n);
Edge decode_edge(std::int64_t code, VertexId n);

// Widths derived from the views (n and the number of distinct edges).
BitWidths widths_for_views(std::span<const PlayerView> views);

// --- locally superior sub-protocol --------------------------------------

// For each sampled u: the owner of u sends deg(u); every player with a
// neighbor of u in its part sends the minimum degree of such neighbors.
Message ls_player_message(const PlayerView& view,
                          std::span<const VertexId> sampled,
                          const BitWidths& widths);

struct LsProtocolResult {
  std::vector<Message> messages;
  double z1 = 0.0;
  EstimateReport report;
  // Referee verdict for every vertex sampled in some repetition.
  std::map<VertexId, bool> decisions;
};

// Samples come from repetition_sample(n, cfg, rep), i.e. the shared seed.
LsProtocolResult ls_protocol(std::span<const PlayerView> views,
                             const SamplerConfig& cfg,
                             AccessTracker* tracker = nullptr);

// --- Sample_{b,d,r} edge-sampling primitive -------------------------------

// c : V -> [0, b) for repetition rep, from substream (seed, "coloring", rep).
std::vector<std::uint32_t> shared_coloring(VertexId n, std::uint32_t b,
                                           std::uint64_t seed,
                                           std::uint32_t rep);

// Color class of an edge for subsets of size d, or nullopt when the edge
// does not belong to any size-d class.
std::optional<std::pair<std::uint32_t, std::uint32_t>> color_class(
    Edge e, std::span<const std::uint32_t> colors, std::uint32_t d);

// One uniform edge of the player's owned portion of every nonempty E_K, each
// followed by the owned count. A player owns the edges whose lower endpoint
// lies in its part.
Message sample_player_message(const PlayerView& view,
                              std::span<const std::uint32_t> colors,
                              std::uint32_t d, Rng& rng,
                              const BitWidths& widths);

// One instance of Sample_{b,d,1} under a fixed coloring. Appends the player
// messages to messages (one per player) and returns the referee's picks.
std::vector<Edge> sample_instance(std::span<const PlayerView> views,
                                  std::span<const std::uint32_t> colors,
                                  std::uint32_t d, std::uint64_t seed,
                                  std::uint32_t rep,
                                  std::vector<Message>& messages,
                                  AccessTracker* tracker = nullptr);

struct SampleResult {
  // One message per player, covering all repetitions.
  std::vector<Message> messages;
  // Union over all classes and repetitions, sorted.
  std::vector<Edge> edges;
};

SampleResult sample_primitive(std::span<const PlayerView> views,
                              std::uint32_t b, std::uint32_t d,
                              std::uint32_t r, std::uint64_t seed,
                              AccessTracker* tracker = nullptr);

// --- A'(G) sub-protocol ------------------------------------------------------

Message a_prime_player_message(const PlayerView& view,
                               const BitWidths& widths);

struct APrimeResult {
  std::vector<Message> messages;
  HalfUnits z3;
};

APrimeResult a_prime_protocol(std::span<const PlayerView> views,
                              AccessTracker* tracker = nullptr);

// --- combined protocol -------------------------------------------------------

enum class TauRule { kK, kKOver12_5 };

struct ProtocolConfig {
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  // Defaults: k = ceil(n^(1/3)), b = 100k, r_sample = c_r * ceil(log2(k+1)).
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> b;
  std::uint32_t d = 2;
  std::optional<std::uint32_t> r_sample;
  std::uint32_t c_r = 10;
  TauRule tau = TauRule::kK;
};

struct ResolvedProtocol {
  std::uint32_t k = 1;
  std::uint32_t b = 2;
  std::uint32_t d = 2;
  std::uint32_t r_sample = 1;
  VertexId s = 1;
  std::uint32_t ls_repetitions = 1;
};

// Throws InputError when the resolved values violate b >= 2, d in {1,2},
// r_sample >= 1, k >= 1 or epsilon > 0.
ResolvedProtocol resolve(const ProtocolConfig& cfg, VertexId n);

// Smallest k >= 1 with k^3 >= n.
std::uint32_t ceil_cbrt(std::uint64_t n);

// z3 >= tau, evaluated exactly.
bool meets_threshold(HalfUnits z3, std::uint32_t k, TauRule rule);

const char* to_string(TauRule rule);

struct FinalProtocolResult {
  EstimateReport report;
  std::vector<Message> transcript;
};

// Runs the three sub-protocols on the same views. The referee outputs z1 when
// z3 >= tau, else z2 = maximum matching size of the sampled edges.
FinalProtocolResult final_protocol(std::span<const PlayerView> views,
                                   const ProtocolConfig& cfg,
                                   AccessTracker* tracker = nullptr);

inline constexpr const char* kBranchZ1 = "z1";
inline constexpr const char* kBranchZ2 = "z2";

}  // namespace lsmatch
