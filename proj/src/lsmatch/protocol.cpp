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

#include "lsmatch/protocol.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>

#include "lsmatch/errors.hpp"
#include "lsmatch/matching.hpp"

namespace lsmatch {
namespace {

constexpr std::uint32_t kNoDegree = std::numeric_limits<std::uint32_t>::max();

// RAII scope for a party's turn.
class PartyScope {
 public:
  PartyScope(AccessTracker* tracker, std::uint32_t party) : tracker_(tracker) {
    if (tracker_) tracker_->enter(party);
  }
  ~PartyScope() {
    if (tracker_) tracker_->leave();
  }
  PartyScope(const PartyScope&) = delete;
  PartyScope& operator=(const PartyScope&) = delete;

 private:
  AccessTracker* tracker_;
};

// Degrees of the player's own vertices, read from its view.
std::vector<std::uint32_t> local_degrees(const PlayerView& view) {
  std::vector<std::uint32_t> deg(view.vertex_count(), 0);
  for (auto [u, v] : view.edges()) {
    if (view.owns(u)) ++deg[u];
    if (view.owns(v)) ++deg[v];
  }
  return deg;
}

std::uint32_t bits_for(std::uint64_t x) {
  return static_cast<std::uint32_t>(std::bit_width(x));
}

std::vector<VertexId> sampled_union(
    const std::vector<std::vector<VertexId>>& samples) {
  std::vector<VertexId> all;
  for (const auto& s : samples) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

Partition partition_vertices(VertexId n, std::uint32_t t, PartitionMode mode,
                             Rng& rng) {
  if (t == 0 || t > n) {
    throw InputError("player count t=" + std::to_string(t) +
                     " must satisfy 1 <= t <= n=" + std::to_string(n));
  }
  Partition p;
  p.t = t;
  p.part_of.resize(n);
  if (mode == PartitionMode::kRoundRobin) {
    for (VertexId v = 0; v < n; ++v) p.part_of[v] = v % t;
  } else {
    std::uniform_int_distribution<std::uint32_t> pick(0, t - 1);
    for (auto& part : p.part_of) part = pick(rng);
  }
  return p;
}

void AccessTracker::touch(std::uint32_t view_owner) {
  if (party_ == kNoParty) return;
  ++reads_;
  if (party_ != view_owner) ++violations_;
}

PlayerView::PlayerView(std::uint32_t player, VertexId n,
                       std::shared_ptr<const Partition> partition,
                       std::vector<Edge> edges)
    : player_(player),
      n_(n),
      partition_(std::move(partition)),
      edges_(std::move(edges)) {}

std::span<const Edge> PlayerView::edges() const {
  if (tracker_) tracker_->touch(player_);
  return edges_;
}

std::vector<PlayerView> build_player_views(const Graph& g, const Partition& p) {
  if (p.part_of.size() != g.vertex_count()) {
    throw InputError("partition covers " + std::to_string(p.part_of.size()) +
                     " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  }
  for (auto part : p.part_of) {
    if (part >= p.t) throw InputError("partition assigns a part >= t");
  }
  auto shared = std::make_shared<const Partition>(p);
  std::vector<std::vector<Edge>> per_player(p.t);
  for (auto [u, v] : g.edges()) {
    per_player[p.part_of[u]].emplace_back(u, v);
    if (p.part_of[v] != p.part_of[u]) {
      per_player[p.part_of[v]].emplace_back(u, v);
    }
  }
  std::vector<PlayerView> views;
  views.reserve(p.t);
  for (std::uint32_t i = 0; i < p.t; ++i) {
    std::sort(per_player[i].begin(), per_player[i].end());
    views.emplace_back(i, g.vertex_count(), shared, std::move(per_player[i]));
  }
  return views;
}

void check_views(std::span<const PlayerView> views) {
  if (views.empty()) throw InputError("no player views");
  const auto n = views[0].vertex_count();
  const auto& part = views[0].partition();
  if (part.t != views.size() || part.part_of.size() != n) {
    throw InputError("partition does not match the views");
  }
  std::set<Edge> cross_seen;
  std::size_t cross_expected = 0;
  for (std::uint32_t i = 0; i < views.size(); ++i) {
    const auto& view = views[i];
    if (view.player() != i || view.vertex_count() != n ||
        !(view.partition() == part)) {
      throw InputError("view " + std::to_string(i) +
                       " disagrees on player index, n or partition");
    }
    for (auto [u, v] : view.edges()) {
      if (u >= n || v >= n || u >= v) {
        throw InputError("view " + std::to_string(i) + " holds a bad edge");
      }
      const auto pu = part.part_of[u];
      const auto pv = part.part_of[v];
      if (pu != i && pv != i) {
        throw InputError("view " + std::to_string(i) +
                         " holds an edge not incident to its part");
      }
      if (pu != pv) {
        if (pu == i) ++cross_expected;
        cross_seen.insert({u, v});
      }
    }
  }
  // Each cross edge is counted once from its lower endpoint's side, so the
  // views are consistent iff every cross edge was seen from both sides.
  std::size_t cross_from_high = 0;
  for (const auto& view : views) {
    for (auto [u, v] : view.edges()) {
      if (part.part_of[u] != part.part_of[v] &&
          part.part_of[v] == view.player()) {
        ++cross_from_high;
      }
    }
  }
  if (cross_seen.size() != cross_expected ||
      cross_seen.size() != cross_from_high) {
    throw InputError("cross edges are not mirrored in both endpoint views");
  }
}

const char* to_string(Tag tag) {
  switch (tag) {
    case Tag::kVertex:
      return "vertex";
    case Tag::kDegree:
      return "degree";
    case Tag::kMinNeighborDegree:
      return "min-neighbor-degree";
    case Tag::kEdge:
      return "edge";
    case Tag::kCount:
      return "count";
    case Tag::kHalfUnits:
      return "half-units";
  }
  return "?";
}

BitWidths BitWidths::for_graph(VertexId n, std::size_t edge_count) {
  BitWidths w;
  w.id_bits = bits_for(n);
  w.count_bits = bits_for(edge_count);
  w.half_bits = bits_for(4ull * n) + 1;
  return w;
}

std::uint32_t BitWidths::width(Tag tag) const {
  switch (tag) {
    case Tag::kVertex:
    case Tag::kDegree:
    case Tag::kMinNeighborDegree:
      return id_bits;
    case Tag::kEdge:
      return 2 * id_bits;
    case Tag::kCount:
      return count_bits;
    case Tag::kHalfUnits:
      return half_bits;
  }
  return 0;
}

std::uint64_t recompute_bits(const Message& m, const BitWidths& widths) {
  std::uint64_t bits = 0;
  for (const auto& e : m.entries) bits += widths.width(e.tag);
  return bits;
}

nlohmann::json transcript_to_json(std::span<const Message> messages) {
  auto out = nlohmann::json::array();
  for (const auto& m : messages) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.entries) {
      entries.push_back({to_string(e.tag), e.value});
    }
    out.push_back({{"player", m.player},
                   {"thread", m.thread},
                   {"bits", m.bit_size},
                   {"entries", std::move(entries)}});
  }
  return out;
}

std::int64_t encode_edge(Edge e, VertexId n) {
  return static_cast<std::int64_t>(e.first) * n + e.second;
}

Edge decode_edge(std::int64_t code, VertexId n) {
  return {static_cast<VertexId>(code / n), static_cast<VertexId>(code % n)};
}

BitWidths widths_for_views(std::span<const PlayerView> views) {
  std::size_t m = 0;
  for (const auto& view : views) {
    for (auto [u, v] : view.edges()) {
      if (view.owns(u)) ++m;
    }
  }
  return BitWidths::for_graph(views.empty() ? 0 : views[0].vertex_count(), m);
}

Message ls_player_message(const PlayerView& view,
                          std::span<const VertexId> sampled,
                          const BitWidths& widths) {
  const VertexId n = view.vertex_count();
  const auto deg = local_degrees(view);
  std::vector<bool> in_sample(n, false);
  for (VertexId u : sampled) in_sample[u] = true;

  std::vector<std::uint32_t> min_nbr(n, kNoDegree);
  for (auto [a, b] : view.edges()) {
    if (in_sample[a] && view.owns(b)) min_nbr[a] = std::min(min_nbr[a], deg[b]);
    if (in_sample[b] && view.owns(a)) min_nbr[b] = std::min(min_nbr[b], deg[a]);
  }

  Message msg;
  msg.player = view.player();
  msg.thread = "ls";
  for (VertexId u : sampled) {
    const bool own = view.owns(u);
    if (!own && min_nbr[u] == kNoDegree) continue;
    msg.push(Tag::kVertex, u, widths);
    if (own) msg.push(Tag::kDegree, deg[u], widths);
    if (min_nbr[u] != kNoDegree) {
      msg.push(Tag::kMinNeighborDegree, min_nbr[u], widths);
    }
  }
  return msg;
}

LsProtocolResult ls_protocol(std::span<const PlayerView> views,
                             const SamplerConfig& cfg,
                             AccessTracker* tracker) {
  check_views(views);
  cfg.validate();
  const VertexId n = views[0].vertex_count();
  const auto widths = widths_for_views(views);
  const std::uint32_t r = cfg.resolved_repetitions();

  // Every party derives the same samples from the shared seed.
  std::vector<std::vector<VertexId>> samples(r);
  if (n > 0) {
    for (std::uint32_t rep = 0; rep < r; ++rep) {
      samples[rep] = repetition_sample(n, cfg, rep);
    }
  }
  const auto sampled = sampled_union(samples);

  LsProtocolResult result;
  for (const auto& view : views) {
    PartyScope scope(tracker, view.player());
    result.messages.push_back(ls_player_message(view, sampled, widths));
  }

  PartyScope referee(tracker, AccessTracker::kReferee);
  std::map<VertexId, std::uint32_t> own_degree;
  std::map<VertexId, std::uint32_t> min_nbr;
  for (const auto& msg : result.messages) {
    VertexId current = 0;
    for (const auto& e : msg.entries) {
      switch (e.tag) {
        case Tag::kVertex:
          current = static_cast<VertexId>(e.value);
          break;
        case Tag::kDegree:
          own_degree[current] = static_cast<std::uint32_t>(e.value);
          break;
        case Tag::kMinNeighborDegree: {
          auto [it, fresh] =
              min_nbr.try_emplace(current, static_cast<std::uint32_t>(e.value));
          if (!fresh) {
            it->second =
                std::min(it->second, static_cast<std::uint32_t>(e.value));
          }
          break;
        }
        default:
          break;
      }
    }
  }
  for (VertexId u : sampled) {
    auto d = own_degree.find(u);
    auto m = min_nbr.find(u);
    result.decisions[u] =
        d != own_degree.end() && m != min_nbr.end() && d->second >= m->second;
  }

  auto& report = result.report;
  report.estimator = "ls-protocol";
  report.seed = cfg.seed;
  report.config = to_json(cfg);
  report.repetitions.assign(r, 0.0);
  for (std::uint32_t rep = 0; rep < r; ++rep) {
    if (samples[rep].empty()) continue;
    std::size_t count = 0;
    for (VertexId u : samples[rep]) {
      if (result.decisions[u]) ++count;
    }
    report.repetitions[rep] = scaled_count(n, samples[rep].size(), count);
  }
  report.value = combine_repetitions(report.repetitions, cfg.median_groups);
  for (const auto& msg : result.messages) {
    report.player_bits.push_back(msg.bit_size);
  }
  report.max_player_bits =
      *std::max_element(report.player_bits.begin(), report.player_bits.end());
  result.z1 = report.value;
  return result;
}

std::vector<std::uint32_t> shared_coloring(VertexId n, std::uint32_t b,
                                           std::uint64_t seed,
                                           std::uint32_t rep) {
  if (b == 0) throw InputError("color count b must be positive");
  auto rng = substream(seed, "coloring", rep);
  std::uniform_int_distribution<std::uint32_t> pick(0, b - 1);
  std::vector<std::uint32_t> colors(n);
  for (auto& c : colors) c = pick(rng);
  return colors;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> color_class(
    Edge e, std::span<const std::uint32_t> colors, std::uint32_t d) {
  const auto cu = colors[e.first];
  const auto cv = colors[e.second];
  if (d == 1) {
    if (cu != cv) return std::nullopt;
    return std::pair{cu, cu};
  }
  if (cu == cv) return std::nullopt;
  return std::pair{std::min(cu, cv), std::max(cu, cv)};
}

Message sample_player_message(const PlayerView& view,
                              std::span<const std::uint32_t> colors,
                              std::uint32_t d, Rng& rng,
                              const BitWidths& widths) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Edge>> groups;
  for (auto e : view.edges()) {
    if (!view.owns(e.first)) continue;
    if (auto key = color_class(e, colors, d)) groups[*key].push_back(e);
  }
  Message msg;
  msg.player = view.player();
  msg.thread = "sample";
  const VertexId n = view.vertex_count();
  for (const auto& [key, edges] : groups) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    msg.push(Tag::kEdge, encode_edge(edges[pick(rng)], n), widths);
    msg.push(Tag::kCount, static_cast<std::int64_t>(edges.size()), widths);
  }
  return msg;
}

std::vector<Edge> sample_instance(std::span<const PlayerView> views,
                                  std::span<const std::uint32_t> colors,
                                  std::uint32_t d, std::uint64_t seed,
                                  std::uint32_t rep,
                                  std::vector<Message>& messages,
                                  AccessTracker* tracker) {
  if (d != 1 && d != 2) throw InputError("color-subset size d must be 1 or 2");
  const VertexId n = views.empty() ? 0 : views[0].vertex_count();
  if (colors.size() != n) throw InputError("coloring does not cover n");
  const auto widths = widths_for_views(views);
  const std::size_t first = messages.size();
  for (const auto& view : views) {
    PartyScope scope(tracker, view.player());
    auto rng = substream(seed, "pick",
                         (static_cast<std::uint64_t>(rep) << 32) | view.player());
    messages.push_back(sample_player_message(view, colors, d, rng, widths));
  }

  PartyScope referee(tracker, AccessTracker::kReferee);
  struct Offer {
    Edge edge;
    std::int64_t count;
  };
  // Offers per class, in player order.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Offer>> offers;
  for (std::size_t i = first; i < messages.size(); ++i) {
    const auto& entries = messages[i].entries;
    for (std::size_t j = 0; j + 1 < entries.size(); j += 2) {
      const Edge e = decode_edge(entries[j].value, n);
      offers[*color_class(e, colors, d)].push_back({e, entries[j + 1].value});
    }
  }
  auto rng = substream(seed, "referee", rep);
  std::vector<Edge> picked;
  picked.reserve(offers.size());
  for (const auto& [key, list] : offers) {
    std::int64_t total = 0;
    for (const auto& o : list) total += o.count;
    std::uniform_int_distribution<std::int64_t> pick(0, total - 1);
    std::int64_t x = pick(rng);
    for (const auto& o : list) {
      if (x < o.count) {
        picked.push_back(o.edge);
        break;
      }
      x -= o.count;
    }
  }
  return picked;
}

SampleResult sample_primitive(std::span<const PlayerView> views,
                              std::uint32_t b, std::uint32_t d,
                              std::uint32_t r, std::uint64_t seed,
                              AccessTracker* tracker) {
  check_views(views);
  if (b < 2) throw InputError("color count b must be at least 2");
  if (r == 0) throw InputError("repetition count r must be at least 1");
  const VertexId n = views[0].vertex_count();

  SampleResult result;
  result.messages.resize(views.size());
  for (std::uint32_t i = 0; i < views.size(); ++i) {
    result.messages[i].player = i;
    result.messages[i].thread = "sample";
  }
  std::set<Edge> all;
  for (std::uint32_t rep = 0; rep < r; ++rep) {
    const auto colors = shared_coloring(n, b, seed, rep);
    std::vector<Message> round;
    for (auto e : sample_instance(views, colors, d, seed, rep, round, tracker)) {
      all.insert(e);
    }
    for (std::uint32_t i = 0; i < views.size(); ++i) {
      auto& dst = result.messages[i];
      dst.entries.insert(dst.entries.end(), round[i].entries.begin(),
                         round[i].entries.end());
      dst.bit_size += round[i].bit_size;
    }
  }
  result.edges.assign(all.begin(), all.end());
  return result;
}

Message a_prime_player_message(const PlayerView& view,
                               const BitWidths& widths) {
  const auto deg = local_degrees(view);
  HalfUnits sum;
  const auto& part = view.partition();
  for (VertexId v = 0; v < view.vertex_count(); ++v) {
    if (part.part_of[v] == view.player()) sum += a_prime_term(deg[v]);
  }
  Message msg;
  msg.player = view.player();
  msg.thread = "a-prime";
  msg.push(Tag::kHalfUnits, sum.count, widths);
  return msg;
}

APrimeResult a_prime_protocol(std::span<const PlayerView> views,
                              AccessTracker* tracker) {
  check_views(views);
  const auto widths = widths_for_views(views);
  APrimeResult result;
  for (const auto& view : views) {
    PartyScope scope(tracker, view.player());
    result.messages.push_back(a_prime_player_message(view, widths));
  }
  PartyScope referee(tracker, AccessTracker::kReferee);
  for (const auto& msg : result.messages) {
    result.z3 += HalfUnits{msg.entries.at(0).value};
  }
  return result;
}

std::uint32_t ceil_cbrt(std::uint64_t n) {
  std::uint64_t k = 1;
  while (k * k * k < n) ++k;
  return static_cast<std::uint32_t>(k);
}

ResolvedProtocol resolve(const ProtocolConfig& cfg, VertexId n) {
  if (!(cfg.epsilon > 0.0)) throw InputError("epsilon must be positive");
  ResolvedProtocol p;
  p.k = cfg.k ? *cfg.k : ceil_cbrt(n);
  if (p.k == 0) throw InputError("k must be at least 1");
  p.b = cfg.b ? *cfg.b : 100 * p.k;
  if (p.b < 2) throw InputError("b must be at least 2");
  p.d = cfg.d;
  if (p.d != 1 && p.d != 2) throw InputError("d must be 1 or 2");
  p.r_sample = cfg.r_sample
                   ? *cfg.r_sample
                   : cfg.c_r * static_cast<std::uint32_t>(
                                   std::bit_width(static_cast<std::uint64_t>(p.k)));
  if (p.r_sample == 0) throw InputError("r_sample must be at least 1");
  // ceil(12.5 n / k) = ceil(25 n / 2k)
  const std::uint64_t num = 25ull * n;
  const std::uint64_t den = 2ull * p.k;
  const std::uint64_t s = (num + den - 1) / den;
  p.s = static_cast<VertexId>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(n, s)));
  p.ls_repetitions = default_repetitions(cfg.epsilon);
  return p;
}

bool meets_threshold(HalfUnits z3, std::uint32_t k, TauRule rule) {
  // z3 = count / 2.  tau = k: count >= 2k.  tau = k / 12.5: 25 count >= 4k.
  if (rule == TauRule::kK) return z3.count >= 2 * static_cast<std::int64_t>(k);
  return 25 * z3.count >= 4 * static_cast<std::int64_t>(k);
}

const char* to_string(TauRule rule) {
  return rule == TauRule::kK ? "k" : "k-over-12.5";
}

FinalProtocolResult final_protocol(std::span<const PlayerView> views,
                                   const ProtocolConfig& cfg,
                                   AccessTracker* tracker) {
  check_views(views);
  const VertexId n = views[0].vertex_count();
  const auto p = resolve(cfg, n);

  SamplerConfig ls_cfg;
  ls_cfg.s = p.s;
  ls_cfg.epsilon = cfg.epsilon;
  ls_cfg.seed = cfg.seed;
  auto ls = ls_protocol(views, ls_cfg, tracker);
  auto sample = sample_primitive(views, p.b, p.d, p.r_sample, cfg.seed, tracker);
  auto ap = a_prime_protocol(views, tracker);

  PartyScope referee(tracker, AccessTracker::kReferee);
  const auto sampled_graph = Graph::from_edges(n, sample.edges);
  const auto z2 = static_cast<double>(maximum_matching_size(sampled_graph));

  FinalProtocolResult result;
  auto& report = result.report;
  report.estimator = "final-protocol";
  report.seed = cfg.seed;
  report.z1 = ls.z1;
  report.z2 = z2;
  report.z3 = ap.z3;
  const bool large = meets_threshold(ap.z3, p.k, cfg.tau);
  report.branch = large ? kBranchZ1 : kBranchZ2;
  report.value = large ? ls.z1 : z2;

  report.config = {
      {"t", views.size()},      {"epsilon", cfg.epsilon},
      {"k", p.k},               {"b", p.b},
      {"d", p.d},               {"r_sample", p.r_sample},
      {"s", p.s},               {"r", p.ls_repetitions},
      {"tau", to_string(cfg.tau)},
      {"tau_value", cfg.tau == TauRule::kK ? static_cast<double>(p.k)
                                           : p.k / 12.5},
      {"sampled_edges", sample.edges.size()},
  };

  report.player_bits.assign(views.size(), 0);
  for (std::size_t i = 0; i < views.size(); ++i) {
    report.player_bits[i] = ls.messages[i].bit_size +
                            sample.messages[i].bit_size +
                            ap.messages[i].bit_size;
  }
  report.max_player_bits =
      *std::max_element(report.player_bits.begin(), report.player_bits.end());

  for (auto* batch : {&ls.messages, &sample.messages, &ap.messages}) {
    for (auto& m : *batch) result.transcript.push_back(std::move(m));
  }
  return result;
}

}  // namespace lsmatch
