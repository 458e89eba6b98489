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

#include "lsmatch/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>

#include "lsmatch/errors.hpp"

namespace lsmatch {
namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

// Gabow-style formulation of Edmonds: BFS from one free root at a time,
// contracting odd cycles by relabelling their base.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_) {}

  std::vector<VertexId> run() {
    // A greedy start cuts the number of BFS phases on sparse inputs.
    for (VertexId v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      for (VertexId w : g_.neighbors(v)) {
        if (mate_[w] == kNone) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (VertexId root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      const VertexId end = find_augmenting_path(root);
      if (end != kNone) augment(end);
    }
    return mate_;
  }

 private:
  VertexId lowest_common_base(VertexId a, VertexId b) {
    std::vector<bool> on_path(n_, false);
    for (;;) {
      a = base_[a];
      on_path[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(VertexId v, VertexId blossom_base, VertexId child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  VertexId find_augmenting_path(VertexId root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (VertexId v = 0; v < n_; ++v) base_[v] = v;

    std::queue<VertexId> queue;
    queue.push(root);
    in_tree_[root] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (VertexId w : g_.neighbors(v)) {
        if (base_[v] == base_[w] || mate_[v] == w) continue;
        if (w == root || (mate_[w] != kNone && parent_[mate_[w]] != kNone)) {
          // w is an outer vertex: v-w closes an odd cycle.
          const VertexId b = lowest_common_base(v, w);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, w);
          mark_path(w, b, v);
          for (VertexId x = 0; x < n_; ++x) {
            if (!in_blossom_[base_[x]]) continue;
            base_[x] = b;
            if (!in_tree_[x]) {
              in_tree_[x] = true;
              queue.push(x);
            }
          }
        } else if (parent_[w] == kNone) {
          parent_[w] = v;
          if (mate_[w] == kNone) return w;
          const VertexId next = mate_[w];
          in_tree_[next] = true;
          queue.push(next);
        }
      }
    }
    return kNone;
  }

  void augment(VertexId v) {
    while (v != kNone) {
      const VertexId pv = parent_[v];
      const VertexId ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  VertexId n_;
  std::vector<VertexId> mate_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

struct BruteForce {
  const std::vector<Edge>& edges;
  std::vector<bool> used;
  std::size_t best = 0;

  void search(std::size_t i, std::size_t current) {
    if (current + (edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = current;
      return;
    }
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      search(i + 1, current + 1);
      used[u] = used[v] = false;
    }
    search(i + 1, current);
  }
};

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (auto [u, v] : m.edges) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) return false;
    if (!g.has_edge(u, v) || used[u] || used[v]) return false;
    used[u] = used[v] = true;
  }
  return true;
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  if (!is_matching(g, m)) return false;
  std::vector<bool> used(g.vertex_count(), false);
  for (auto [u, v] : m.edges) used[u] = used[v] = true;
  for (auto [u, v] : g.edges()) {
    if (!used[u] && !used[v]) return false;
  }
  return true;
}

Matching greedy_maximal_matching(const Graph& g,
                                 std::span<const VertexId> vertex_order) {
  require_permutation(vertex_order, g.vertex_count());
  std::vector<bool> matched(g.vertex_count(), false);
  Matching m;
  for (VertexId v : vertex_order) {
    if (matched[v]) continue;
    // Adjacency is sorted, so the first free neighbor has the lowest id.
    for (VertexId w : g.neighbors(v)) {
      if (matched[w]) continue;
      matched[v] = matched[w] = true;
      m.edges.emplace_back(std::min(v, w), std::max(v, w));
      break;
    }
  }
  return m;
}

Matching maximum_matching(const Graph& g) {
  const auto mate = BlossomMatcher(g).run();
  Matching m;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] != kNone && v < mate[v]) m.edges.emplace_back(v, mate[v]);
  }
  return m;
}

std::size_t maximum_matching_size(const Graph& g) {
  return maximum_matching(g).size();
}

std::size_t brute_force_matching_size(const Graph& g) {
  constexpr std::size_t kMaxEdges = 25;
  if (g.edge_count() > kMaxEdges) {
    throw CapabilityError("brute-force matching supports at most " +
                          std::to_string(kMaxEdges) + " edges, graph has " +
                          std::to_string(g.edge_count()));
  }
  const auto edges = g.edges();
  BruteForce bf{edges, std::vector<bool>(g.vertex_count(), false)};
  bf.search(0, 0);
  return bf.best;
}

}  // namespace lsmatch
