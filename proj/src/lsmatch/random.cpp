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

#include "lsmatch/random.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <ranges>
#include <string>

#include "lsmatch/errors.hpp"

namespace lsmatch {
namespace {

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

Rng substream(std::uint64_t seed, std::string_view label,
              std::uint64_t index) {
  const std::uint64_t tag = fnv1a(label);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag),
                    static_cast<std::uint32_t>(tag >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::vector<VertexId> sample_without_replacement(VertexId n, VertexId s,
                                                 Rng& rng) {
  if (s > n) {
    throw InputError("cannot sample " + std::to_string(s) +
                     " vertices without replacement from " +
                     std::to_string(n));
  }
  std::vector<VertexId> out(s);
  auto ids = std::views::iota(VertexId{0}, n);
  // iota_view iterators are input iterators to the legacy algorithm, so this
  // runs reservoir sampling into the preallocated buffer: O(s) memory.
  const auto end = std::sample(ids.begin(), ids.end(), out.begin(), s, rng);
  out.erase(end, out.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> random_vertex_order(VertexId n, Rng& rng) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace lsmatch
