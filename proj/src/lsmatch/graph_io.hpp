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

#include <iosfwd>
#include <string>
#include <vector>

#include "lsmatch/graph.hpp"

namespace lsmatch {

// Edge-list text: a line "n m", then m lines "u v" (0-based). Lines starting
// with '#' are comments. Self-loops, duplicate edges, out-of-range ids and a
// wrong edge count raise FormatError.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);

// Writes the comment lines (each prefixed "# ") and then the edges with
// u < v in ascending order.
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments = {});
std::string format_edge_list(const Graph& g,
                             const std::vector<std::string>& comments = {});

}  // namespace lsmatch
