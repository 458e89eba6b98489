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

#include <stdexcept>
#include <string>

namespace lsmatch {

// Caller passed a value outside an operation's domain (bad vertex id, s > n,
// malformed permutation, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A graph file, stream file or in-memory stream violates its format.
class FormatError : public InputError {
 public:
  explicit FormatError(const std::string& what) : InputError(what) {}
};

// The request exceeds what an exhaustive oracle is able to handle.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace lsmatch
