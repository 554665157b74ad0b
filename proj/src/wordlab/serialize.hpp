// Copyright 2026 The wordlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats: complexity profiles as CSV, Rauzy graphs as DOT. Both
// writers are deterministic and both parsers accept exactly what the writers
// emit, so parse-then-write reproduces the input byte for byte.

#ifndef WORDLAB_SERIALIZE_HPP
#define WORDLAB_SERIALIZE_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/complexity.hpp"

namespace wordlab {

// Header "n,p,op,cl,frontier_lengths", plus ",approx" when requested.
// Frontier lengths are ';'-separated, ascending.
std::string profile_csv(std::span<const ComplexityRow> rows, bool approx_column = false);

struct ProfileTable {
  bool approx_column = false;
  std::vector<ComplexityRow> rows;
};

ProfileTable parse_profile_csv(std::string_view text);

struct DotAttr {
  std::string key;
  std::string value;

  bool operator==(const DotAttr&) const = default;
};

struct DotNode {
  std::string id;
  std::vector<DotAttr> attrs;

  bool operator==(const DotNode&) const = default;
};

struct DotEdge {
  std::string from;
  std::string to;
  std::vector<DotAttr> attrs;

  bool operator==(const DotEdge&) const = default;
};

// The DOT subset used for Rauzy graphs: one digraph, node and edge
// statements with optional attribute lists.
struct DotDocument {
  std::string name;
  std::vector<DotNode> nodes;
  std::vector<DotEdge> edges;

  std::string serialize() const;
  static DotDocument parse(std::string_view text);

  bool operator==(const DotDocument&) const = default;
};

}  // namespace wordlab

#endif  // WORDLAB_SERIALIZE_HPP
