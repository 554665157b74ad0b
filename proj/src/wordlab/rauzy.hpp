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

// Rauzy graphs of a prefix buffer, special factors, and structural checks
// relating the frontiers of closed factors that overlap in the buffer.
//
// The frontier checks walk realized windows of the buffer (consecutive
// positions j, j+1, ...) rather than arbitrary graph paths.

#ifndef WORDLAB_RAUZY_HPP
#define WORDLAB_RAUZY_HPP

#include <cstddef>
#include <vector>

#include "wordlab/closure.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/serialize.hpp"

namespace wordlab {

struct RauzyEdge {
  std::size_t source = 0;  // vertex index
  std::size_t target = 0;  // vertex index
  FactorRef label;         // factor of length order + 1
};

struct RauzyGraph {
  std::size_t order = 0;
  std::vector<FactorRef> vertices;  // lexicographic
  std::vector<RauzyEdge> edges;     // ordered by label

  std::vector<std::size_t> out_degrees() const;
  std::vector<std::size_t> in_degrees() const;
};

// Needs order + 1 <= stable_upto unless `force`.
RauzyGraph rauzy_graph(const PrefixBuffer& buf, std::size_t n, bool force = false);

struct SpecialReport {
  std::size_t order = 0;
  std::vector<FactorRef> left_specials;
  std::vector<FactorRef> right_specials;
};

SpecialReport special_factors(const PrefixBuffer& buf, std::size_t n, bool force = false);

// DOT rendering with closed/frontier and special-factor annotations.
DotDocument rauzy_dot(const PrefixBuffer& buf, const RauzyGraph& graph);

struct NeighborViolation {
  FactorRef word;  // length n - 1
  std::size_t closed_predecessors = 0;
  std::size_t closed_successors = 0;
};

// For each factor w of length n-1, counts letters b with bw closed and
// letters c with wc closed; reports every w where either count is >= 2.
std::vector<NeighborViolation> check_closed_neighbor_uniqueness(
    const PrefixBuffer& buf, std::size_t n, Classifier classifier = &classify);

struct FrontierViolation {
  std::size_t position = 0;  // start of the first window
  std::size_t shift = 0;     // distance to the second window
  std::size_t frontier_first = 0;
  std::size_t frontier_second = 0;
  std::size_t open_between = 0;  // walk check only
};

// Windows of length n at j and j+i (1 <= i <= i_max), both closed, must have
// frontier lengths differing by less than i.
std::vector<FrontierViolation> check_frontier_distance(const PrefixBuffer& buf, std::size_t n,
                                                       std::size_t i_max,
                                                       Classifier classifier = &classify);

// Windows at j and j+m (1 <= m <= max_walk), both closed, with t distinct open
// windows strictly between them, must have frontier lengths differing by at
// most t.
std::vector<FrontierViolation> check_closed_walks(const PrefixBuffer& buf, std::size_t n,
                                                  std::size_t max_walk,
                                                  Classifier classifier = &classify);

}  // namespace wordlab

#endif  // WORDLAB_RAUZY_HPP
