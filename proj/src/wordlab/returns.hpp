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

#ifndef WORDLAB_RETURNS_HPP
#define WORDLAB_RETURNS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wordlab/wordgen.hpp"

namespace wordlab {

// Returns observed in a finite buffer. Later returns may be unseen, so the
// occurrence count and buffer length travel with the sets.
struct ReturnReport {
  Word target;
  std::vector<std::size_t> positions;        // ascending
  std::vector<FactorRef> complete_returns;   // distinct, lexicographic
  std::vector<FactorRef> return_words;       // complete_returns[i] minus trailing target
  std::optional<std::size_t> max_gap;        // absent with fewer than 2 occurrences
  std::size_t buffer_length = 0;
};

// Never throws on rare targets; the sets are simply empty.
ReturnReport analyze_returns(const PrefixBuffer& buf, WordView v);

// These three throw InsufficientOccurrences when v occurs fewer than twice.
std::vector<Word> complete_first_returns(const PrefixBuffer& buf, WordView v);
std::vector<Word> return_words(const PrefixBuffer& buf, WordView v);
std::size_t max_gap(const PrefixBuffer& buf, WordView v);

// At least two occurrences starting in the second half of the buffer.
bool looks_recurrent(const PrefixBuffer& buf, WordView u);

struct BranchingViolation {
  FactorRef context;  // r u s as a window of the buffer
  std::size_t u_length = 0;
};

// For every recurrent u with |u| <= max_u and every factor r u s with |r| = k,
// |s| = k + d: some r' u s' (r' a proper suffix of r, s' a proper prefix of s)
// must be left or right special. Reports contexts where none is.
std::vector<BranchingViolation> check_branching(const PrefixBuffer& buf, std::size_t k,
                                                std::size_t d, std::size_t max_u);

}  // namespace wordlab

#endif  // WORDLAB_RETURNS_HPP
