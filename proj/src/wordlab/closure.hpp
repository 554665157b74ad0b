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

// Open/closed classification of finite words.
//
// A word is closed if it is a single letter, or if its longest border occurs
// in it exactly twice (as prefix and as suffix). That longest border is the
// frontier. Every other word is open.

#ifndef WORDLAB_CLOSURE_HPP
#define WORDLAB_CLOSURE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

class ClosureVerdict {
 public:
  static ClosureVerdict open() { return ClosureVerdict(); }
  static ClosureVerdict closed(std::size_t frontier_len) {
    ClosureVerdict v;
    v.frontier_ = frontier_len;
    return v;
  }

  bool is_closed() const noexcept { return frontier_.has_value(); }
  // Absent for open words.
  std::optional<std::size_t> frontier_len() const noexcept { return frontier_; }

  bool operator==(const ClosureVerdict&) const = default;

 private:
  ClosureVerdict() = default;
  std::optional<std::size_t> frontier_;
};

// Entry i is the length of the longest proper border of w[0..i].
std::vector<std::size_t> border_table(WordView w);

std::size_t longest_border(WordView w);

// All start positions of `pattern` in `text`, overlaps included, ascending.
std::vector<std::size_t> occurrences(WordView pattern, WordView text);

// Number of occurrences of `pattern` in `text`, stopping early at `limit`.
std::size_t count_occurrences(WordView pattern, WordView text,
                              std::size_t limit);

ClosureVerdict classify(WordView w);

// Reference classifier: tries every border length and counts occurrences by
// direct comparison. Quadratic to cubic; meant for small words and tests.
ClosureVerdict classify_brute(WordView w);

using Classifier = ClosureVerdict (*)(WordView);

}  // namespace wordlab

#endif  // WORDLAB_CLOSURE_HPP
