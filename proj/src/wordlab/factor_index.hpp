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

#ifndef WORDLAB_FACTOR_INDEX_HPP
#define WORDLAB_FACTOR_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

// (offset, length) window into a buffer.
struct FactorRef {
  std::size_t offset = 0;
  std::size_t length = 0;

  bool operator==(const FactorRef&) const = default;
};

// Suffix array with LCP over a fixed text. The text must outlive the index.
class FactorIndex {
 public:
  explicit FactorIndex(WordView text);

  std::size_t size() const noexcept { return text_.size(); }
  const std::vector<std::uint32_t>& suffix_array() const noexcept { return sa_; }
  // lcp()[i] = LCP of suffixes sa[i-1] and sa[i]; lcp()[0] = 0.
  const std::vector<std::uint32_t>& lcp() const noexcept { return lcp_; }

  // counts[n] = number of distinct factors of length n, for n <= n_max.
  std::vector<std::size_t> distinct_counts(std::size_t n_max) const;

  // One ref per distinct factor of length n, at its leftmost occurrence,
  // ordered lexicographically by content.
  std::vector<FactorRef> distinct_factors(std::size_t n) const;

  // ids[j] = lexicographic rank (as in distinct_factors) of the length-n
  // window at j, for j + n <= size().
  std::vector<std::uint32_t> window_ids(std::size_t n) const;

  // Half-open range [first, last) of suffix-array slots whose suffix starts
  // with `pattern`. Empty when the pattern does not occur.
  std::pair<std::size_t, std::size_t> locate(WordView pattern) const;

  // Number of distinct letters c with pattern·c (resp. c·pattern) a factor.
  // Capped at `limit`.
  std::size_t right_extensions(WordView pattern, std::size_t limit) const;
  std::size_t left_extensions(WordView pattern, std::size_t limit) const;

 private:
  WordView text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> lcp_;
};

}  // namespace wordlab

#endif  // WORDLAB_FACTOR_INDEX_HPP
