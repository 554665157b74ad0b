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

#ifndef WORDLAB_COMPLEXITY_HPP
#define WORDLAB_COMPLEXITY_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "wordlab/closure.hpp"
#include "wordlab/wordgen.hpp"

namespace wordlab {

// Distinct factors of one length, each at its leftmost occurrence, ordered
// lexicographically by content.
class FactorSet {
 public:
  FactorSet(std::size_t length, std::vector<FactorRef> refs, bool approximate)
      : length_(length), refs_(std::move(refs)), approximate_(approximate) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return refs_.size(); }
  // True when the length exceeds the buffer's certified range.
  bool approximate() const noexcept { return approximate_; }
  const std::vector<FactorRef>& refs() const noexcept { return refs_; }
  auto begin() const noexcept { return refs_.begin(); }
  auto end() const noexcept { return refs_.end(); }

  // Position in the set of a factor of this length, if present.
  std::optional<std::size_t> find(const PrefixBuffer& buf, WordView w) const;

 private:
  std::size_t length_;
  std::vector<FactorRef> refs_;
  bool approximate_;
};

// Throws Errc::uncertified when n > stable_upto unless `force` is set.
FactorSet factors_of_length(const PrefixBuffer& buf, std::size_t n, bool force = false);

struct ComplexityRow {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t op = 0;
  std::size_t cl = 0;
  std::vector<std::size_t> frontier_lengths;  // ascending, one per closed factor
  bool approximate = false;

  bool operator==(const ComplexityRow&) const = default;
};

ComplexityRow profile_row(const PrefixBuffer& buf, std::size_t n, bool force = false,
                          Classifier classifier = &classify);

// Rows for n_from..n_to inclusive. Rows are independent; `threads` > 1 splits
// the lengths across worker threads.
std::vector<ComplexityRow> profile(const PrefixBuffer& buf, std::size_t n_from,
                                   std::size_t n_to, bool force = false,
                                   unsigned threads = 1);

struct SyndeticSample {
  std::size_t gap = 1;
  std::size_t residue = 0;
  std::map<std::size_t, std::size_t> values;  // n -> cl(n)
  std::size_t max_cl = 0;
};

// Restricts cl to rows with n = residue (mod gap).
SyndeticSample syndetic_max_cl(std::span<const ComplexityRow> rows, std::size_t gap,
                               std::size_t residue);

// Smallest q >= 1 with w[i] = w[i + q] wherever both exist.
std::size_t shortest_period(WordView w);

}  // namespace wordlab

#endif  // WORDLAB_COMPLEXITY_HPP
