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

#include "wordlab/factor_index.hpp"

#include <algorithm>
#include <bitset>
#include <limits>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

// Prefix doubling with a counting sort per round, O(n log n).
std::vector<std::uint32_t> build_suffix_array(WordView s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;

  std::vector<std::size_t> cnt(std::max<std::size_t>(256, n) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++cnt[s[i]];
  for (std::size_t c = 1; c < 256; ++c) cnt[c] += cnt[c - 1];
  for (std::size_t i = n; i-- > 0;) sa[--cnt[s[i]]] = static_cast<std::uint32_t>(i);
  std::size_t classes = 1;
  rank[sa[0]] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (s[sa[i]] != s[sa[i - 1]]) ++classes;
    rank[sa[i]] = static_cast<std::uint32_t>(classes - 1);
  }

  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by second key: suffixes with nothing at i + k sort first.
    std::size_t p = 0;
    for (std::size_t i = (n > k ? n - k : 0); i < n; ++i)
      tmp[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j)
      if (sa[j] >= k) tmp[p++] = static_cast<std::uint32_t>(sa[j] - k);

    std::fill(cnt.begin(), cnt.begin() + classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[tmp[i]]];
    for (std::size_t c = 1; c < classes; ++c) cnt[c] += cnt[c - 1];
    for (std::size_t i = n; i-- > 0;) sa[--cnt[rank[tmp[i]]]] = tmp[i];

    auto second = [&](std::uint32_t i) -> std::int64_t {
      return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
    };
    tmp[sa[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      if (rank[sa[i]] != rank[sa[i - 1]] || second(sa[i]) != second(sa[i - 1]))
        ++classes;
      tmp[sa[i]] = static_cast<std::uint32_t>(classes - 1);
    }
    rank.swap(tmp);
  }
  return sa;
}

// Kasai et al.
std::vector<std::uint32_t> build_lcp(WordView s, const std::vector<std::uint32_t>& sa) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> lcp(n, 0), inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[sa[i]] = static_cast<std::uint32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inv[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[inv[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[inv[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

FactorIndex::FactorIndex(WordView text) : text_(text) {
  if (text.size() >= std::numeric_limits<std::uint32_t>::max())
    throw Error(Errc::range, "text too long to index");
  sa_ = build_suffix_array(text_);
  lcp_ = build_lcp(text_, sa_);
}

std::vector<std::size_t> FactorIndex::distinct_counts(std::size_t n_max) const {
  const std::size_t n = text_.size();
  std::vector<std::int64_t> diff(n_max + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = n - sa_[i];
    const std::size_t from = static_cast<std::size_t>(lcp_[i]) + 1;
    const std::size_t to = std::min(len, n_max);
    if (from <= to) {
      ++diff[from];
      --diff[to + 1];
    }
  }
  std::vector<std::size_t> counts(n_max + 1, 0);
  std::int64_t run = 0;
  for (std::size_t k = 1; k <= n_max; ++k) {
    run += diff[k];
    counts[k] = static_cast<std::size_t>(run);
  }
  return counts;
}

std::vector<FactorRef> FactorIndex::distinct_factors(std::size_t n) const {
  std::vector<FactorRef> out;
  if (n == 0) return out;
  const std::size_t total = text_.size();
  for (std::size_t i = 0; i < total; ++i) {
    if (total - sa_[i] < n) continue;
    if (out.empty() || lcp_[i] < n)
      out.push_back({sa_[i], n});
    else
      out.back().offset = std::min<std::size_t>(out.back().offset, sa_[i]);
  }
  return out;
}

std::vector<std::uint32_t> FactorIndex::window_ids(std::size_t n) const {
  const std::size_t total = text_.size();
  std::vector<std::uint32_t> ids(n == 0 || n > total ? 0 : total - n + 1, 0);
  if (ids.empty()) return ids;
  std::uint32_t next = 0;
  bool started = false;
  for (std::size_t i = 0; i < total; ++i) {
    if (total - sa_[i] < n) continue;
    if (started && lcp_[i] < n) ++next;
    started = true;
    ids[sa_[i]] = next;
  }
  return ids;
}

std::pair<std::size_t, std::size_t> FactorIndex::locate(WordView pattern) const {
  const std::size_t m = pattern.size();
  auto head = [&](std::uint32_t pos) {
    return text_.subspan(pos, std::min(m, text_.size() - pos));
  };
  auto first = std::partition_point(sa_.begin(), sa_.end(), [&](std::uint32_t pos) {
    return lex_less(head(pos), pattern);
  });
  auto last = std::partition_point(first, sa_.end(), [&](std::uint32_t pos) {
    return equal(head(pos), pattern);
  });
  return {static_cast<std::size_t>(first - sa_.begin()),
          static_cast<std::size_t>(last - sa_.begin())};
}

std::size_t FactorIndex::right_extensions(WordView pattern, std::size_t limit) const {
  auto [first, last] = locate(pattern);
  const std::size_t m = pattern.size();
  // Within the range the letter after the pattern is non-decreasing; a suffix
  // ending right after the pattern sorts first.
  if (first < last && sa_[first] + m == text_.size()) ++first;
  std::size_t count = 0;
  while (first < last && count < limit) {
    const Symbol c = text_[sa_[first] + m];
    ++count;
    first = static_cast<std::size_t>(
        std::partition_point(sa_.begin() + static_cast<std::ptrdiff_t>(first),
                             sa_.begin() + static_cast<std::ptrdiff_t>(last),
                             [&](std::uint32_t pos) { return text_[pos + m] == c; }) -
        sa_.begin());
  }
  return count;
}

std::size_t FactorIndex::left_extensions(WordView pattern, std::size_t limit) const {
  auto [first, last] = locate(pattern);
  std::bitset<256> seen;
  std::size_t count = 0;
  for (std::size_t i = first; i < last && count < limit; ++i) {
    if (sa_[i] == 0) continue;
    const Symbol c = text_[sa_[i] - 1];
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

}  // namespace wordlab
