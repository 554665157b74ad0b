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

#include "wordlab/closure.hpp"

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

void require_nonempty(WordView w, const char* what) {
  if (w.empty()) throw Error(Errc::domain, std::string(what) + ": empty word");
}

// KMP scan. Calls `hit(pos)` per match; stops when it returns false.
template <typename Hit>
void kmp_scan(WordView pattern, const std::vector<std::size_t>& table,
              WordView text, Hit&& hit) {
  const std::size_t m = pattern.size();
  std::size_t j = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (j > 0 && text[i] != pattern[j]) j = table[j - 1];
    if (text[i] == pattern[j]) ++j;
    if (j == m) {
      if (!hit(i + 1 - m)) return;
      j = table[j - 1];
    }
  }
}

}  // namespace

std::vector<std::size_t> border_table(WordView w) {
  require_nonempty(w, "border_table");
  std::vector<std::size_t> table(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = table[k - 1];
    if (w[i] == w[k]) ++k;
    table[i] = k;
  }
  return table;
}

std::size_t longest_border(WordView w) { return border_table(w).back(); }

std::vector<std::size_t> occurrences(WordView pattern, WordView text) {
  require_nonempty(pattern, "occurrences");
  std::vector<std::size_t> out;
  kmp_scan(pattern, border_table(pattern), text, [&](std::size_t pos) {
    out.push_back(pos);
    return true;
  });
  return out;
}

std::size_t count_occurrences(WordView pattern, WordView text,
                              std::size_t limit) {
  require_nonempty(pattern, "count_occurrences");
  std::size_t count = 0;
  kmp_scan(pattern, border_table(pattern), text, [&](std::size_t) {
    return ++count < limit;
  });
  return count;
}

ClosureVerdict classify(WordView w) {
  require_nonempty(w, "classify");
  if (w.size() == 1) return ClosureVerdict::closed(0);
  const std::size_t border = longest_border(w);
  if (border == 0) return ClosureVerdict::open();
  // Prefix and suffix are two occurrences already; a third means open.
  if (count_occurrences(w.first(border), w, 3) == 2)
    return ClosureVerdict::closed(border);
  return ClosureVerdict::open();
}

ClosureVerdict classify_brute(WordView w) {
  require_nonempty(w, "classify_brute");
  const std::size_t n = w.size();
  if (n == 1) return ClosureVerdict::closed(0);
  for (std::size_t b = n - 1; b >= 1; --b) {
    if (!equal(w.first(b), w.last(b))) continue;
    std::size_t count = 0;
    for (std::size_t i = 0; i + b <= n; ++i)
      if (equal(w.subspan(i, b), w.first(b))) ++count;
    if (count == 2) return ClosureVerdict::closed(b);
  }
  return ClosureVerdict::open();
}

}  // namespace wordlab
