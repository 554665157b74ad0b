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

#include "wordlab/returns.hpp"

#include <algorithm>
#include <map>

#include "wordlab/complexity.hpp"
#include "wordlab/error.hpp"

namespace wordlab {

namespace {

std::vector<std::size_t> positions_of(const PrefixBuffer& buf, WordView v) {
  if (v.empty()) throw Error(Errc::domain, "return target must be non-empty");
  auto [first, last] = buf.index().locate(v);
  const auto& sa = buf.index().suffix_array();
  std::vector<std::size_t> pos(sa.begin() + static_cast<std::ptrdiff_t>(first),
                               sa.begin() + static_cast<std::ptrdiff_t>(last));
  std::sort(pos.begin(), pos.end());
  return pos;
}

ReturnReport require_two(const PrefixBuffer& buf, WordView v) {
  ReturnReport r = analyze_returns(buf, v);
  if (r.positions.size() < 2)
    throw InsufficientOccurrences("\"" + buf.text(v) + "\" occurs " +
                                      std::to_string(r.positions.size()) +
                                      " time(s) in a buffer of length " +
                                      std::to_string(buf.size()) + "; need at least 2",
                                  r.positions.size());
  return r;
}

std::vector<Word> materialize(const PrefixBuffer& buf, const std::vector<FactorRef>& refs) {
  std::vector<Word> out;
  out.reserve(refs.size());
  for (const auto& f : refs) {
    WordView w = buf.view(f);
    out.emplace_back(w.begin(), w.end());
  }
  return out;
}

}  // namespace

ReturnReport analyze_returns(const PrefixBuffer& buf, WordView v) {
  ReturnReport report;
  report.target.assign(v.begin(), v.end());
  report.positions = positions_of(buf, v);
  report.buffer_length = buf.size();
  const auto& pos = report.positions;
  if (pos.size() < 2) return report;

  std::vector<FactorRef> returns;
  std::size_t gap = 0;
  for (std::size_t i = 1; i < pos.size(); ++i) {
    gap = std::max(gap, pos[i] - pos[i - 1]);
    returns.push_back({pos[i - 1], pos[i] - pos[i - 1] + v.size()});
  }
  report.max_gap = gap;

  std::sort(returns.begin(), returns.end(), [&](const FactorRef& a, const FactorRef& b) {
    WordView wa = buf.view(a), wb = buf.view(b);
    if (lex_less(wa, wb)) return true;
    if (lex_less(wb, wa)) return false;
    return a.offset < b.offset;
  });
  for (const auto& f : returns)
    if (report.complete_returns.empty() ||
        !equal(buf.view(report.complete_returns.back()), buf.view(f)))
      report.complete_returns.push_back(f);
  for (const auto& f : report.complete_returns)
    report.return_words.push_back({f.offset, f.length - v.size()});
  return report;
}

std::vector<Word> complete_first_returns(const PrefixBuffer& buf, WordView v) {
  return materialize(buf, require_two(buf, v).complete_returns);
}

std::vector<Word> return_words(const PrefixBuffer& buf, WordView v) {
  return materialize(buf, require_two(buf, v).return_words);
}

std::size_t max_gap(const PrefixBuffer& buf, WordView v) { return *require_two(buf, v).max_gap; }

bool looks_recurrent(const PrefixBuffer& buf, WordView u) {
  const std::size_t half = buf.size() / 2;
  std::size_t late = 0;
  for (std::size_t p : positions_of(buf, u))
    if (p >= half && ++late >= 2) return true;
  return false;
}

std::vector<BranchingViolation> check_branching(const PrefixBuffer& buf, std::size_t k,
                                                std::size_t d, std::size_t max_u) {
  if (k == 0) throw Error(Errc::domain, "branching check needs k >= 1");
  if (max_u == 0) throw Error(Errc::domain, "branching check needs max_u >= 1");
  if (max_u > buf.stable_upto())
    throw Error(Errc::uncertified, "branching check: |u| up to " + std::to_string(max_u) +
                                       " exceeds stable_upto " +
                                       std::to_string(buf.stable_upto()));
  const FactorIndex& index = buf.index();
  std::vector<BranchingViolation> out;
  for (std::size_t m = 1; m <= max_u; ++m) {
    const std::size_t ctx_len = k + m + k + d;
    if (ctx_len > buf.size())
      throw Error(Errc::range, "branching check: context of length " + std::to_string(ctx_len) +
                                   " does not fit in the buffer");
    std::map<Word, bool> recurrent;
    for (const FactorRef& ctx : index.distinct_factors(ctx_len)) {
      WordView c = buf.view(ctx);
      WordView u = c.subspan(k, m);
      Word key(u.begin(), u.end());
      auto it = recurrent.find(key);
      if (it == recurrent.end()) it = recurrent.emplace(key, looks_recurrent(buf, u)).first;
      if (!it->second) continue;

      bool found = false;
      for (std::size_t a = 0; a < k && !found; ++a) {        // |r'| = a
        for (std::size_t b = 0; b < k + d && !found; ++b) {  // |s'| = b
          WordView y = c.subspan(k - a, a + m + b);
          found = index.right_extensions(y, 2) >= 2 || index.left_extensions(y, 2) >= 2;
        }
      }
      if (!found) out.push_back({ctx, m});
    }
  }
  return out;
}

}  // namespace wordlab
