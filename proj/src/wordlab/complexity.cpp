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

#include "wordlab/complexity.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "wordlab/error.hpp"

namespace wordlab {

std::optional<std::size_t> FactorSet::find(const PrefixBuffer& buf, WordView w) const {
  if (w.size() != length_) return std::nullopt;
  auto it = std::partition_point(refs_.begin(), refs_.end(), [&](const FactorRef& f) {
    return lex_less(buf.view(f), w);
  });
  if (it == refs_.end() || !equal(buf.view(*it), w)) return std::nullopt;
  return static_cast<std::size_t>(it - refs_.begin());
}

FactorSet factors_of_length(const PrefixBuffer& buf, std::size_t n, bool force) {
  if (n == 0) throw Error(Errc::domain, "factor length must be at least 1");
  if (n > buf.size())
    throw Error(Errc::range, "factor length " + std::to_string(n) + " exceeds buffer length " +
                                 std::to_string(buf.size()));
  if (n > buf.stable_upto() && !force)
    throw Error(Errc::uncertified, "length " + std::to_string(n) +
                                       " is above the certified range (stable up to " +
                                       std::to_string(buf.stable_upto()) + ")");
  return FactorSet(n, buf.index().distinct_factors(n), n > buf.stable_upto());
}

ComplexityRow profile_row(const PrefixBuffer& buf, std::size_t n, bool force,
                          Classifier classifier) {
  FactorSet set = factors_of_length(buf, n, force);
  ComplexityRow row;
  row.n = n;
  row.p = set.size();
  row.approximate = set.approximate();
  for (const FactorRef& f : set) {
    ClosureVerdict v = classifier(buf.view(f));
    if (v.is_closed()) {
      ++row.cl;
      row.frontier_lengths.push_back(*v.frontier_len());
    } else {
      ++row.op;
    }
  }
  std::sort(row.frontier_lengths.begin(), row.frontier_lengths.end());
  return row;
}

std::vector<ComplexityRow> profile(const PrefixBuffer& buf, std::size_t n_from,
                                   std::size_t n_to, bool force, unsigned threads) {
  if (n_from == 0 || n_from > n_to)
    throw Error(Errc::domain, "profile range must satisfy 1 <= from <= to");
  // Validate the whole range before doing any work.
  factors_of_length(buf, n_to, force);

  const std::size_t count = n_to - n_from + 1;
  std::vector<ComplexityRow> rows(count);
  if (threads <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) rows[i] = profile_row(buf, n_from + i, force);
    return rows;
  }

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += workers)
            rows[i] = profile_row(buf, n_from + i, force);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

SyndeticSample syndetic_max_cl(std::span<const ComplexityRow> rows, std::size_t gap,
                               std::size_t residue) {
  if (gap == 0) throw Error(Errc::domain, "syndetic gap must be at least 1");
  if (residue >= gap) throw Error(Errc::domain, "residue must be below the gap");
  SyndeticSample sample;
  sample.gap = gap;
  sample.residue = residue;
  for (const auto& row : rows) {
    if (row.n % gap != residue) continue;
    sample.values[row.n] = row.cl;
    sample.max_cl = std::max(sample.max_cl, row.cl);
  }
  if (sample.values.empty())
    throw Error(Errc::domain, "no profiled length is " + std::to_string(residue) + " mod " +
                                  std::to_string(gap));
  return sample;
}

std::size_t shortest_period(WordView w) {
  if (w.empty()) throw Error(Errc::domain, "shortest_period: empty word");
  return w.size() - longest_border(w);
}

}  // namespace wordlab
