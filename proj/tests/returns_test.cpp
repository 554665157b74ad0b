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

#include <set>
#include <string>

#include "doctest.h"
#include "fixtures/oracle_values.hpp"
#include "wordlab/closure.hpp"
#include "wordlab/error.hpp"

namespace wl = wordlab;
namespace fx = wordlab::fixtures;

namespace {

std::set<std::string> texts(const wl::Alphabet& a, const std::vector<wl::Word>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(a.decode(w));
  return out;
}

wl::PrefixBuffer periodic_ab() {
  const wl::Alphabet ab("ab");
  return wl::stabilized_prefix(wl::WordSource::ultimately_periodic(ab, {}, ab.encode("ab")), 8);
}

}  // namespace

TEST_CASE("complete first returns and return words") {
  auto fib = wl::stabilized_prefix(wl::preset("fibonacci"), 8);
  const auto& ab = fib.alphabet();
  CHECK(texts(ab, wl::complete_first_returns(fib, ab.encode("a"))) ==
        std::set<std::string>{"aa", "aba"});
  CHECK(texts(ab, wl::complete_first_returns(fib, ab.encode("b"))) ==
        std::set<std::string>{"baab", "bab"});
  CHECK(texts(ab, wl::return_words(fib, ab.encode("a"))) == std::set<std::string>{"a", "ab"});
  CHECK(texts(ab, wl::return_words(fib, ab.encode("b"))) == std::set<std::string>{"baa", "ba"});

  auto p = periodic_ab();
  CHECK(texts(ab, wl::complete_first_returns(p, ab.encode("ab"))) ==
        std::set<std::string>{"abab"});
  CHECK(texts(ab, wl::return_words(p, ab.encode("ab"))) == std::set<std::string>{"ab"});
}

TEST_CASE("max_gap") {
  const wl::Alphabet ab("ab");
  auto fib = wl::PrefixBuffer(wl::preset("fibonacci"), ab.encode("abaababaab"), 0);
  CHECK(wl::max_gap(fib, ab.encode("b")) == 3);
  CHECK(wl::max_gap(periodic_ab(), ab.encode("a")) == 2);
  auto tm = wl::stabilized_prefix(wl::preset("thue-morse"), 16);
  CHECK(wl::max_gap(tm, ab.encode("aa")) == fx::kThueMorseMaxGapAA);
}

TEST_CASE("rare targets") {
  const wl::Alphabet ab("ab");
  auto buf = wl::PrefixBuffer::of_word(ab, ab.encode("aabab"));
  const auto v = ab.encode("aa");
  const auto report = wl::analyze_returns(buf, v);
  CHECK(report.positions == std::vector<std::size_t>{0});
  CHECK(report.return_words.empty());
  CHECK_FALSE(report.max_gap.has_value());
  CHECK(report.buffer_length == 5);
  try {
    (void)wl::return_words(buf, v);
    FAIL("expected insufficient occurrences");
  } catch (const wl::InsufficientOccurrences& e) {
    CHECK(e.code() == wl::Errc::insufficient_occurrences);
    CHECK(e.count() == 1);
  }
  CHECK_THROWS_AS(wl::max_gap(buf, ab.encode("bb")), wl::InsufficientOccurrences);
  CHECK_THROWS_AS(wl::complete_first_returns(buf, v), wl::InsufficientOccurrences);
  CHECK_THROWS_AS(wl::analyze_returns(buf, {}), wl::Error);
}

TEST_CASE("Fibonacci factors have two return words at the oracle prefix length") {
  auto full = wl::stabilized_prefix(wl::preset("fibonacci"), 15);
  const auto fib = wl::preset("fibonacci");
  for (std::size_t m = 1; m <= 15; ++m) {
    const std::size_t need = fx::kFibonacciReturnPrefix[m];
    wl::PrefixBuffer exact(fib, fib.prefix(need), 0);
    wl::PrefixBuffer short_by_one(fib, fib.prefix(need - 1), 0);
    bool shorter_misses = false;
    for (const auto& f : full.index().distinct_factors(m)) {
      CAPTURE(full.text(f));
      CHECK(wl::analyze_returns(exact, full.view(f)).return_words.size() == 2);
      shorter_misses |= wl::analyze_returns(short_by_one, full.view(f)).return_words.size() < 2;
    }
    // The oracle length is the smallest that works.
    CHECK(shorter_misses);
  }
}

TEST_CASE("complete returns are closed") {
  for (const auto& name : wl::preset_names()) {
    auto buf = wl::stabilized_prefix(wl::preset(name), 12);
    for (std::size_t m = 1; m <= 5; ++m)
      for (const auto& f : buf.index().distinct_factors(m))
        for (const auto& c : wl::analyze_returns(buf, buf.view(f)).complete_returns) {
          const auto v = wl::classify(buf.view(c));
          REQUIRE(v.is_closed());
          CHECK(*v.frontier_len() >= m);
        }
  }
}

TEST_CASE("looks_recurrent") {
  const wl::Alphabet ab("ab");
  auto buf = wl::PrefixBuffer::of_word(ab, ab.encode("bbbbaaaaabab"));
  CHECK(wl::looks_recurrent(buf, ab.encode("ab")));
  CHECK_FALSE(wl::looks_recurrent(buf, ab.encode("bb")));
}

TEST_CASE("branching") {
  auto tm = wl::stabilized_prefix(wl::preset("thue-morse"), 64);
  CHECK(wl::check_branching(tm, 17, 2, 6).empty());
  CHECK_THROWS_AS(wl::check_branching(tm, 0, 2, 6), wl::Error);
  CHECK_THROWS_AS(wl::check_branching(tm, 3, 2, 0), wl::Error);
  // A periodic word has no special factors at all, so every context fails.
  const wl::Alphabet ab("ab");
  auto p = wl::stabilized_prefix(wl::WordSource::ultimately_periodic(ab, {}, ab.encode("ab")), 8);
  CHECK_FALSE(wl::check_branching(p, 2, 1, 3).empty());
}
