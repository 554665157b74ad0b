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

#include <set>
#include <string>

#include "doctest.h"
#include "fixtures/oracle_values.hpp"
#include "wordlab/error.hpp"

namespace wl = wordlab;
namespace fx = wordlab::fixtures;

namespace {

std::set<std::string> texts(const wl::PrefixBuffer& buf, const wl::FactorSet& set) {
  std::set<std::string> out;
  for (const auto& f : set) out.insert(buf.text(f));
  return out;
}

wl::Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const wl::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return wl::Errc::domain;
}

}  // namespace

TEST_CASE("factors_of_length") {
  auto tm = wl::stabilized_prefix(wl::preset("thue-morse"), 4);
  CHECK(texts(tm, wl::factors_of_length(tm, 2)) ==
        std::set<std::string>{"aa", "ab", "ba", "bb"});
  auto fib = wl::stabilized_prefix(wl::preset("fibonacci"), 4);
  CHECK(texts(fib, wl::factors_of_length(fib, 3)) ==
        std::set<std::string>{"aab", "aba", "baa", "bab"});
  CHECK(texts(fib, wl::factors_of_length(fib, 1)) == std::set<std::string>{"a", "b"});
}

TEST_CASE("factor refs point at the first occurrence, in lexicographic order") {
  auto fib = wl::stabilized_prefix(wl::preset("fibonacci"), 4);
  auto set = wl::factors_of_length(fib, 3);
  std::string prev;
  for (const auto& f : set) {
    const std::string t = fib.text(f);
    CHECK(prev < t);
    prev = t;
    CHECK(wl::occurrences(fib.view(f), fib.data()).front() == f.offset);
  }
  const auto aba = fib.alphabet().encode("aba");
  REQUIRE(set.find(fib, aba).has_value());
  CHECK(fib.text(set.refs()[*set.find(fib, aba)]) == "aba");
  CHECK_FALSE(set.find(fib, fib.alphabet().encode("bb")).has_value());
}

TEST_CASE("certification") {
  auto fib = wl::stabilized_prefix(wl::preset("fibonacci"), 4);
  CHECK(error_code([&] { wl::factors_of_length(fib, 0); }) == wl::Errc::domain);
  CHECK(error_code([&] { wl::factors_of_length(fib, 5); }) == wl::Errc::uncertified);
  CHECK(error_code([&] { wl::factors_of_length(fib, fib.size() + 1, true); }) == wl::Errc::range);
  auto forced = wl::factors_of_length(fib, 5, true);
  CHECK(forced.approximate());
  CHECK_FALSE(wl::factors_of_length(fib, 4).approximate());
  CHECK(wl::profile_row(fib, 5, true).approximate);
}

TEST_CASE("profile rows") {
  auto tm = wl::stabilized_prefix(wl::preset("thue-morse"), 8);
  const auto r = wl::profile_row(tm, 2);
  CHECK(r.p == 4);
  CHECK(r.op == 2);
  CHECK(r.cl == 2);
  CHECK(r.frontier_lengths == std::vector<std::size_t>{1, 1});

  auto fib = wl::stabilized_prefix(wl::preset("fibonacci"), 8);
  const auto f = wl::profile_row(fib, 2);
  CHECK(f.p == 3);
  CHECK(f.op == 2);
  CHECK(f.cl == 1);
  CHECK(f.frontier_lengths == std::vector<std::size_t>{1});

  auto cantor = wl::stabilized_prefix(wl::preset("cantor"), 8);
  CHECK(wl::profile_row(cantor, 8).cl == fx::kCantorClosedAt8);
}

TEST_CASE("Thue-Morse profile matches the oracle table") {
  auto tm = wl::stabilized_prefix(wl::preset("thue-morse"), 60);
  const auto rows = wl::profile(tm, 1, 60);
  REQUIRE(rows.size() == 60);
  for (std::size_t n = 1; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(rows[n - 1].n == n);
    CHECK(rows[n - 1].op == fx::kThueMorseOpen[n - 1]);
    CHECK(rows[n - 1].cl == fx::kThueMorseClosed[n - 1]);
  }
}

TEST_CASE("threaded profile equals the serial one") {
  auto pd = wl::stabilized_prefix(wl::preset("period-doubling"), 40);
  CHECK(wl::profile(pd, 1, 40, false, 1) == wl::profile(pd, 1, 40, false, 4));
  CHECK(wl::profile(pd, 3, 3, false, 8).size() == 1);
  CHECK(error_code([&] { wl::profile(pd, 5, 4); }) == wl::Errc::domain);
}

TEST_CASE("syndetic_max_cl") {
  auto tm = wl::stabilized_prefix(wl::preset("thue-morse"), 40);
  const auto rows = wl::profile(tm, 1, 40);
  CHECK(wl::syndetic_max_cl(rows, 1, 0).max_cl == fx::kThueMorseMaxClosedTo40);

  std::vector<wl::ComplexityRow> flat;
  for (std::size_t n = 1; n <= 10; ++n) flat.push_back({n, 5, 2, 3, {1, 1, 1}, false});
  const auto odd = wl::syndetic_max_cl(flat, 2, 1);
  CHECK(odd.max_cl == 3);
  std::set<std::size_t> sample;
  for (const auto& [n, cl] : odd.values) sample.insert(n);
  CHECK(sample == std::set<std::size_t>{1, 3, 5, 7, 9});
  CHECK(wl::syndetic_max_cl(flat, 3, 2).max_cl == 3);

  CHECK(error_code([&] { wl::syndetic_max_cl(flat, 0, 0); }) == wl::Errc::domain);
  CHECK(error_code([&] { wl::syndetic_max_cl(flat, 2, 2); }) == wl::Errc::domain);
  CHECK(error_code([&] { wl::syndetic_max_cl(std::span(flat).first(1), 4, 3); }) ==
        wl::Errc::domain);
}

TEST_CASE("shortest_period") {
  const wl::Alphabet ab("ab");
  CHECK(wl::shortest_period(ab.encode("abab")) == 2);
  CHECK(wl::shortest_period(ab.encode("abaab")) == 3);
  CHECK(wl::shortest_period(ab.encode("aaaa")) == 1);
  CHECK(wl::shortest_period(ab.encode("ab")) == 2);
  CHECK(error_code([] { wl::shortest_period({}); }) == wl::Errc::domain);
}

TEST_CASE("p = op + cl on every preset") {
  for (const auto& name : wl::preset_names()) {
    auto buf = wl::stabilized_prefix(wl::preset(name), 30);
    for (const auto& r : wl::profile(buf, 1, 30)) {
      CAPTURE(name);
      CAPTURE(r.n);
      CHECK(r.p == r.op + r.cl);
      CHECK(r.frontier_lengths.size() == r.cl);
      CHECK(std::is_sorted(r.frontier_lengths.begin(), r.frontier_lengths.end()));
    }
  }
}
