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


// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "wordlab/wordlab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  wl_string_free(s);
  return out;
}

wl_source* preset(const char* name) {
  wl_source* s = nullptr;
  REQUIRE(wl_source_preset(name, &s) == WL_OK);
  return s;
}

wl_buffer* stabilize(wl_source* s, size_t n_max) {
  wl_buffer* b = nullptr;
  REQUIRE(wl_buffer_stabilize(s, n_max, 0, &b) == WL_OK);
  return b;
}

}  // namespace

TEST_CASE("presets and prefixes") {
  CHECK(wl_preset_count() == 6);
  CHECK(wl_preset_name(6) == nullptr);
  wl_source* tm = preset("thue-morse");
  char* text = nullptr;
  REQUIRE(wl_source_prefix(tm, 16, &text) == WL_OK);
  CHECK(take(text) == "abbabaabbaababba");
  wl_source_free(tm);

  wl_source* bad = nullptr;
  CHECK(wl_source_preset("nope", &bad) == WL_ERR_UNKNOWN_SOURCE);
  CHECK(bad == nullptr);
  CHECK(std::string(wl_last_error()).find("nope") != std::string::npos);
  CHECK(wl_source_preset(nullptr, &bad) == WL_ERR_NULL_ARG);
}

TEST_CASE("custom sources") {
  wl_source* s = nullptr;
  REQUIRE(wl_source_morphic("a=aba,b=bbb", 'a', &s) == WL_OK);
  char* text = nullptr;
  REQUIRE(wl_source_prefix(s, 9, &text) == WL_OK);
  CHECK(take(text) == "ababbbaba");
  wl_source_free(s);

  CHECK(wl_source_morphic("a=ab,b", 'a', &s) == WL_ERR_PARSE);
  CHECK(wl_source_morphic("a=ab,b=ba", 'c', &s) == WL_ERR_DOMAIN);

  REQUIRE(wl_source_periodic("abc", "c", "ab", &s) == WL_OK);
  REQUIRE(wl_source_prefix(s, 7, &text) == WL_OK);
  CHECK(take(text) == "cababab");
  wl_source_free(s);
  CHECK(wl_source_periodic("ab", "a", "", &s) == WL_ERR_DOMAIN);

  REQUIRE(wl_source_mechanical("cf:(1)", "0", &s) == WL_OK);
  REQUIRE(wl_source_prefix(s, 9, &text) == WL_OK);
  CHECK(take(text) == "babaababa");
  wl_source_free(s);
  CHECK(wl_source_mechanical("3/2", "0", &s) == WL_ERR_DOMAIN);

  REQUIRE(wl_source_literal("ab", "abba", &s) == WL_OK);
  REQUIRE(wl_source_describe(s, &text) == WL_OK);
  CHECK_FALSE(take(text).empty());
  wl_source_free(s);
}

TEST_CASE("classification") {
  int closed = -1;
  size_t frontier = 99;
  REQUIRE(wl_classify("abaaaab", 7, &closed, &frontier) == WL_OK);
  CHECK(closed == 1);
  CHECK(frontier == 2);
  REQUIRE(wl_classify("aabab", 5, &closed, &frontier) == WL_OK);
  CHECK(closed == 0);
  REQUIRE(wl_classify_brute("aa", 2, &closed, &frontier) == WL_OK);
  CHECK(closed == 1);
  CHECK(frontier == 1);
  CHECK(wl_classify("", 0, &closed, &frontier) == WL_ERR_DOMAIN);

  std::vector<size_t> table(6);
  REQUIRE(wl_border_table("aabaaa", 6, table.data()) == WL_OK);
  CHECK(table == std::vector<size_t>{0, 1, 0, 1, 2, 2});
  size_t period = 0;
  REQUIRE(wl_shortest_period("abaab", 5, &period) == WL_OK);
  CHECK(period == 3);
  CHECK(wl_shortest_period("", 0, &period) == WL_ERR_DOMAIN);
}

TEST_CASE("profiles") {
  wl_source* fib = preset("fibonacci");
  wl_buffer* buf = stabilize(fib, 10);
  CHECK(wl_buffer_stable_upto(buf) == 10);
  CHECK(wl_buffer_length(buf) >= 40);

  wl_profile* p = nullptr;
  REQUIRE(wl_profile_compute(buf, 1, 10, 0, 2, &p) == WL_OK);
  REQUIRE(wl_profile_size(p) == 10);
  wl_row row{};
  REQUIRE(wl_profile_row(p, 1, &row) == WL_OK);
  CHECK(row.n == 2);
  CHECK(row.p == 3);
  CHECK(row.op == 2);
  CHECK(row.cl == 1);
  const size_t* lengths = nullptr;
  size_t count = 0;
  REQUIRE(wl_profile_frontiers(p, 1, &lengths, &count) == WL_OK);
  REQUIRE(count == 1);
  CHECK(lengths[0] == 1);
  CHECK(wl_profile_row(p, 10, &row) == WL_ERR_RANGE);

  char* csv = nullptr;
  REQUIRE(wl_profile_csv(p, 0, &csv) == WL_OK);
  const std::string text = take(csv);
  CHECK(text.rfind("n,p,op,cl,frontier_lengths\n1,2,0,2,0;0\n2,3,2,1,1\n", 0) == 0);
  char* again = nullptr;
  REQUIRE(wl_csv_normalize(text.c_str(), &again) == WL_OK);
  CHECK(take(again) == text);
  CHECK(wl_csv_normalize("junk", &again) == WL_ERR_PARSE);

  wl_profile* odd = nullptr;
  size_t max_cl = 0;
  REQUIRE(wl_profile_syndetic(p, 2, 1, &odd, &max_cl) == WL_OK);
  CHECK(wl_profile_size(odd) == 5);
  CHECK(max_cl >= 1);
  CHECK(wl_profile_syndetic(p, 0, 0, &odd, &max_cl) == WL_ERR_DOMAIN);
  wl_profile_free(odd);
  wl_profile_free(p);

  CHECK(wl_profile_compute(buf, 1, 11, 0, 1, &p) == WL_ERR_UNCERTIFIED);
  REQUIRE(wl_profile_compute(buf, 11, 11, 1, 1, &p) == WL_OK);
  REQUIRE(wl_profile_row(p, 0, &row) == WL_OK);
  CHECK(row.approximate == 1);
  wl_profile_free(p);

  char* factors = nullptr;
  REQUIRE(wl_buffer_factors(buf, 3, 0, &factors) == WL_OK);
  CHECK(take(factors) == "aab\naba\nbaa\nbab\n");

  wl_buffer_free(buf);
  wl_source_free(fib);
}

TEST_CASE("unstable sources report their counts") {
  wl_source* tm = preset("thue-morse");
  wl_buffer* buf = nullptr;
  CHECK(wl_buffer_stabilize(tm, 20, 64, &buf) == WL_ERR_UNSTABLE);
  wl_unstable_info info{};
  CHECK(wl_last_unstable(&info) == 1);
  REQUIRE(wl_buffer_prefix(tm, 64, info.certified_upto, &buf) == WL_OK);
  CHECK(wl_buffer_length(buf) == 64);
  CHECK(wl_last_unstable(&info) == 0);
  wl_buffer_free(buf);
  wl_source_free(tm);
}

TEST_CASE("rauzy graphs") {
  wl_source* fib = preset("fibonacci");
  wl_buffer* buf = stabilize(fib, 8);
  wl_rauzy* g = nullptr;
  REQUIRE(wl_rauzy_build(buf, 2, 0, &g) == WL_OK);
  CHECK(wl_rauzy_vertex_count(g) == 3);
  CHECK(wl_rauzy_edge_count(g) == 4);
  char* dot = nullptr;
  REQUIRE(wl_rauzy_dot(g, &dot) == WL_OK);
  const std::string text = take(dot);
  CHECK(text.find("\"aa\" [closed=true, frontier=1];") != std::string::npos);
  char* again = nullptr;
  REQUIRE(wl_dot_normalize(text.c_str(), &again) == WL_OK);
  CHECK(take(again) == text);

  char* left = nullptr;
  char* right = nullptr;
  REQUIRE(wl_rauzy_specials(g, &left, &right) == WL_OK);
  CHECK(take(left) == "ab\n");
  CHECK(take(right) == "ba\n");
  wl_rauzy_free(g);

  CHECK(wl_rauzy_build(buf, 8, 0, &g) == WL_ERR_UNCERTIFIED);
  size_t violations = 1;
  REQUIRE(wl_check_neighbors(buf, 5, &violations) == WL_OK);
  CHECK(violations == 0);
  REQUIRE(wl_check_frontier_distance(buf, 5, 8, &violations) == WL_OK);
  CHECK(violations == 0);
  REQUIRE(wl_check_closed_walks(buf, 5, 8, &violations) == WL_OK);
  CHECK(violations == 0);
  wl_buffer_free(buf);
  wl_source_free(fib);
}

TEST_CASE("return words") {
  wl_source* fib = preset("fibonacci");
  wl_buffer* buf = stabilize(fib, 8);
  wl_returns* r = nullptr;
  REQUIRE(wl_returns_analyze(buf, "b", &r) == WL_OK);
  REQUIRE(wl_returns_count(r) == 2);
  char* w = nullptr;
  // Ordered by complete return: baab before bab.
  REQUIRE(wl_returns_word(r, 0, &w) == WL_OK);
  CHECK(take(w) == "baa");
  REQUIRE(wl_returns_word(r, 1, &w) == WL_OK);
  CHECK(take(w) == "ba");
  REQUIRE(wl_returns_complete(r, 0, &w) == WL_OK);
  CHECK(take(w) == "baab");
  size_t gap = 0;
  REQUIRE(wl_returns_max_gap(r, &gap) == WL_OK);
  CHECK(gap == 3);
  CHECK(wl_returns_word(r, 2, &w) == WL_ERR_RANGE);
  wl_returns_free(r);

  REQUIRE(wl_returns_analyze(buf, "bb", &r) == WL_OK);
  CHECK(wl_returns_occurrences(r) == 0);
  CHECK(wl_returns_max_gap(r, &gap) == WL_ERR_INSUFFICIENT);
  wl_returns_free(r);
  CHECK(wl_returns_analyze(buf, "abc", &r) == WL_ERR_DOMAIN);
  wl_buffer_free(buf);
  wl_source_free(fib);
}

TEST_CASE("verification suite") {
  CHECK(wl_check_count() >= 20);
  CHECK(wl_check_name(wl_check_count()) == nullptr);
  wl_verify_result* r = nullptr;
  REQUIRE(wl_verify_run("closure-oracle", 0, &r) == WL_OK);
  REQUIRE(wl_verify_size(r) == 1);
  const char* name = nullptr;
  const char* detail = nullptr;
  wl_verify_status status{};
  REQUIRE(wl_verify_outcome(r, 0, &name, &status, &detail) == WL_OK);
  CHECK(std::string(name) == "closure-oracle");
  CHECK(status == WL_VERIFY_PASS);
  CHECK(std::string(detail).find("8190 words tested") != std::string::npos);
  CHECK(wl_verify_failures(r) == 0);
  wl_verify_free(r);
  CHECK(wl_verify_run("no-such-check", 0, &r) == WL_ERR_DOMAIN);
}

TEST_CASE("free functions accept NULL") {
  wl_source_free(nullptr);
  wl_buffer_free(nullptr);
  wl_profile_free(nullptr);
  wl_rauzy_free(nullptr);
  wl_returns_free(nullptr);
  wl_verify_free(nullptr);
  wl_string_free(nullptr);
  CHECK(std::string(wl_status_name(WL_ERR_UNSTABLE)) == "unstable");
}
