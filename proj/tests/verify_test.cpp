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


#include "wordlab/verify.hpp"

#include <set>
#include <string>

#include "doctest.h"
#include "wordlab/error.hpp"

namespace wl = wordlab;

namespace {

// Reports closed words of length 7 with frontier 2 as open.
wl::ClosureVerdict corrupted(wl::WordView w) {
  const auto v = wl::classify(w);
  if (v.is_closed() && *v.frontier_len() == 2 && w.size() == 7) return wl::ClosureVerdict::open();
  return v;
}

}  // namespace

TEST_CASE("registry names are unique") {
  std::set<std::string> names;
  for (const auto& c : wl::registered_checks()) {
    CHECK_FALSE(c.summary.empty());
    CHECK(names.insert(c.name).second);
  }
  CHECK(names.size() >= 20);
}

TEST_CASE("full suite passes") {
  const auto outcomes = wl::run_verify_suite("all");
  CHECK(outcomes.size() == wl::registered_checks().size());
  for (const auto& o : outcomes) {
    CAPTURE(o.name);
    CAPTURE(o.detail);
    CHECK(o.status != wl::VerifyStatus::fail);
  }
}

TEST_CASE("selecting the closure oracle") {
  const auto outcomes = wl::run_verify_suite("closure-oracle");
  REQUIRE(outcomes.size() == 1);
  CHECK(outcomes[0].status == wl::VerifyStatus::pass);
  CHECK(outcomes[0].detail.find("8190 words tested") != std::string::npos);
}

TEST_CASE("selectors") {
  CHECK(wl::run_verify_suite("rauzy-*").size() == 4);
  CHECK(wl::run_verify_suite("closure-examples,cantor-closed").size() == 2);
  CHECK(wl::run_verify_suite("").size() == wl::registered_checks().size());
  CHECK_THROWS_AS(wl::run_verify_suite("nope"), wl::Error);
  CHECK_THROWS_AS(wl::run_verify_suite("closure-oracle,nope*"), wl::Error);
}

TEST_CASE("a corrupted classifier is caught with a counterexample") {
  wl::VerifyContext ctx;
  ctx.classifier = corrupted;
  const auto outcomes = wl::run_verify_suite("closure-oracle,closure-examples", ctx);
  REQUIRE(outcomes.size() == 2);
  for (const auto& o : outcomes) {
    CAPTURE(o.name);
    CHECK(o.status == wl::VerifyStatus::fail);
  }
  // First binary word of length 7 with a length-2 frontier in counting order.
  CHECK(outcomes[0].detail.find("\"aababaa\"") != std::string::npos);
  CHECK(outcomes[1].detail.find("abaaaab") != std::string::npos);
}

TEST_CASE("a low cap turns into failures, not crashes") {
  wl::VerifyContext ctx;
  ctx.max_prefix = 32;
  const auto outcomes = wl::run_verify_suite("cantor-closed", ctx);
  REQUIRE(outcomes.size() == 1);
  CHECK(outcomes[0].status == wl::VerifyStatus::fail);
  CHECK(outcomes[0].detail.find("error") != std::string::npos);
}

TEST_CASE("paperfolding search below the first zero is skipped") {
  wl::VerifyContext ctx;
  ctx.paperfolding_search_max = 17;
  const auto outcomes = wl::run_verify_suite("paperfolding-closed-zero", ctx);
  REQUIRE(outcomes.size() == 1);
  CHECK(outcomes[0].status == wl::VerifyStatus::skipped);
}

TEST_CASE("status names") {
  CHECK(std::string(wl::status_name(wl::VerifyStatus::pass)) == "PASS");
  CHECK(std::string(wl::status_name(wl::VerifyStatus::fail)) == "FAIL");
  CHECK(std::string(wl::status_name(wl::VerifyStatus::skipped)) == "SKIP");
}
