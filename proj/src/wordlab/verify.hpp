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

// Registry of executable checks over generated words. Each check returns a
// pass/fail/skipped outcome; failures name a concrete counterexample.

#ifndef WORDLAB_VERIFY_HPP
#define WORDLAB_VERIFY_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/closure.hpp"

namespace wordlab {

enum class VerifyStatus { pass, fail, skipped };

const char* status_name(VerifyStatus s) noexcept;

struct VerifyOutcome {
  std::string name;
  VerifyStatus status = VerifyStatus::pass;
  std::string detail;
};

struct VerifyContext {
  Classifier classifier = &classify;  // swapped out by negative-path tests
  std::size_t max_prefix = std::size_t{1} << 22;
  std::size_t paperfolding_search_max = 512;
};

struct CheckInfo {
  std::string name;
  std::string summary;
  std::function<VerifyOutcome(const VerifyContext&)> run;
};

const std::vector<CheckInfo>& registered_checks();

// `selector` is empty or "all" for everything, else a comma-separated list of
// check names; a trailing '*' matches by prefix. Throws Errc::domain when a
// token matches nothing.
std::vector<VerifyOutcome> run_verify_suite(std::string_view selector,
                                            const VerifyContext& ctx = {});

}  // namespace wordlab

#endif  // WORDLAB_VERIFY_HPP
