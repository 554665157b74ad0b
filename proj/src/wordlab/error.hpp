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

#ifndef WORDLAB_ERROR_HPP
#define WORDLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordlab {

enum class Errc {
  domain,                    // precondition on an argument violated
  parse,                     // malformed textual input (morphism, slope, range)
  unknown_source,            // preset name not in the registry
  uncertified,               // length above the buffer's stable_upto
  unstable,                  // stabilization hit the prefix cap
  insufficient_occurrences,  // fewer than two occurrences of a return target
  range,                     // window does not fit in the buffer
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by stabilized_prefix when doubling reaches the cap. Carries the
// first length whose count still moved and the two counts that disagreed.
class UnstableError : public Error {
 public:
  UnstableError(const std::string& what, std::size_t prefix_length,
                std::size_t length, std::size_t count_short,
                std::size_t count_long, std::size_t certified_upto)
      : Error(Errc::unstable, what),
        prefix_length_(prefix_length),
        length_(length),
        count_short_(count_short),
        count_long_(count_long),
        certified_upto_(certified_upto) {}

  std::size_t prefix_length() const noexcept { return prefix_length_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t count_short() const noexcept { return count_short_; }
  std::size_t count_long() const noexcept { return count_long_; }
  // Largest n such that every length <= n agreed at the cap.
  std::size_t certified_upto() const noexcept { return certified_upto_; }

 private:
  std::size_t prefix_length_;
  std::size_t length_;
  std::size_t count_short_;
  std::size_t count_long_;
  std::size_t certified_upto_;
};

class InsufficientOccurrences : public Error {
 public:
  InsufficientOccurrences(const std::string& what, std::size_t count)
      : Error(Errc::insufficient_occurrences, what), count_(count) {}

  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

}  // namespace wordlab

#endif  // WORDLAB_ERROR_HPP
