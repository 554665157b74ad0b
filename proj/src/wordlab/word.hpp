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

#ifndef WORDLAB_WORD_HPP
#define WORDLAB_WORD_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

// Letters are dense codes 0..|A|-1. Printing goes through an Alphabet.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

inline bool lex_less(WordView a, WordView b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool equal(WordView a, WordView b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Maps symbol codes to printable characters and back.
class Alphabet {
 public:
  Alphabet() = default;
  // Each character of `glyphs` names one letter; code i prints as glyphs[i].
  explicit Alphabet(std::string glyphs);

  std::size_t size() const noexcept { return glyphs_.size(); }
  const std::string& glyphs() const noexcept { return glyphs_; }
  char glyph(Symbol s) const;
  std::optional<Symbol> code(char c) const noexcept;
  bool contains(Symbol s) const noexcept { return s < glyphs_.size(); }

  // Throws Errc::domain on characters outside the alphabet.
  Word encode(std::string_view text) const;
  std::string decode(WordView word) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string glyphs_;
};

}  // namespace wordlab

#endif  // WORDLAB_WORD_HPP
