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

#include "wordlab/word.hpp"

#include "wordlab/error.hpp"

namespace wordlab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain error";
    case Errc::parse: return "parse error";
    case Errc::unknown_source: return "unknown source";
    case Errc::uncertified: return "uncertified length";
    case Errc::unstable: return "unstable";
    case Errc::insufficient_occurrences: return "insufficient occurrences";
    case Errc::range: return "range error";
  }
  return "error";
}

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.empty() || glyphs_.size() > 256)
    throw Error(Errc::domain, "alphabet must have between 1 and 256 letters");
  for (std::size_t i = 0; i < glyphs_.size(); ++i)
    for (std::size_t j = i + 1; j < glyphs_.size(); ++j)
      if (glyphs_[i] == glyphs_[j])
        throw Error(Errc::domain,
                    std::string("duplicate letter '") + glyphs_[i] + "'");
}

char Alphabet::glyph(Symbol s) const {
  if (!contains(s))
    throw Error(Errc::domain,
                "symbol code " + std::to_string(s) + " outside alphabet");
  return glyphs_[s];
}

std::optional<Symbol> Alphabet::code(char c) const noexcept {
  auto pos = glyphs_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

Word Alphabet::encode(std::string_view text) const {
  Word out;
  out.reserve(text.size());
  for (char c : text) {
    auto s = code(c);
    if (!s)
      throw Error(Errc::domain, std::string("letter '") + c +
                                    "' is not in alphabet \"" + glyphs_ + "\"");
    out.push_back(*s);
  }
  return out;
}

std::string Alphabet::decode(WordView word) const {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(glyph(s));
  return out;
}

}  // namespace wordlab
