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

// Generators for finite prefixes of infinite words, and the prefix buffer
// that certifies how far its factor sets can be trusted.

#ifndef WORDLAB_WORDGEN_HPP
#define WORDLAB_WORDGEN_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wordlab/factor_index.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

class Morphism {
 public:
  // images[i] is the image of letter i; every image must be non-empty and
  // use only letters of `alphabet`.
  Morphism(Alphabet alphabet, std::vector<Word> images);

  // Parses "a=aba,b=bbb". The alphabet is the set of left-hand letters in
  // order of appearance.
  static Morphism parse(std::string_view spec);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& image(Symbol s) const;
  // image(seed) starts with seed and is longer than one letter.
  bool prolongable(Symbol seed) const;
  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

Word apply_morphism(const Morphism& m, WordView w);

// First `len` letters of the fixed point of `m` starting at `seed`.
Word morphic_prefix(const Morphism& m, Symbol seed, std::size_t len);

// Regular paperfolding word over codes {0, 1}: position n (1-based) is 1 iff
// the odd part of n is 1 mod 4.
Word paperfolding_prefix(std::size_t len);

Word ultimately_periodic_prefix(WordView u, WordView v, std::size_t len);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(std::string_view text);
  std::string to_string() const;
};

// Slope of a mechanical word, either an exact fraction or a continued
// fraction [0; a1, a2, ...] whose coefficients are `head` followed by
// `period` repeated forever (empty period = finite expansion).
class Slope {
 public:
  static Slope fraction(std::int64_t num, std::int64_t den);
  static Slope continued_fraction(std::vector<std::uint64_t> head,
                                  std::vector<std::uint64_t> period = {});
  // "p/q", "cf:1,2,3" or "cf:2,(1)" where the parenthesised tail repeats.
  static Slope parse(std::string_view text);

  bool is_rational() const noexcept { return period_.empty(); }
  std::uint64_t coefficient(std::size_t k) const;  // k >= 1
  std::size_t head_size() const noexcept { return head_.size(); }
  std::string to_string() const;

  // Exact value when rational.
  Rational value() const;

 private:
  std::vector<std::uint64_t> head_;
  std::vector<std::uint64_t> period_;
};

// s_n = floor((n+1)a + r) - floor(n a + r) for n = 0..len-1, in exact
// arithmetic. Difference 1 prints as 'a' (code 0), difference 0 as 'b'.
Word mechanical_prefix(const Slope& slope, Rational intercept, std::size_t len);

class WordSource {
 public:
  enum class Kind { morphic, paperfolding, mechanical, ultimately_periodic, literal };

  static WordSource morphic(std::string name, Morphism m, Symbol seed);
  static WordSource paperfolding();
  static WordSource mechanical(Slope slope, Rational intercept);
  static WordSource ultimately_periodic(Alphabet alphabet, Word u, Word v);
  // A finite word analysed as itself.
  static WordSource literal(Alphabet alphabet, Word w);

  Kind kind() const noexcept;
  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::string describe() const;

  // Known to be ultimately periodic from its parameters.
  bool known_periodic() const noexcept;
  // Length of the preperiod for ultimately periodic sources, else 0.
  std::size_t preperiod() const noexcept;
  // Upper bound on the length a prefix can have (literal words only).
  std::size_t max_length() const noexcept;

  Word prefix(std::size_t len) const;

 private:
  struct MorphicParams { Morphism morphism; Symbol seed; };
  struct PaperfoldingParams {};
  struct MechanicalParams { Slope slope; Rational intercept; };
  struct PeriodicParams { Word u; Word v; };
  struct LiteralParams { Word w; };
  using Params = std::variant<MorphicParams, PaperfoldingParams, MechanicalParams,
                              PeriodicParams, LiteralParams>;

  WordSource(std::string name, Alphabet alphabet, Params params)
      : name_(std::move(name)), alphabet_(std::move(alphabet)), params_(std::move(params)) {}

  std::string name_;
  Alphabet alphabet_;
  Params params_;
};

// thue-morse, fibonacci, cantor, period-doubling, paperfolding, tribonacci.
const std::vector<std::string>& preset_names();
// Throws Errc::unknown_source.
WordSource preset(std::string_view name);

class PrefixBuffer {
 public:
  PrefixBuffer(WordSource source, Word data, std::size_t stable_upto);

  // `w` as its own buffer: every length up to |w| is exact.
  static PrefixBuffer of_word(Alphabet alphabet, Word w);

  const WordSource& source() const noexcept { return *source_; }
  const Alphabet& alphabet() const noexcept { return source_->alphabet(); }
  WordView data() const noexcept { return *data_; }
  std::size_t size() const noexcept { return data_->size(); }
  std::size_t stable_upto() const noexcept { return stable_upto_; }
  const FactorIndex& index() const noexcept { return *index_; }

  WordView view(FactorRef f) const { return data().subspan(f.offset, f.length); }
  std::string text(FactorRef f) const { return alphabet().decode(view(f)); }
  std::string text(WordView w) const { return alphabet().decode(w); }

 private:
  std::shared_ptr<const WordSource> source_;
  std::shared_ptr<const Word> data_;
  std::size_t stable_upto_;
  std::shared_ptr<const FactorIndex> index_;
};

struct StabilizeOptions {
  std::size_t max_prefix = std::size_t{1} << 22;
};

// Doubles the prefix length from 4*n_max until the distinct-factor counts of
// every length <= n_max agree between lengths L and 2L. Throws UnstableError
// once 2L would exceed the cap.
PrefixBuffer stabilized_prefix(const WordSource& source, std::size_t n_max,
                               const StabilizeOptions& options = {});

}  // namespace wordlab

#endif  // WORDLAB_WORDGEN_HPP
