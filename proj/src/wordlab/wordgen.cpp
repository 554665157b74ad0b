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

#include "wordlab/wordgen.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

__extension__ using i128 = __int128;

void require_unit_intercept(const Rational& r) {
  if (r.den <= 0 || r.num < 0 || r.num >= r.den)
    throw Error(Errc::domain, "intercept " + r.to_string() + " must lie in [0, 1)");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view text, const char* what) {
  text = trim(text);
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(Errc::parse, std::string("malformed ") + what + " \"" +
                                 std::string(text) + "\"");
  return value;
}

i128 floor_div(i128 a, i128 b) {
  // b > 0
  i128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

constexpr std::int64_t kMaxInterceptPart = std::int64_t{1} << 31;
constexpr i128 kConvergentCap = i128{1} << 60;

}  // namespace

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw Error(Errc::domain, "morphism needs one image per letter");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty())
      throw Error(Errc::domain, std::string("image of '") + alphabet_.glyphs()[i] +
                                    "' is empty");
    for (Symbol s : images_[i])
      if (!alphabet_.contains(s))
        throw Error(Errc::domain, "image uses a letter outside the alphabet");
  }
}

Morphism Morphism::parse(std::string_view spec) {
  std::string glyphs;
  std::vector<std::string_view> rhs;
  for (auto rule : split(spec, ',')) {
    rule = trim(rule);
    auto eq = rule.find('=');
    if (eq == std::string_view::npos)
      throw Error(Errc::parse, "morphism rule \"" + std::string(rule) + "\" lacks '='");
    auto lhs = trim(rule.substr(0, eq));
    auto image = trim(rule.substr(eq + 1));
    if (lhs.size() != 1)
      throw Error(Errc::parse, "morphism rule \"" + std::string(rule) +
                                   "\" must map a single letter");
    if (glyphs.find(lhs[0]) != std::string::npos)
      throw Error(Errc::parse, std::string("letter '") + lhs[0] + "' mapped twice");
    if (image.empty())
      throw Error(Errc::parse, std::string("image of '") + lhs[0] + "' is empty");
    glyphs.push_back(lhs[0]);
    rhs.push_back(image);
  }
  Alphabet alphabet(glyphs);
  std::vector<Word> images;
  for (auto image : rhs) {
    try {
      images.push_back(alphabet.encode(image));
    } catch (const Error& e) {
      throw Error(Errc::parse, std::string("morphism image: ") + e.what());
    }
  }
  return Morphism(std::move(alphabet), std::move(images));
}

const Word& Morphism::image(Symbol s) const {
  if (!alphabet_.contains(s))
    throw Error(Errc::domain, "symbol code " + std::to_string(s) + " outside morphism alphabet");
  return images_[s];
}

bool Morphism::prolongable(Symbol seed) const {
  if (!alphabet_.contains(seed)) return false;
  const Word& img = images_[seed];
  return img.size() >= 2 && img.front() == seed;
}

std::string Morphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(alphabet_.glyphs()[i]);
    out.push_back('=');
    out += alphabet_.decode(images_[i]);
  }
  return out;
}

Word apply_morphism(const Morphism& m, WordView w) {
  Word out;
  for (Symbol s : w) {
    const Word& img = m.image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word morphic_prefix(const Morphism& m, Symbol seed, std::size_t len) {
  if (len == 0) throw Error(Errc::domain, "prefix length must be at least 1");
  if (!m.prolongable(seed))
    throw Error(Errc::domain, "seed is not prolongable: its image must start with it "
                              "and have length at least 2");
  Word w{seed};
  while (w.size() < len) {
    Word next;
    next.reserve(len);
    for (Symbol s : w) {
      const Word& img = m.image(s);
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= len) break;
    }
    w = std::move(next);
  }
  w.resize(len);
  return w;
}

Word paperfolding_prefix(std::size_t len) {
  if (len == 0) throw Error(Errc::domain, "prefix length must be at least 1");
  Word out(len);
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t m = i + 1;
    while (m % 2 == 0) m /= 2;
    out[i] = (m % 4 == 1) ? 1 : 0;
  }
  return out;
}

Word ultimately_periodic_prefix(WordView u, WordView v, std::size_t len) {
  if (v.empty()) throw Error(Errc::domain, "period word must be non-empty");
  if (len == 0) throw Error(Errc::domain, "prefix length must be at least 1");
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(i < u.size() ? u[i] : v[(i - u.size()) % v.size()]);
  return out;
}

// ---------------------------------------------------------------- Rational

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  Rational r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_int<std::int64_t>(text, "rational");
  } else {
    r.num = parse_int<std::int64_t>(text.substr(0, slash), "rational");
    r.den = parse_int<std::int64_t>(text.substr(slash + 1), "rational");
  }
  if (r.den <= 0) throw Error(Errc::parse, "rational denominator must be positive");
  if (r.den > kMaxInterceptPart || r.num > kMaxInterceptPart || r.num < -kMaxInterceptPart)
    throw Error(Errc::domain, "rational parts must be below 2^31");
  const std::int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

// ------------------------------------------------------------------- Slope

Slope Slope::fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num <= 0 || num >= den)
    throw Error(Errc::domain, "slope must lie strictly between 0 and 1");
  // Euclid gives the finite continued fraction [0; a1, ..., ak].
  std::vector<std::uint64_t> coeffs;
  std::int64_t p = den, q = num;
  while (q != 0) {
    coeffs.push_back(static_cast<std::uint64_t>(p / q));
    std::int64_t r = p % q;
    p = q;
    q = r;
  }
  Slope s;
  s.head_ = std::move(coeffs);
  return s;
}

Slope Slope::continued_fraction(std::vector<std::uint64_t> head,
                                std::vector<std::uint64_t> period) {
  for (auto a : head)
    if (a == 0) throw Error(Errc::domain, "continued fraction coefficients must be >= 1");
  for (auto a : period)
    if (a == 0) throw Error(Errc::domain, "continued fraction coefficients must be >= 1");
  if (period.empty()) {
    if (head.empty() || (head.size() == 1 && head[0] == 1))
      throw Error(Errc::domain, "slope must lie strictly between 0 and 1");
    // [0; ..., a, 1] == [0; ..., a + 1]: keep the canonical form.
    if (head.size() > 1 && head.back() == 1) {
      head.pop_back();
      ++head.back();
    }
  }
  Slope s;
  s.head_ = std::move(head);
  s.period_ = std::move(period);
  return s;
}

Slope Slope::parse(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 3) == "cf:") {
    auto body = text.substr(3);
    std::vector<std::uint64_t> head, period;
    auto open = body.find('(');
    auto head_text = open == std::string_view::npos ? body : body.substr(0, open);
    for (auto tok : split(head_text, ',')) {
      if (trim(tok).empty()) continue;
      head.push_back(parse_int<std::uint64_t>(tok, "continued fraction coefficient"));
    }
    if (open != std::string_view::npos) {
      auto close = body.find(')', open);
      if (close == std::string_view::npos || trim(body.substr(close + 1)) != "")
        throw Error(Errc::parse, "unterminated repeating block in \"" + std::string(text) + "\"");
      for (auto tok : split(body.substr(open + 1, close - open - 1), ','))
        period.push_back(parse_int<std::uint64_t>(tok, "continued fraction coefficient"));
      if (period.empty())
        throw Error(Errc::parse, "empty repeating block");
    }
    if (head.empty() && period.empty())
      throw Error(Errc::parse, "continued fraction \"" + std::string(text) + "\" has no coefficients");
    return continued_fraction(std::move(head), std::move(period));
  }
  Rational r = Rational::parse(text);
  return fraction(r.num, r.den);
}

std::uint64_t Slope::coefficient(std::size_t k) const {
  if (k == 0) return 0;
  if (k <= head_.size()) return head_[k - 1];
  if (period_.empty()) throw Error(Errc::range, "finite continued fraction exhausted");
  return period_[(k - 1 - head_.size()) % period_.size()];
}

std::string Slope::to_string() const {
  std::string out = "cf:";
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(head_[i]);
  }
  if (!period_.empty()) {
    if (!head_.empty()) out.push_back(',');
    out.push_back('(');
    for (std::size_t i = 0; i < period_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(period_[i]);
    }
    out.push_back(')');
  }
  return out;
}

Rational Slope::value() const {
  if (!is_rational()) throw Error(Errc::domain, "slope is irrational");
  i128 h0 = 1, h1 = 0;  // h_{-1}, h_0 with a0 = 0
  i128 k0 = 0, k1 = 1;
  for (auto a : head_) {
    i128 h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > std::numeric_limits<std::int64_t>::max())
      throw Error(Errc::range, "slope denominator overflows 64 bits");
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
  }
  return {static_cast<std::int64_t>(h1), static_cast<std::int64_t>(k1)};
}

Word mechanical_prefix(const Slope& slope, Rational intercept, std::size_t len) {
  if (len == 0) throw Error(Errc::domain, "prefix length must be at least 1");
  require_unit_intercept(intercept);
  const i128 r = intercept.num, s = intercept.den;

  std::vector<i128> floors(len + 1);
  if (slope.is_rational()) {
    const Rational a = slope.value();
    for (std::size_t n = 0; n <= len; ++n)
      floors[n] = floor_div(static_cast<i128>(n) * a.num * s + r * a.den, static_cast<i128>(a.den) * s);
  } else {
    // Consecutive convergents bracket the slope; go as deep as 60 bits allow.
    i128 h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    i128 ph = 0, pk = 1;  // previous convergent
    for (std::size_t k = 1;; ++k) {
      const i128 a = slope.coefficient(k);
      const i128 h2 = a * h1 + h0, k2 = a * k1 + k0;
      if (h2 > kConvergentCap || k2 > kConvergentCap) break;
      ph = h1; pk = k1;
      h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    }
    // (ph/pk, h1/k1) straddle the slope; order them.
    i128 lo_h = ph, lo_k = pk, hi_h = h1, hi_k = k1;
    if (lo_h * hi_k > hi_h * lo_k) {
      std::swap(lo_h, hi_h);
      std::swap(lo_k, hi_k);
    }
    for (std::size_t n = 0; n <= len; ++n) {
      const i128 nn = static_cast<i128>(n);
      const i128 f = floor_div(nn * lo_h * s + r * lo_k, lo_k * s);
      // n*hi + r <= f + 1 pins floor(n*slope + r) to f.
      if (n > 0 && nn * hi_h * s + r * hi_k > (f + 1) * hi_k * s)
        throw Error(Errc::range, "continued fraction precision exhausted at index " +
                                     std::to_string(n));
      floors[n] = f;
    }
  }
  Word out(len);
  for (std::size_t n = 0; n < len; ++n) {
    const i128 diff = floors[n + 1] - floors[n];
    out[n] = diff == 1 ? 0 : 1;
  }
  return out;
}

// -------------------------------------------------------------- WordSource

WordSource WordSource::morphic(std::string name, Morphism m, Symbol seed) {
  if (!m.prolongable(seed))
    throw Error(Errc::domain, "seed is not prolongable: its image must start with it "
                              "and have length at least 2");
  Alphabet alphabet = m.alphabet();
  return WordSource(std::move(name), std::move(alphabet), MorphicParams{std::move(m), seed});
}

WordSource WordSource::paperfolding() {
  return WordSource("paperfolding", Alphabet("01"), PaperfoldingParams{});
}

WordSource WordSource::mechanical(Slope slope, Rational intercept) {
  require_unit_intercept(intercept);
  return WordSource("mechanical", Alphabet("ab"), MechanicalParams{std::move(slope), intercept});
}

WordSource WordSource::ultimately_periodic(Alphabet alphabet, Word u, Word v) {
  if (v.empty()) throw Error(Errc::domain, "period word must be non-empty");
  return WordSource("ultimately-periodic", std::move(alphabet),
                    PeriodicParams{std::move(u), std::move(v)});
}

WordSource WordSource::literal(Alphabet alphabet, Word w) {
  if (w.empty()) throw Error(Errc::domain, "literal word must be non-empty");
  return WordSource("literal", std::move(alphabet), LiteralParams{std::move(w)});
}

WordSource::Kind WordSource::kind() const noexcept {
  return static_cast<Kind>(params_.index());
}

std::string WordSource::describe() const {
  struct Visitor {
    const WordSource& self;
    std::string operator()(const MorphicParams& p) const {
      return "morphic " + p.morphism.to_string() + " seed " +
             std::string(1, self.alphabet_.glyph(p.seed));
    }
    std::string operator()(const PaperfoldingParams&) const { return "regular paperfolding"; }
    std::string operator()(const MechanicalParams& p) const {
      return "mechanical slope " + p.slope.to_string() + " intercept " + p.intercept.to_string();
    }
    std::string operator()(const PeriodicParams& p) const {
      return "ultimately periodic u=\"" + self.alphabet_.decode(p.u) + "\" v=\"" +
             self.alphabet_.decode(p.v) + "\"";
    }
    std::string operator()(const LiteralParams& p) const {
      return "literal word of length " + std::to_string(p.w.size());
    }
  };
  return std::visit(Visitor{*this}, params_);
}

bool WordSource::known_periodic() const noexcept {
  if (std::holds_alternative<PeriodicParams>(params_)) return true;
  if (auto* m = std::get_if<MechanicalParams>(&params_)) return m->slope.is_rational();
  return false;
}

std::size_t WordSource::preperiod() const noexcept {
  if (auto* p = std::get_if<PeriodicParams>(&params_)) return p->u.size();
  return 0;
}

std::size_t WordSource::max_length() const noexcept {
  if (auto* p = std::get_if<LiteralParams>(&params_)) return p->w.size();
  return std::numeric_limits<std::size_t>::max();
}

Word WordSource::prefix(std::size_t len) const {
  struct Visitor {
    std::size_t len;
    Word operator()(const MorphicParams& p) const { return morphic_prefix(p.morphism, p.seed, len); }
    Word operator()(const PaperfoldingParams&) const { return paperfolding_prefix(len); }
    Word operator()(const MechanicalParams& p) const {
      return mechanical_prefix(p.slope, p.intercept, len);
    }
    Word operator()(const PeriodicParams& p) const { return ultimately_periodic_prefix(p.u, p.v, len); }
    Word operator()(const LiteralParams& p) const {
      if (len == 0 || len > p.w.size())
        throw Error(Errc::range, "literal word has only " + std::to_string(p.w.size()) + " letters");
      return Word(p.w.begin(), p.w.begin() + static_cast<std::ptrdiff_t>(len));
    }
  };
  return std::visit(Visitor{len}, params_);
}

// ----------------------------------------------------------------- Presets

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "thue-morse", "fibonacci", "cantor", "period-doubling", "paperfolding", "tribonacci"};
  return names;
}

WordSource preset(std::string_view name) {
  auto morphic = [&](const char* spec) {
    return WordSource::morphic(std::string(name), Morphism::parse(spec), 0);
  };
  if (name == "thue-morse") return morphic("a=ab,b=ba");
  if (name == "fibonacci") return morphic("a=ab,b=a");
  if (name == "cantor") return morphic("a=aba,b=bbb");
  if (name == "period-doubling") return morphic("a=ab,b=aa");
  if (name == "tribonacci") return morphic("a=ab,b=ac,c=a");
  if (name == "paperfolding") return WordSource::paperfolding();
  throw Error(Errc::unknown_source, "unknown source \"" + std::string(name) + "\"");
}

// ------------------------------------------------------------ PrefixBuffer

PrefixBuffer::PrefixBuffer(WordSource source, Word data, std::size_t stable_upto)
    : source_(std::make_shared<const WordSource>(std::move(source))),
      data_(std::make_shared<const Word>(std::move(data))),
      stable_upto_(stable_upto) {
  if (stable_upto_ > data_->size())
    throw Error(Errc::domain, "stable_upto exceeds buffer length");
  for (Symbol s : *data_)
    if (!source_->alphabet().contains(s))
      throw Error(Errc::domain, "buffer contains a symbol outside the alphabet");
  index_ = std::make_shared<const FactorIndex>(WordView(*data_));
}

PrefixBuffer PrefixBuffer::of_word(Alphabet alphabet, Word w) {
  const std::size_t n = w.size();
  Word copy = w;
  return PrefixBuffer(WordSource::literal(std::move(alphabet), std::move(w)), std::move(copy), n);
}

PrefixBuffer stabilized_prefix(const WordSource& source, std::size_t n_max,
                               const StabilizeOptions& options) {
  if (n_max == 0) throw Error(Errc::domain, "n_max must be at least 1");

  if (source.kind() == WordSource::Kind::literal) {
    const std::size_t n = source.max_length();
    if (n_max > n)
      throw Error(Errc::range, "literal word of length " + std::to_string(n) +
                                   " cannot certify length " + std::to_string(n_max));
    return PrefixBuffer(source, source.prefix(n), n);
  }

  std::size_t len = 4 * n_max;
  if (2 * len > options.max_prefix)
    throw UnstableError("prefix cap " + std::to_string(options.max_prefix) +
                            " is below the first comparison length " + std::to_string(2 * len),
                        len, 0, 0, 0, 0);
  auto short_counts = FactorIndex(source.prefix(len)).distinct_counts(n_max);
  std::size_t bad = 0, bad_short = 0, bad_long = 0;
  while (2 * len <= options.max_prefix) {
    Word w = source.prefix(2 * len);
    auto long_counts = FactorIndex(w).distinct_counts(n_max);
    bad = 0;
    for (std::size_t n = 1; n <= n_max && bad == 0; ++n)
      if (short_counts[n] != long_counts[n]) bad = n;
    if (bad == 0) return PrefixBuffer(source, std::move(w), n_max);
    bad_short = short_counts[bad];
    bad_long = long_counts[bad];
    short_counts = std::move(long_counts);
    len *= 2;
  }
  throw UnstableError("factor counts still changing at prefix length " + std::to_string(len) +
                          " (cap " + std::to_string(options.max_prefix) + "): p(" +
                          std::to_string(bad) + ") went from " + std::to_string(bad_short) +
                          " to " + std::to_string(bad_long),
                      len, bad, bad_short, bad_long, bad - 1);
}

}  // namespace wordlab
