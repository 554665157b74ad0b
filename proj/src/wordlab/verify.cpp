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

#include <algorithm>
#include <set>

#include "wordlab/complexity.hpp"
#include "wordlab/error.hpp"
#include "wordlab/rauzy.hpp"
#include "wordlab/returns.hpp"
#include "wordlab/wordgen.hpp"

namespace wordlab {

namespace {

// Regression values frozen from tests/oracle/oracle.py.
constexpr std::size_t kFibonacciReturnPrefix = 90;
constexpr std::size_t kThueMorseOpenThreshold = 18;
constexpr std::size_t kThueMorseClosedThreshold = 44;
constexpr std::size_t kPaperfoldingFirstClosedZero = 18;

const Alphabet& binary() {
  static const Alphabet ab("ab");
  return ab;
}

std::vector<Word> binary_words(std::size_t len) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << len);
  for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
    Word w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = static_cast<Symbol>((bits >> (len - 1 - i)) & 1);
    out.push_back(std::move(w));
  }
  return out;
}

// Not u^k for any shorter u, by trying every proper divisor.
bool is_primitive(WordView w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool power = true;
    for (std::size_t i = d; i < n && power; ++i) power = w[i] == w[i - d];
    if (power) return false;
  }
  return true;
}

Word rotate(WordView u, std::size_t shift) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[(i + shift) % u.size()];
  return out;
}

std::string quoted(const Alphabet& a, WordView w) { return "\"" + a.decode(w) + "\""; }

std::string verdict_text(const ClosureVerdict& v) {
  return v.is_closed() ? "closed frontier=" + std::to_string(*v.frontier_len()) : "open";
}

VerifyOutcome pass(std::string detail) { return {"", VerifyStatus::pass, std::move(detail)}; }
VerifyOutcome fail(std::string detail) { return {"", VerifyStatus::fail, std::move(detail)}; }
VerifyOutcome skipped(std::string detail) { return {"", VerifyStatus::skipped, std::move(detail)}; }

PrefixBuffer preset_buffer(const std::string& name, std::size_t n_max, const VerifyContext& ctx) {
  return stabilized_prefix(preset(name), n_max, {ctx.max_prefix});
}

const std::vector<std::string>& aperiodic_presets() { return preset_names(); }

// ------------------------------------------------------------------ closure

VerifyOutcome closure_oracle(const VerifyContext& ctx) {
  std::size_t tested = 0;
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const Word& w : binary_words(len)) {
      ++tested;
      const ClosureVerdict fast = ctx.classifier(w);
      const ClosureVerdict brute = classify_brute(w);
      if (!(fast == brute))
        return fail("mismatch on " + quoted(binary(), w) + " (length " + std::to_string(len) +
                    "): classifier says " + verdict_text(fast) + ", brute force says " +
                    verdict_text(brute));
    }
  }
  return pass(std::to_string(tested) + " words tested, 0 mismatches");
}

VerifyOutcome closure_examples(const VerifyContext& ctx) {
  struct Case { const char* word; ClosureVerdict expected; };
  const Case cases[] = {{"abaaaab", ClosureVerdict::closed(2)},
                        {"aabab", ClosureVerdict::open()},
                        {"aabaaa", ClosureVerdict::open()}};
  for (const auto& c : cases) {
    const ClosureVerdict got = ctx.classifier(binary().encode(c.word));
    if (!(got == c.expected))
      return fail(std::string("\"") + c.word + "\": expected " + verdict_text(c.expected) +
                  ", got " + verdict_text(got));
  }
  return pass("abaaaab closed (frontier 2); aabab open; aabaaa open");
}

VerifyOutcome closure_invariants(const VerifyContext& ctx) {
  std::size_t closed = 0, primitive = 0;
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const Word& w : binary_words(len)) {
      auto table = border_table(w);
      for (std::size_t i = 0; i + 1 < table.size(); ++i)
        if (table[i + 1] > table[i] + 1)
          return fail("border table of " + quoted(binary(), w) + " jumps by more than 1 at " +
                      std::to_string(i + 1));
      const ClosureVerdict v = ctx.classifier(w);
      if (v.is_closed() && len > 1) {
        ++closed;
        const std::size_t f = *v.frontier_len();
        if (f == 0 || f >= len)
          return fail(quoted(binary(), w) + " closed with frontier length " + std::to_string(f));
        const std::vector<std::size_t> expect{0, len - f};
        if (occurrences(WordView(w).first(f), w) != expect)
          return fail("frontier of " + quoted(binary(), w) + " occurs internally");
      }
      if (len <= 10 && is_primitive(w)) {
        ++primitive;
        Word ww = w;
        ww.insert(ww.end(), w.begin(), w.end());
        const std::vector<std::size_t> expect{0, len};
        if (occurrences(w, ww) != expect)
          return fail("primitive " + quoted(binary(), w) + " occurs internally in its square");
      }
    }
  }
  return pass(std::to_string(closed) + " closed words with clean frontiers; " +
              std::to_string(primitive) + " primitive words checked in their squares");
}

// --------------------------------------------------------------- complexity

VerifyOutcome complexity_identity(const VerifyContext& ctx) {
  std::size_t rows = 0;
  for (const auto& name : preset_names()) {
    PrefixBuffer buf = preset_buffer(name, 30, ctx);
    for (std::size_t n = 1; n <= 30; ++n) {
      const ComplexityRow r = profile_row(buf, n, false, ctx.classifier);
      ++rows;
      if (r.p != r.op + r.cl || r.frontier_lengths.size() != r.cl)
        return fail(name + " n=" + std::to_string(n) + ": p=" + std::to_string(r.p) +
                    " op=" + std::to_string(r.op) + " cl=" + std::to_string(r.cl));
      if (n == 1 && (r.op != 0 || r.cl != r.p))
        return fail(name + " n=1: letters must all be closed, got op=" + std::to_string(r.op));
    }
  }
  return pass(std::to_string(rows) + " rows over " + std::to_string(preset_names().size()) +
              " presets, p = op + cl everywhere");
}

VerifyOutcome morse_hedlund(const VerifyContext& ctx) {
  for (const auto& name : aperiodic_presets()) {
    PrefixBuffer buf = preset_buffer(name, 20, ctx);
    auto counts = buf.index().distinct_counts(20);
    for (std::size_t n = 1; n <= 20; ++n)
      if (counts[n] < n + 1)
        return fail(name + ": p(" + std::to_string(n) + ") = " + std::to_string(counts[n]) +
                    " < n + 1");
  }
  return pass("p(n) >= n + 1 for n <= 20 on every aperiodic preset");
}

VerifyOutcome fibonacci_sturmian(const VerifyContext& ctx) {
  PrefixBuffer buf = preset_buffer("fibonacci", 30, ctx);
  for (std::size_t n = 1; n <= 30; ++n) {
    const std::size_t p = factors_of_length(buf, n).size();
    if (p != n + 1)
      return fail("p(" + std::to_string(n) + ") = " + std::to_string(p) + ", expected " +
                  std::to_string(n + 1));
  }
  return pass("p(n) = n + 1 for n <= 30");
}

VerifyOutcome cantor_closed(const VerifyContext& ctx) {
  PrefixBuffer buf = preset_buffer("cantor", 64, ctx);
  std::string seen;
  for (std::size_t n : {8, 22, 64}) {
    const ComplexityRow r = profile_row(buf, n, false, ctx.classifier);
    if (r.cl != 1)
      return fail("cl(" + std::to_string(n) + ") = " + std::to_string(r.cl) + ", expected 1");
    seen += (seen.empty() ? "" : ", ") + std::string("cl(") + std::to_string(n) + ")=1";
  }
  return pass(seen + " (prefix length " + std::to_string(buf.size()) + ")");
}

VerifyOutcome periodic_collapse(const VerifyContext& ctx) {
  std::size_t pairs = 0, words = 0;
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const Word& v : binary_words(len)) {
      if (!is_primitive(v)) continue;
      ++words;
      PrefixBuffer buf = stabilized_prefix(WordSource::ultimately_periodic(binary(), {}, v), 20,
                                           {ctx.max_prefix});
      for (std::size_t n = 2 * len; n <= 20; ++n) {
        ++pairs;
        const ComplexityRow r = profile_row(buf, n, false, ctx.classifier);
        if (r.op != 0)
          return fail("(" + binary().decode(v) + ")^w: op(" + std::to_string(n) + ") = " +
                      std::to_string(r.op));
        for (const FactorRef& f : factors_of_length(buf, n))
          if (!classify_brute(buf.view(f)).is_closed())
            return fail("(" + binary().decode(v) + ")^w: brute force finds " +
                        quoted(binary(), buf.view(f)) + " open");
      }
    }
  }
  return pass(std::to_string(words) + " primitive periods, " + std::to_string(pairs) +
              " lengths, no open factors");
}

VerifyOutcome period_construction(const VerifyContext& ctx) {
  constexpr std::size_t kPower = 3;
  std::size_t built = 0;
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const Word& u : binary_words(len)) {
      if (!is_primitive(u)) continue;
      for (std::size_t p = 0; p < len; ++p) {
        std::set<Word> distinct;
        for (std::size_t i = 0; i < len; ++i) {
          const Word r = rotate(u, i);
          Word w, frontier;
          for (std::size_t k = 0; k < kPower; ++k) w.insert(w.end(), r.begin(), r.end());
          w.insert(w.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(p + 1));
          frontier.assign(w.begin() + static_cast<std::ptrdiff_t>(len), w.end());
          const ClosureVerdict v = ctx.classifier(w);
          if (!v.is_closed() || *v.frontier_len() != frontier.size())
            return fail(quoted(binary(), w) + " built from u=" + quoted(binary(), u) +
                        ": expected closed frontier=" + std::to_string(frontier.size()) +
                        ", got " + verdict_text(v));
          if (!equal(WordView(w).first(frontier.size()), frontier))
            return fail(quoted(binary(), w) + ": frontier is not (r^i(u))^(n-1) u_i..u_(i+p)");
          distinct.insert(w);
          ++built;
        }
        if (distinct.size() != len)
          return fail("u=" + quoted(binary(), u) + " p=" + std::to_string(p) + ": only " +
                      std::to_string(distinct.size()) + " distinct words from " +
                      std::to_string(len) + " rotations");
      }
    }
  }
  return pass(std::to_string(built) + " words, all closed with the expected frontier");
}

VerifyOutcome thue_morse_open(const VerifyContext& ctx) {
  PrefixBuffer buf = preset_buffer("thue-morse", 40, ctx);
  std::size_t min_op = SIZE_MAX, at = 0;
  for (std::size_t n = 10; n <= 40; ++n) {
    const ComplexityRow r = profile_row(buf, n, false, ctx.classifier);
    if (r.op < min_op) {
      min_op = r.op;
      at = n;
    }
  }
  const std::string detail = "min op(n) over [10,40] = " + std::to_string(min_op) + " at n=" +
                             std::to_string(at) + ", threshold " +
                             std::to_string(kThueMorseOpenThreshold);
  return min_op >= kThueMorseOpenThreshold ? pass(detail) : fail(detail);
}

VerifyOutcome thue_morse_closed(const VerifyContext& ctx) {
  PrefixBuffer buf = preset_buffer("thue-morse", 60, ctx);
  std::vector<ComplexityRow> rows;
  for (std::size_t n = 1; n <= 60; ++n) rows.push_back(profile_row(buf, n, false, ctx.classifier));
  std::size_t worst = SIZE_MAX;
  std::string worst_at;
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t r = 0; r < d; ++r) {
      const SyndeticSample s = syndetic_max_cl(rows, d, r);
      if (s.max_cl < worst) {
        worst = s.max_cl;
        worst_at = std::to_string(r) + " mod " + std::to_string(d);
      }
      if (s.max_cl < kThueMorseClosedThreshold)
        return fail("n = " + std::to_string(r) + " mod " + std::to_string(d) +
                    ": max cl = " + std::to_string(s.max_cl) + " < " +
                    std::to_string(kThueMorseClosedThreshold));
    }
  }
  return pass("smallest progression maximum " + std::to_string(worst) + " (" + worst_at +
              "), threshold " + std::to_string(kThueMorseClosedThreshold));
}

VerifyOutcome paperfolding_zero(const VerifyContext& ctx) {
  const std::size_t limit = ctx.paperfolding_search_max;
  PrefixBuffer buf = preset_buffer("paperfolding", limit, ctx);
  for (std::size_t n = 1; n <= limit; ++n) {
    if (profile_row(buf, n, false, ctx.classifier).cl != 0) continue;
    const std::string detail = "first n with cl(n) = 0 is " + std::to_string(n) +
                               " (pinned " + std::to_string(kPaperfoldingFirstClosedZero) + ")";
    return n == kPaperfoldingFirstClosedZero ? pass(detail) : fail(detail);
  }
  return skipped("no n <= " + std::to_string(limit) + " with cl(n) = 0");
}

// -------------------------------------------------------------------- rauzy

template <typename Fn>
VerifyOutcome over_small_words(std::size_t max_len, Fn&& per_word) {
  std::size_t words = 0;
  for (std::size_t len = 2; len <= max_len; ++len) {
    for (const Word& w : binary_words(len)) {
      ++words;
      PrefixBuffer buf = PrefixBuffer::of_word(binary(), w);
      std::string problem = per_word(buf);
      if (!problem.empty()) return fail("word " + quoted(binary(), w) + ": " + problem);
    }
  }
  return pass(std::to_string(words) + " words");
}

VerifyOutcome rauzy_neighbors(const VerifyContext& ctx) {
  std::size_t checked = 0;
  for (const auto& name : preset_names()) {
    PrefixBuffer buf = preset_buffer(name, 20, ctx);
    for (std::size_t n = 2; n <= 12; ++n, ++checked) {
      auto v = check_closed_neighbor_uniqueness(buf, n, ctx.classifier);
      if (!v.empty())
        return fail(name + " n=" + std::to_string(n) + ": " + quoted(buf.alphabet(), buf.view(v[0].word)) +
                    " has " + std::to_string(v[0].closed_predecessors) + " closed predecessors, " +
                    std::to_string(v[0].closed_successors) + " closed successors");
    }
  }
  VerifyOutcome words = over_small_words(12, [&](const PrefixBuffer& buf) -> std::string {
    for (std::size_t n = 2; n <= buf.size(); ++n) {
      auto v = check_closed_neighbor_uniqueness(buf, n, ctx.classifier);
      if (!v.empty())
        return "n=" + std::to_string(n) + " core " + quoted(buf.alphabet(), buf.view(v[0].word));
    }
    return {};
  });
  if (words.status != VerifyStatus::pass) return words;
  return pass(std::to_string(checked) + " preset graphs and " + words.detail +
              " as their own buffers: no vertex with two closed neighbours on one side");
}

VerifyOutcome rauzy_frontier_distance(const VerifyContext& ctx) {
  auto describe = [](const PrefixBuffer& buf, std::size_t n, const FrontierViolation& v) {
    return "n=" + std::to_string(n) + " windows at " + std::to_string(v.position) + " and " +
           std::to_string(v.position + v.shift) + " (" +
           quoted(buf.alphabet(), buf.data().subspan(v.position, n)) + ", " +
           quoted(buf.alphabet(), buf.data().subspan(v.position + v.shift, n)) +
           ") have frontiers " + std::to_string(v.frontier_first) + " and " +
           std::to_string(v.frontier_second);
  };
  for (const auto& name : preset_names()) {
    PrefixBuffer buf = preset_buffer(name, 20, ctx);
    for (std::size_t n = 1; n <= 12; ++n) {
      auto v = check_frontier_distance(buf, n, 8, ctx.classifier);
      if (!v.empty()) return fail(name + ": " + describe(buf, n, v[0]));
    }
  }
  VerifyOutcome words = over_small_words(12, [&](const PrefixBuffer& buf) -> std::string {
    for (std::size_t n = 1; n < buf.size(); ++n) {
      auto v = check_frontier_distance(buf, n, 8, ctx.classifier);
      if (!v.empty()) return describe(buf, n, v[0]);
    }
    return {};
  });
  if (words.status != VerifyStatus::pass) return words;
  return pass("presets n<=12 and " + words.detail + ", i_max=8: ||u1|-|u2|| < i everywhere");
}

VerifyOutcome rauzy_closed_walks(const VerifyContext& ctx) {
  for (const auto& name : preset_names()) {
    PrefixBuffer buf = preset_buffer(name, 20, ctx);
    for (std::size_t n = 1; n <= 10; ++n) {
      auto v = check_closed_walks(buf, n, 12, ctx.classifier);
      if (!v.empty())
        return fail(name + " n=" + std::to_string(n) + ": walk " + std::to_string(v[0].position) +
                    "->" + std::to_string(v[0].position + v[0].shift) + " frontiers " +
                    std::to_string(v[0].frontier_first) + "/" +
                    std::to_string(v[0].frontier_second) + " with " +
                    std::to_string(v[0].open_between) + " open windows between");
    }
  }
  return pass("presets n<=10, walks <= 12 steps");
}

VerifyOutcome rauzy_consistency(const VerifyContext& ctx) {
  std::size_t graphs = 0;
  for (const auto& name : preset_names()) {
    PrefixBuffer buf = preset_buffer(name, 20, ctx);
    auto counts = buf.index().distinct_counts(16);
    for (std::size_t n = 1; n <= 15; ++n, ++graphs) {
      RauzyGraph g = rauzy_graph(buf, n);
      const std::string at = name + " n=" + std::to_string(n);
      if (g.vertices.size() != counts[n] || g.edges.size() != counts[n + 1])
        return fail(at + ": |V|=" + std::to_string(g.vertices.size()) + " |E|=" +
                    std::to_string(g.edges.size()) + " but p(n)=" + std::to_string(counts[n]) +
                    " p(n+1)=" + std::to_string(counts[n + 1]));
      auto out = g.out_degrees();
      auto in = g.in_degrees();
      std::size_t sum_out = 0, sum_in = 0;
      for (auto d : out) sum_out += d;
      for (auto d : in) sum_in += d;
      if (sum_out != g.edges.size() || sum_in != g.edges.size())
        return fail(at + ": degree sums do not match the edge count");
      SpecialReport s = special_factors(buf, n);
      std::size_t right = 0, left = 0;
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        WordView w = buf.view(g.vertices[v]);
        const bool r = buf.index().right_extensions(w, 2) >= 2;
        const bool l = buf.index().left_extensions(w, 2) >= 2;
        right += r;
        left += l;
        if (r != (out[v] >= 2) || l != (in[v] >= 2))
          return fail(at + ": special status of " + quoted(buf.alphabet(), w) +
                      " disagrees with its degrees");
      }
      if (s.right_specials.size() != right || s.left_specials.size() != left)
        return fail(at + ": special report disagrees with direct extension counts");
    }
  }
  return pass(std::to_string(graphs) + " graphs: |V| = p(n), |E| = p(n+1), specials match degrees");
}

VerifyOutcome right_specials_exist(const VerifyContext& ctx) {
  for (const auto& name : aperiodic_presets()) {
    PrefixBuffer buf = preset_buffer(name, 16, ctx);
    for (std::size_t n = 1; n <= 15; ++n)
      if (special_factors(buf, n).right_specials.empty())
        return fail(name + ": no right special factor of length " + std::to_string(n));
  }
  return pass("every aperiodic preset has a right special factor for each n <= 15");
}

// ------------------------------------------------------------------ returns

VerifyOutcome fibonacci_returns(const VerifyContext& ctx) {
  PrefixBuffer full = preset_buffer("fibonacci", 15, ctx);
  const WordSource fib = preset("fibonacci");
  PrefixBuffer window(fib, fib.prefix(kFibonacciReturnPrefix), 0);
  std::size_t factors = 0;
  for (std::size_t m = 1; m <= 15; ++m) {
    for (const FactorRef& f : factors_of_length(full, m)) {
      ++factors;
      const ReturnReport r = analyze_returns(window, full.view(f));
      if (r.return_words.size() != 2)
        return fail(quoted(full.alphabet(), full.view(f)) + " has " +
                    std::to_string(r.return_words.size()) + " return words in the first " +
                    std::to_string(kFibonacciReturnPrefix) + " letters");
    }
  }
  return pass(std::to_string(factors) + " factors of length <= 15, each with exactly 2 return "
              "words in a prefix of length " + std::to_string(kFibonacciReturnPrefix));
}

VerifyOutcome returns_closed(const VerifyContext& ctx) {
  std::size_t returns = 0;
  for (const auto& name : preset_names()) {
    PrefixBuffer buf = preset_buffer(name, 20, ctx);
    for (std::size_t m = 1; m <= 6; ++m) {
      for (const FactorRef& f : factors_of_length(buf, m)) {
        const ReturnReport r = analyze_returns(buf, buf.view(f));
        if (r.return_words.size() != r.complete_returns.size())
          return fail(name + ": return word and complete return counts differ");
        for (const FactorRef& c : r.complete_returns) {
          ++returns;
          const ClosureVerdict v = ctx.classifier(buf.view(c));
          if (!v.is_closed() || *v.frontier_len() < m)
            return fail(name + ": complete return " + quoted(buf.alphabet(), buf.view(c)) +
                        " to " + quoted(buf.alphabet(), buf.view(f)) + " is " + verdict_text(v));
        }
      }
    }
  }
  return pass(std::to_string(returns) + " complete returns, all closed with frontier >= |v|");
}

VerifyOutcome unique_return(const VerifyContext& ctx) {
  // Periods of u v^w; only the periodic part matters for long factors.
  const char* periods[] = {"ab", "aab", "abb", "cab", "aabab"};
  const Alphabet abc("abc");
  std::size_t checked = 0;
  for (const char* period : periods) {
    const Word v = abc.encode(period);
    PrefixBuffer buf = stabilized_prefix(WordSource::ultimately_periodic(abc, {}, v),
                                         v.size() + 6, {ctx.max_prefix});
    for (std::size_t m = v.size(); m <= v.size() + 5; ++m) {
      for (const FactorRef& f : factors_of_length(buf, m)) {
        ++checked;
        const ReturnReport r = analyze_returns(buf, buf.view(f));
        if (r.return_words.size() != 1)
          return fail(std::string("(") + period + ")^w: factor " + quoted(abc, buf.view(f)) +
                      " has " + std::to_string(r.return_words.size()) + " return words");
      }
    }
  }
  return pass(std::to_string(checked) + " factors of periodic parts, each with one return word");
}

VerifyOutcome branching(const VerifyContext& ctx) {
  constexpr std::size_t kGap = 2;  // S = all n: gaps of 1 < d
  constexpr std::size_t kMaxU = 8;
  PrefixBuffer buf = preset_buffer("thue-morse", 64, ctx);
  std::size_t max_cl = 0;
  for (std::size_t n = 1; n <= 2 * kMaxU; ++n)
    max_cl = std::max(max_cl, profile_row(buf, n, false, ctx.classifier).cl);
  const std::size_t k = max_cl + 1;
  auto v = check_branching(buf, k, kGap, kMaxU);
  const std::string params = "k=" + std::to_string(k) + " d=" + std::to_string(kGap);
  if (!v.empty())
    return fail(params + ": context " + quoted(buf.alphabet(), buf.view(v[0].context)) +
                " (|u|=" + std::to_string(v[0].u_length) + ") has no special r'us'");
  return pass(params + ", recurrent u with |u| <= " + std::to_string(kMaxU) +
              ": every context reaches a special factor");
}

// ------------------------------------------------------------------ wordgen

VerifyOutcome stabilize_idempotent(const VerifyContext& ctx) {
  for (const auto& name : preset_names()) {
    PrefixBuffer a = preset_buffer(name, 10, ctx);
    PrefixBuffer b = preset_buffer(name, 10, ctx);
    PrefixBuffer c = stabilized_prefix(
        WordSource::literal(a.alphabet(), Word(a.data().begin(), a.data().end())), 10);
    const auto ca = a.index().distinct_counts(10);
    if (ca != b.index().distinct_counts(10) || ca != c.index().distinct_counts(10) ||
        a.size() != b.size())
      return fail(name + ": re-stabilizing changed the factor counts");
  }
  return pass("re-running stabilization reproduces every count for n <= 10");
}

VerifyOutcome mechanical_fibonacci(const VerifyContext&) {
  constexpr std::size_t kLen = 2000;
  // The zero-intercept mechanical word is one letter followed by the
  // characteristic word, which is the Fibonacci fixed point.
  const Word mech = mechanical_prefix(Slope::parse("cf:(1)"), {0, 1}, kLen + 1);
  const Word fib = preset("fibonacci").prefix(kLen);
  for (std::size_t i = 0; i < kLen; ++i)
    if (mech[i + 1] != fib[i])
      return fail("mechanical and morphic Fibonacci words differ at position " + std::to_string(i));
  return pass("agree on " + std::to_string(kLen) + " letters");
}

std::vector<CheckInfo> build_registry() {
  return {
      {"closure-oracle", "classify matches brute force on all binary words of length 1..12",
       closure_oracle},
      {"closure-examples", "abaaaab closed, aabab and aabaaa open", closure_examples},
      {"closure-invariants", "frontier has no internal occurrence; primitive words in squares",
       closure_invariants},
      {"complexity-identity", "p = op + cl on six presets, n <= 30", complexity_identity},
      {"morse-hedlund", "p(n) >= n + 1 on aperiodic presets, n <= 20", morse_hedlund},
      {"fibonacci-sturmian", "Fibonacci p(n) = n + 1, n <= 30", fibonacci_sturmian},
      {"cantor-closed", "Cantor cl(n) = 1 at n = 8, 22, 64", cantor_closed},
      {"periodic-collapse", "v^w has no open factors of length >= 2|v|", periodic_collapse},
      {"period-construction", "(r^i(u))^3 u_i..u_(i+p) closed with the expected frontier",
       period_construction},
      {"thue-morse-open", "Thue-Morse min op(n) on [10,40] above threshold", thue_morse_open},
      {"thue-morse-closed", "Thue-Morse max cl on every progression d <= 4 above threshold",
       thue_morse_closed},
      {"paperfolding-closed-zero", "smallest n with cl(n) = 0 on the paperfolding word",
       paperfolding_zero},
      {"rauzy-neighbors", "at most one closed predecessor and successor", rauzy_neighbors},
      {"rauzy-frontier-distance", "closed windows i apart have frontiers within i",
       rauzy_frontier_distance},
      {"rauzy-closed-walks", "frontier drift bounded by open windows on a walk",
       rauzy_closed_walks},
      {"rauzy-consistency", "graph sizes and special factors agree with factor counts",
       rauzy_consistency},
      {"right-specials", "aperiodic presets have right special factors", right_specials_exist},
      {"fibonacci-returns", "every Fibonacci factor of length <= 15 has two return words",
       fibonacci_returns},
      {"returns-closed", "complete first returns are closed", returns_closed},
      {"unique-return", "periodic parts have one return word per long factor", unique_return},
      {"branching", "recurrent Thue-Morse factors are near a special factor", branching},
      {"stabilize-idempotent", "stabilization is reproducible", stabilize_idempotent},
      {"mechanical-fibonacci", "mechanical and morphic Fibonacci words agree",
       mechanical_fibonacci},
  };
}

bool matches(std::string_view token, const std::string& name) {
  if (!token.empty() && token.back() == '*') {
    token.remove_suffix(1);
    return name.compare(0, token.size(), token) == 0;
  }
  return name == token;
}

}  // namespace

const char* status_name(VerifyStatus s) noexcept {
  switch (s) {
    case VerifyStatus::pass: return "PASS";
    case VerifyStatus::fail: return "FAIL";
    case VerifyStatus::skipped: return "SKIP";
  }
  return "?";
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> checks = build_registry();
  return checks;
}

std::vector<VerifyOutcome> run_verify_suite(std::string_view selector, const VerifyContext& ctx) {
  std::vector<std::string_view> tokens;
  if (!selector.empty() && selector != "all") {
    std::size_t start = 0;
    while (start <= selector.size()) {
      auto pos = selector.find(',', start);
      auto tok = selector.substr(start, pos == std::string_view::npos ? pos : pos - start);
      if (!tok.empty()) tokens.push_back(tok);
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  }
  for (auto tok : tokens) {
    bool any = false;
    for (const auto& c : registered_checks()) any = any || matches(tok, c.name);
    if (!any) throw Error(Errc::domain, "no check matches \"" + std::string(tok) + "\"");
  }

  std::vector<VerifyOutcome> out;
  for (const auto& check : registered_checks()) {
    if (!tokens.empty() &&
        std::none_of(tokens.begin(), tokens.end(),
                     [&](std::string_view t) { return matches(t, check.name); }))
      continue;
    VerifyOutcome o;
    try {
      o = check.run(ctx);
    } catch (const std::exception& e) {
      o = fail(std::string("error: ") + e.what());
    }
    o.name = check.name;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace wordlab
