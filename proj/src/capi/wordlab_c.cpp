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

#include "wordlab/wordlab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "wordlab/closure.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/error.hpp"
#include "wordlab/rauzy.hpp"
#include "wordlab/returns.hpp"
#include "wordlab/serialize.hpp"
#include "wordlab/verify.hpp"
#include "wordlab/wordgen.hpp"

struct wl_source {
  wordlab::WordSource source;
};

struct wl_buffer {
  wordlab::PrefixBuffer buffer;
};

struct wl_profile {
  std::vector<wordlab::ComplexityRow> rows;
};

struct wl_rauzy {
  wordlab::PrefixBuffer buffer;
  wordlab::RauzyGraph graph;
};

struct wl_returns {
  wordlab::PrefixBuffer buffer;
  wordlab::ReturnReport report;
};

struct wl_verify_result {
  std::vector<wordlab::VerifyOutcome> outcomes;
};

namespace {

thread_local std::string last_error;
thread_local std::optional<wl_unstable_info> last_unstable;

wl_status to_status(wordlab::Errc code) {
  using wordlab::Errc;
  switch (code) {
    case Errc::domain: return WL_ERR_DOMAIN;
    case Errc::parse: return WL_ERR_PARSE;
    case Errc::unknown_source: return WL_ERR_UNKNOWN_SOURCE;
    case Errc::uncertified: return WL_ERR_UNCERTIFIED;
    case Errc::unstable: return WL_ERR_UNSTABLE;
    case Errc::insufficient_occurrences: return WL_ERR_INSUFFICIENT;
    case Errc::range: return WL_ERR_RANGE;
  }
  return WL_ERR_INTERNAL;
}

wl_status fail(wl_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body` and maps any exception onto a status code.
template <typename Fn>
wl_status guarded(Fn&& body) noexcept {
  try {
    last_error.clear();
    last_unstable.reset();
    body();
    return WL_OK;
  } catch (const wordlab::UnstableError& e) {
    last_unstable = wl_unstable_info{e.prefix_length(), e.length(), e.count_short(),
                                     e.count_long(), e.certified_upto()};
    return fail(WL_ERR_UNSTABLE, e.what());
  } catch (const wordlab::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WL_ERR_INTERNAL, "unknown error");
  }
}

template <typename... Ptrs>
bool all_present(const Ptrs*... ptrs) {
  return ((ptrs != nullptr) && ...);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wordlab::WordView bytes(const char* word, std::size_t length) {
  return {reinterpret_cast<const wordlab::Symbol*>(word), length};
}

void write_verdict(const wordlab::ClosureVerdict& v, int* closed, std::size_t* frontier) {
  *closed = v.is_closed() ? 1 : 0;
  if (v.is_closed() && frontier != nullptr) *frontier = *v.frontier_len();
}

std::string lines(const wordlab::PrefixBuffer& buf, const std::vector<wordlab::FactorRef>& refs) {
  std::string out;
  for (const auto& f : refs) out += buf.text(f) + "\n";
  return out;
}

}  // namespace

#define WL_REQUIRE(...)                                                        \
  do {                                                                         \
    if (!all_present(__VA_ARGS__)) return fail(WL_ERR_NULL_ARG, "null argument"); \
  } while (0)

extern "C" {

const char* wl_version(void) { return "0.1.0"; }

const char* wl_status_name(wl_status status) {
  switch (status) {
    case WL_OK: return "ok";
    case WL_ERR_DOMAIN: return "domain";
    case WL_ERR_PARSE: return "parse";
    case WL_ERR_UNKNOWN_SOURCE: return "unknown_source";
    case WL_ERR_UNCERTIFIED: return "uncertified";
    case WL_ERR_UNSTABLE: return "unstable";
    case WL_ERR_INSUFFICIENT: return "insufficient_occurrences";
    case WL_ERR_RANGE: return "range";
    case WL_ERR_NULL_ARG: return "null_argument";
    case WL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* wl_last_error(void) { return last_error.c_str(); }

void wl_string_free(char* s) { std::free(s); }

int wl_last_unstable(wl_unstable_info* out) {
  if (!last_unstable || out == nullptr) return 0;
  *out = *last_unstable;
  return 1;
}

// ---- sources

size_t wl_preset_count(void) { return wordlab::preset_names().size(); }

const char* wl_preset_name(size_t i) {
  const auto& names = wordlab::preset_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

wl_status wl_source_preset(const char* name, wl_source** out) {
  WL_REQUIRE(name, out);
  return guarded([&] { *out = new wl_source{wordlab::preset(name)}; });
}

wl_status wl_source_morphic(const char* spec, char seed, wl_source** out) {
  WL_REQUIRE(spec, out);
  return guarded([&] {
    wordlab::Morphism m = wordlab::Morphism::parse(spec);
    auto code = m.alphabet().code(seed);
    if (!code)
      throw wordlab::Error(wordlab::Errc::domain,
                           std::string("seed '") + seed + "' is not a letter of the morphism");
    *out = new wl_source{wordlab::WordSource::morphic(m.to_string(), std::move(m), *code)};
  });
}

wl_status wl_source_periodic(const char* alphabet, const char* u, const char* v,
                             wl_source** out) {
  WL_REQUIRE(alphabet, u, v, out);
  return guarded([&] {
    wordlab::Alphabet a(alphabet);
    wordlab::Word pre = a.encode(u), period = a.encode(v);
    *out = new wl_source{
        wordlab::WordSource::ultimately_periodic(std::move(a), std::move(pre), std::move(period))};
  });
}

wl_status wl_source_mechanical(const char* slope, const char* intercept, wl_source** out) {
  WL_REQUIRE(slope, intercept, out);
  return guarded([&] {
    *out = new wl_source{wordlab::WordSource::mechanical(wordlab::Slope::parse(slope),
                                                         wordlab::Rational::parse(intercept))};
  });
}

wl_status wl_source_literal(const char* alphabet, const char* word, wl_source** out) {
  WL_REQUIRE(alphabet, word, out);
  return guarded([&] {
    wordlab::Alphabet a(alphabet);
    wordlab::Word w = a.encode(word);
    *out = new wl_source{wordlab::WordSource::literal(std::move(a), std::move(w))};
  });
}

void wl_source_free(wl_source* source) { delete source; }

wl_status wl_source_describe(const wl_source* source, char** out) {
  WL_REQUIRE(source, out);
  return guarded([&] { *out = dup_string(source->source.describe()); });
}

wl_status wl_source_prefix(const wl_source* source, size_t length, char** out) {
  WL_REQUIRE(source, out);
  return guarded([&] {
    *out = dup_string(source->source.alphabet().decode(source->source.prefix(length)));
  });
}

// ---- buffers

wl_status wl_buffer_stabilize(const wl_source* source, size_t n_max, size_t max_prefix,
                              wl_buffer** out) {
  WL_REQUIRE(source, out);
  return guarded([&] {
    wordlab::StabilizeOptions options;
    if (max_prefix != 0) options.max_prefix = max_prefix;
    *out = new wl_buffer{wordlab::stabilized_prefix(source->source, n_max, options)};
  });
}

wl_status wl_buffer_prefix(const wl_source* source, size_t length, size_t stable_upto,
                           wl_buffer** out) {
  WL_REQUIRE(source, out);
  return guarded([&] {
    *out = new wl_buffer{
        wordlab::PrefixBuffer(source->source, source->source.prefix(length), stable_upto)};
  });
}

void wl_buffer_free(wl_buffer* buffer) { delete buffer; }

size_t wl_buffer_length(const wl_buffer* buffer) {
  return buffer == nullptr ? 0 : buffer->buffer.size();
}

size_t wl_buffer_stable_upto(const wl_buffer* buffer) {
  return buffer == nullptr ? 0 : buffer->buffer.stable_upto();
}

wl_status wl_buffer_text(const wl_buffer* buffer, char** out) {
  WL_REQUIRE(buffer, out);
  return guarded([&] { *out = dup_string(buffer->buffer.text(buffer->buffer.data())); });
}

wl_status wl_buffer_factors(const wl_buffer* buffer, size_t n, int force, char** out) {
  WL_REQUIRE(buffer, out);
  return guarded([&] {
    auto set = wordlab::factors_of_length(buffer->buffer, n, force != 0);
    *out = dup_string(lines(buffer->buffer, set.refs()));
  });
}

// ---- closure

wl_status wl_classify(const char* word, size_t length, int* closed, size_t* frontier) {
  WL_REQUIRE(word, closed);
  return guarded([&] { write_verdict(wordlab::classify(bytes(word, length)), closed, frontier); });
}

wl_status wl_classify_brute(const char* word, size_t length, int* closed, size_t* frontier) {
  WL_REQUIRE(word, closed);
  return guarded(
      [&] { write_verdict(wordlab::classify_brute(bytes(word, length)), closed, frontier); });
}

wl_status wl_border_table(const char* word, size_t length, size_t* out) {
  WL_REQUIRE(word, out);
  return guarded([&] {
    auto table = wordlab::border_table(bytes(word, length));
    std::copy(table.begin(), table.end(), out);
  });
}

wl_status wl_shortest_period(const char* word, size_t length, size_t* out) {
  WL_REQUIRE(word, out);
  return guarded([&] {
    if (length == 0) throw wordlab::Error(wordlab::Errc::domain, "period of the empty word");
    *out = wordlab::shortest_period(bytes(word, length));
  });
}

// ---- complexity

wl_status wl_profile_compute(const wl_buffer* buffer, size_t n_from, size_t n_to, int force,
                             unsigned threads, wl_profile** out) {
  WL_REQUIRE(buffer, out);
  return guarded([&] {
    *out = new wl_profile{wordlab::profile(buffer->buffer, n_from, n_to, force != 0, threads)};
  });
}

void wl_profile_free(wl_profile* profile) { delete profile; }

size_t wl_profile_size(const wl_profile* profile) {
  return profile == nullptr ? 0 : profile->rows.size();
}

wl_status wl_profile_row(const wl_profile* profile, size_t i, wl_row* out) {
  WL_REQUIRE(profile, out);
  if (i >= profile->rows.size()) return fail(WL_ERR_RANGE, "row index out of range");
  const auto& r = profile->rows[i];
  *out = wl_row{r.n, r.p, r.op, r.cl, r.approximate ? 1 : 0};
  return WL_OK;
}

wl_status wl_profile_frontiers(const wl_profile* profile, size_t i, const size_t** lengths,
                               size_t* count) {
  WL_REQUIRE(profile, lengths, count);
  if (i >= profile->rows.size()) return fail(WL_ERR_RANGE, "row index out of range");
  *lengths = profile->rows[i].frontier_lengths.data();
  *count = profile->rows[i].frontier_lengths.size();
  return WL_OK;
}

wl_status wl_profile_syndetic(const wl_profile* profile, size_t d, size_t r, wl_profile** out,
                              size_t* max_cl) {
  WL_REQUIRE(profile, out);
  return guarded([&] {
    const auto sample = wordlab::syndetic_max_cl(profile->rows, d, r);
    auto* restricted = new wl_profile;
    for (const auto& row : profile->rows)
      if (sample.values.count(row.n) != 0) restricted->rows.push_back(row);
    if (max_cl != nullptr) *max_cl = sample.max_cl;
    *out = restricted;
  });
}

wl_status wl_profile_csv(const wl_profile* profile, int approx_column, char** out) {
  WL_REQUIRE(profile, out);
  return guarded([&] { *out = dup_string(wordlab::profile_csv(profile->rows, approx_column != 0)); });
}

wl_status wl_csv_normalize(const char* csv, char** out) {
  WL_REQUIRE(csv, out);
  return guarded([&] {
    auto table = wordlab::parse_profile_csv(csv);
    *out = dup_string(wordlab::profile_csv(table.rows, table.approx_column));
  });
}

// ---- rauzy

wl_status wl_rauzy_build(const wl_buffer* buffer, size_t n, int force, wl_rauzy** out) {
  WL_REQUIRE(buffer, out);
  return guarded([&] {
    auto graph = wordlab::rauzy_graph(buffer->buffer, n, force != 0);
    *out = new wl_rauzy{buffer->buffer, std::move(graph)};
  });
}

void wl_rauzy_free(wl_rauzy* graph) { delete graph; }

size_t wl_rauzy_vertex_count(const wl_rauzy* graph) {
  return graph == nullptr ? 0 : graph->graph.vertices.size();
}

size_t wl_rauzy_edge_count(const wl_rauzy* graph) {
  return graph == nullptr ? 0 : graph->graph.edges.size();
}

wl_status wl_rauzy_dot(const wl_rauzy* graph, char** out) {
  WL_REQUIRE(graph, out);
  return guarded(
      [&] { *out = dup_string(wordlab::rauzy_dot(graph->buffer, graph->graph).serialize()); });
}

wl_status wl_rauzy_specials(const wl_rauzy* graph, char** left, char** right) {
  WL_REQUIRE(graph, left, right);
  return guarded([&] {
    std::vector<wordlab::FactorRef> l, r;
    auto in = graph->graph.in_degrees();
    auto outd = graph->graph.out_degrees();
    for (std::size_t v = 0; v < graph->graph.vertices.size(); ++v) {
      if (in[v] >= 2) l.push_back(graph->graph.vertices[v]);
      if (outd[v] >= 2) r.push_back(graph->graph.vertices[v]);
    }
    char* ls = dup_string(lines(graph->buffer, l));
    try {
      *right = dup_string(lines(graph->buffer, r));
    } catch (...) {
      std::free(ls);
      throw;
    }
    *left = ls;
  });
}

wl_status wl_dot_normalize(const char* dot, char** out) {
  WL_REQUIRE(dot, out);
  return guarded([&] { *out = dup_string(wordlab::DotDocument::parse(dot).serialize()); });
}

wl_status wl_check_neighbors(const wl_buffer* buffer, size_t n, size_t* violations) {
  WL_REQUIRE(buffer, violations);
  return guarded([&] {
    *violations = wordlab::check_closed_neighbor_uniqueness(buffer->buffer, n).size();
  });
}

wl_status wl_check_frontier_distance(const wl_buffer* buffer, size_t n, size_t i_max,
                                     size_t* violations) {
  WL_REQUIRE(buffer, violations);
  return guarded(
      [&] { *violations = wordlab::check_frontier_distance(buffer->buffer, n, i_max).size(); });
}

wl_status wl_check_closed_walks(const wl_buffer* buffer, size_t n, size_t max_walk,
                                size_t* violations) {
  WL_REQUIRE(buffer, violations);
  return guarded(
      [&] { *violations = wordlab::check_closed_walks(buffer->buffer, n, max_walk).size(); });
}

// ---- returns

wl_status wl_returns_analyze(const wl_buffer* buffer, const char* target, wl_returns** out) {
  WL_REQUIRE(buffer, target, out);
  return guarded([&] {
    auto report = wordlab::analyze_returns(buffer->buffer, buffer->buffer.alphabet().encode(target));
    *out = new wl_returns{buffer->buffer, std::move(report)};
  });
}

void wl_returns_free(wl_returns* returns) { delete returns; }

size_t wl_returns_occurrences(const wl_returns* returns) {
  return returns == nullptr ? 0 : returns->report.positions.size();
}

size_t wl_returns_count(const wl_returns* returns) {
  return returns == nullptr ? 0 : returns->report.return_words.size();
}

wl_status wl_returns_word(const wl_returns* returns, size_t i, char** out) {
  WL_REQUIRE(returns, out);
  if (i >= returns->report.return_words.size())
    return fail(WL_ERR_RANGE, "return word index out of range");
  return guarded(
      [&] { *out = dup_string(returns->buffer.text(returns->report.return_words[i])); });
}

wl_status wl_returns_complete(const wl_returns* returns, size_t i, char** out) {
  WL_REQUIRE(returns, out);
  if (i >= returns->report.complete_returns.size())
    return fail(WL_ERR_RANGE, "complete return index out of range");
  return guarded(
      [&] { *out = dup_string(returns->buffer.text(returns->report.complete_returns[i])); });
}

wl_status wl_returns_max_gap(const wl_returns* returns, size_t* out) {
  WL_REQUIRE(returns, out);
  if (!returns->report.max_gap)
    return fail(WL_ERR_INSUFFICIENT,
                "target occurs " + std::to_string(returns->report.positions.size()) +
                    " time(s); need at least 2");
  *out = *returns->report.max_gap;
  return WL_OK;
}

// ---- verification

size_t wl_check_count(void) { return wordlab::registered_checks().size(); }

const char* wl_check_name(size_t i) {
  const auto& checks = wordlab::registered_checks();
  return i < checks.size() ? checks[i].name.c_str() : nullptr;
}

const char* wl_check_summary(size_t i) {
  const auto& checks = wordlab::registered_checks();
  return i < checks.size() ? checks[i].summary.c_str() : nullptr;
}

wl_status wl_verify_run(const char* selector, size_t max_prefix, wl_verify_result** out) {
  WL_REQUIRE(out);
  return guarded([&] {
    wordlab::VerifyContext ctx;
    if (max_prefix != 0) ctx.max_prefix = max_prefix;
    *out = new wl_verify_result{wordlab::run_verify_suite(selector ? selector : "", ctx)};
  });
}

void wl_verify_free(wl_verify_result* result) { delete result; }

size_t wl_verify_size(const wl_verify_result* result) {
  return result == nullptr ? 0 : result->outcomes.size();
}

size_t wl_verify_failures(const wl_verify_result* result) {
  if (result == nullptr) return 0;
  std::size_t n = 0;
  for (const auto& o : result->outcomes) n += o.status == wordlab::VerifyStatus::fail;
  return n;
}

wl_status wl_verify_outcome(const wl_verify_result* result, size_t i, const char** name,
                            wl_verify_status* status, const char** detail) {
  WL_REQUIRE(result);
  if (i >= result->outcomes.size()) return fail(WL_ERR_RANGE, "outcome index out of range");
  const auto& o = result->outcomes[i];
  if (name != nullptr) *name = o.name.c_str();
  if (detail != nullptr) *detail = o.detail.c_str();
  if (status != nullptr) {
    switch (o.status) {
      case wordlab::VerifyStatus::pass: *status = WL_VERIFY_PASS; break;
      case wordlab::VerifyStatus::fail: *status = WL_VERIFY_FAIL; break;
      case wordlab::VerifyStatus::skipped: *status = WL_VERIFY_SKIPPED; break;
    }
  }
  return WL_OK;
}

}  // extern "C"
