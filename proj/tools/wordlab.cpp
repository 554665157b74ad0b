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

// wordlab command-line tool. Talks to the library only through the C API.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "wordlab/wordlab.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCertification = 3 };

constexpr std::size_t kDefaultMaxPrefix = std::size_t{1} << 22;

struct Failure {
  int code;
  std::string message;
};

int exit_for(wl_status s) {
  switch (s) {
    case WL_OK: return kOk;
    case WL_ERR_UNCERTIFIED:
    case WL_ERR_UNSTABLE:
    case WL_ERR_INSUFFICIENT: return kCertification;
    default: return kUsage;
  }
}

void check(wl_status s) {
  if (s != WL_OK) throw Failure{exit_for(s), wl_last_error()};
}

[[noreturn]] void usage(std::string message) { throw Failure{kUsage, std::move(message)}; }

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Source = std::unique_ptr<wl_source, Deleter<wl_source, wl_source_free>>;
using Buffer = std::unique_ptr<wl_buffer, Deleter<wl_buffer, wl_buffer_free>>;
using Profile = std::unique_ptr<wl_profile, Deleter<wl_profile, wl_profile_free>>;
using Rauzy = std::unique_ptr<wl_rauzy, Deleter<wl_rauzy, wl_rauzy_free>>;
using Returns = std::unique_ptr<wl_returns, Deleter<wl_returns, wl_returns_free>>;
using Verify = std::unique_ptr<wl_verify_result, Deleter<wl_verify_result, wl_verify_free>>;

std::string take(char* s) {
  std::string out(s);
  wl_string_free(s);
  return out;
}

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty())
    usage(std::string("bad ") + what + ": \"" + std::string(text) + "\"");
  return v;
}

// "a..b" inclusive, or a single length.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto n = parse_count(text, "length");
    return {n, n};
  }
  auto a = parse_count(std::string_view(text).substr(0, dots), "range start");
  auto b = parse_count(std::string_view(text).substr(dots + 2), "range end");
  if (a == 0 || b < a) usage("range must satisfy 1 <= a <= b, got " + text);
  return {a, b};
}

std::pair<std::size_t, std::size_t> parse_syndetic(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) usage("--syndetic expects d:r, got " + text);
  return {parse_count(std::string_view(text).substr(0, colon), "gap"),
          parse_count(std::string_view(text).substr(colon + 1), "residue")};
}

std::string letters_of(const std::string& text) {
  std::set<char> seen(text.begin(), text.end());
  return {seen.begin(), seen.end()};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kUsage, "cannot open " + path + " for writing"};
  out << content;
  if (!out.flush()) throw Failure{kUsage, "write to " + path + " failed"};
}

// Options shared by every subcommand that needs a word.
struct SourceOptions {
  std::string preset;
  std::string morphism;
  std::string seed;
  std::string preperiod;
  std::string period;
  std::string slope;
  std::string intercept = "0";
  std::string word;
  std::string alphabet;

  void attach(CLI::App* cmd) {
    cmd->add_option("--source", preset, "Preset word name");
    cmd->add_option("--morphism", morphism, "Morphism such as \"a=aba,b=bbb\"");
    cmd->add_option("--seed", seed, "Starting letter of the morphic fixed point");
    cmd->add_option("--period", period, "Period v of the word u v v v ...");
    cmd->add_option("--preperiod", preperiod, "Preperiod u of the word u v v v ...");
    cmd->add_option("--slope", slope, "Mechanical slope: p/q, cf:1,2 or cf:2,(1)");
    cmd->add_option("--intercept", intercept, "Mechanical intercept p/q");
    cmd->add_option("--word", word, "Finite word analysed as its own buffer");
    cmd->add_option("--alphabet", alphabet, "Letters for --period or --word, in order");
  }

  Source open() const {
    const int chosen = !preset.empty() + !morphism.empty() + !period.empty() + !slope.empty() +
                       !word.empty();
    if (chosen != 1)
      usage("give exactly one of --source, --morphism, --period, --slope, --word");
    wl_source* s = nullptr;
    if (!preset.empty()) {
      check(wl_source_preset(preset.c_str(), &s));
    } else if (!morphism.empty()) {
      std::string letter = seed.empty() ? morphism.substr(0, 1) : seed;
      if (letter.size() != 1) usage("--seed must be a single letter");
      check(wl_source_morphic(morphism.c_str(), letter[0], &s));
    } else if (!period.empty()) {
      std::string letters = alphabet.empty() ? letters_of(preperiod + period) : alphabet;
      check(wl_source_periodic(letters.c_str(), preperiod.c_str(), period.c_str(), &s));
    } else if (!slope.empty()) {
      check(wl_source_mechanical(slope.c_str(), intercept.c_str(), &s));
    } else {
      std::string letters = alphabet.empty() ? letters_of(word) : alphabet;
      check(wl_source_literal(letters.c_str(), word.c_str(), &s));
    }
    return Source(s);
  }
};

struct Globals {
  std::size_t max_prefix = 0;
  unsigned threads = 0;
};

Buffer stabilize(const wl_source* src, std::size_t n_max, const Globals& g) {
  wl_buffer* b = nullptr;
  check(wl_buffer_stabilize(src, n_max, g.max_prefix, &b));
  return Buffer(b);
}

// With --force an unstable source falls back to the capped prefix, trusted
// only as far as it certified.
Buffer stabilize_or_force(const wl_source* src, std::size_t n_max, bool force, const Globals& g) {
  wl_buffer* b = nullptr;
  wl_status s = wl_buffer_stabilize(src, n_max, g.max_prefix, &b);
  if (s == WL_ERR_UNSTABLE && force) {
    wl_unstable_info info{};
    wl_last_unstable(&info);
    const std::size_t cap = g.max_prefix != 0 ? g.max_prefix : kDefaultMaxPrefix;
    const std::size_t len = std::max(cap, info.prefix_length);
    std::cerr << "wordlab: warning: " << wl_last_error() << "; continuing on a prefix of length "
              << len << " certified up to n=" << info.certified_upto << "\n";
    check(wl_buffer_prefix(src, len, info.certified_upto, &b));
    return Buffer(b);
  }
  check(s);
  return Buffer(b);
}

int run_generate(const SourceOptions& so, std::size_t length) {
  Source src = so.open();
  char* text = nullptr;
  check(wl_source_prefix(src.get(), length, &text));
  std::cout << take(text) << "\n";
  return kOk;
}

int run_profile(const SourceOptions& so, const std::string& range, const std::string& csv_path,
                bool force, const std::string& syndetic, const Globals& g) {
  auto [from, to] = parse_range(range);
  Source src = so.open();
  Buffer buf = stabilize_or_force(src.get(), to, force, g);
  wl_profile* p = nullptr;
  check(wl_profile_compute(buf.get(), from, to, force, g.threads, &p));
  Profile rows(p);
  if (!syndetic.empty()) {
    auto [d, r] = parse_syndetic(syndetic);
    wl_profile* sub = nullptr;
    std::size_t max_cl = 0;
    check(wl_profile_syndetic(rows.get(), d, r, &sub, &max_cl));
    rows.reset(sub);
    std::cerr << "wordlab: max cl over n = " << r << " mod " << d << " in [" << from << ", " << to
              << "]: " << max_cl << "\n";
  }
  char* csv = nullptr;
  check(wl_profile_csv(rows.get(), force, &csv));
  write_output(csv_path, take(csv));
  return kOk;
}

std::string verdict_line(const std::string& word, int closed, std::size_t frontier) {
  return word + (closed ? " closed frontier=" + std::to_string(frontier) : " open");
}

int run_classify(const SourceOptions& so, const std::string& length, bool brute, bool force,
                 const Globals& g) {
  auto classify = brute ? wl_classify_brute : wl_classify;
  if (!so.word.empty() && length.empty()) {
    int closed = 0;
    std::size_t frontier = 0;
    check(classify(so.word.data(), so.word.size(), &closed, &frontier));
    std::cout << verdict_line(so.word, closed, frontier) << "\n";
    return kOk;
  }
  if (length.empty()) usage("classify needs --word, or a source with --n");
  const std::size_t n = parse_count(length, "length");
  Source src = so.open();
  Buffer buf = stabilize_or_force(src.get(), n, force, g);
  char* list = nullptr;
  check(wl_buffer_factors(buf.get(), n, force, &list));
  std::istringstream factors(take(list));
  for (std::string f; std::getline(factors, f);) {
    int closed = 0;
    std::size_t frontier = 0;
    check(classify(f.data(), f.size(), &closed, &frontier));
    std::cout << verdict_line(f, closed, frontier) << "\n";
  }
  return kOk;
}

int run_rauzy(const SourceOptions& so, std::size_t n, const std::string& dot_path, bool force,
              bool specials, const Globals& g) {
  Source src = so.open();
  Buffer buf = stabilize_or_force(src.get(), n + 1, force, g);
  wl_rauzy* r = nullptr;
  check(wl_rauzy_build(buf.get(), n, force, &r));
  Rauzy graph(r);
  if (specials) {
    char* left = nullptr;
    char* right = nullptr;
    check(wl_rauzy_specials(graph.get(), &left, &right));
    std::string l = take(left), rt = take(right);
    std::istringstream ls(l), rs(rt);
    for (std::string f; std::getline(ls, f);) std::cout << "left " << f << "\n";
    for (std::string f; std::getline(rs, f);) std::cout << "right " << f << "\n";
  }
  if (!specials || !dot_path.empty()) {
    char* dot = nullptr;
    check(wl_rauzy_dot(graph.get(), &dot));
    write_output(dot_path, take(dot));
  }
  return kOk;
}

int run_returns(const SourceOptions& so, const std::string& target, std::size_t length,
                const Globals& g) {
  if (target.empty()) usage("returns needs --target");
  Source src = so.open();
  Buffer buf;
  if (length != 0) {
    wl_buffer* b = nullptr;
    check(wl_buffer_prefix(src.get(), length, 0, &b));
    buf.reset(b);
  } else {
    buf = stabilize(src.get(), std::max<std::size_t>(4 * target.size(), 16), g);
  }
  wl_returns* r = nullptr;
  check(wl_returns_analyze(buf.get(), target.c_str(), &r));
  Returns report(r);
  const std::size_t occ = wl_returns_occurrences(report.get());
  std::size_t gap = 0;
  if (wl_returns_max_gap(report.get(), &gap) != WL_OK)
    throw Failure{kCertification, "\"" + target + "\" occurs " + std::to_string(occ) +
                                      " time(s) in a prefix of length " +
                                      std::to_string(wl_buffer_length(buf.get())) +
                                      "; need at least 2 (try a larger --length)"};
  std::cout << "target " << target << "\n"
            << "buffer_length " << wl_buffer_length(buf.get()) << "\n"
            << "occurrences " << occ << "\n"
            << "max_gap " << gap << "\n";
  for (std::size_t i = 0; i < wl_returns_count(report.get()); ++i) {
    char* word = nullptr;
    char* complete = nullptr;
    check(wl_returns_word(report.get(), i, &word));
    std::string w = take(word);
    check(wl_returns_complete(report.get(), i, &complete));
    std::cout << "return " << w << " " << take(complete) << "\n";
  }
  return kOk;
}

int run_verify(const std::string& selector, bool list, const Globals& g) {
  if (list) {
    for (std::size_t i = 0; i < wl_check_count(); ++i)
      std::cout << wl_check_name(i) << "  " << wl_check_summary(i) << "\n";
    return kOk;
  }
  wl_verify_result* r = nullptr;
  check(wl_verify_run(selector.c_str(), g.max_prefix, &r));
  Verify result(r);
  for (std::size_t i = 0; i < wl_verify_size(result.get()); ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    wl_verify_status status{};
    check(wl_verify_outcome(result.get(), i, &name, &status, &detail));
    const char* tag = status == WL_VERIFY_PASS ? "PASS" : status == WL_VERIFY_FAIL ? "FAIL" : "SKIP";
    std::cout << tag << " " << name << ": " << detail << "\n";
  }
  const std::size_t failures = wl_verify_failures(result.get());
  std::cout << wl_verify_size(result.get()) - failures << "/" << wl_verify_size(result.get())
            << " checks without failure\n";
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open/closed factor complexity, Rauzy graphs and return words"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(wl_version()));

  Globals g;
  app.add_option("--max-prefix", g.max_prefix, "Cap on stabilized prefix length")
      ->envname("WORDLAB_MAX_PREFIX");
  app.add_option("--threads", g.threads, "Worker threads for profiles (0 = auto)");

  SourceOptions so;
  std::size_t length = 0;
  std::string range, csv_path, dot_path, syndetic, target, selector = "all";
  bool force = false, brute = false, specials = false, list = false;

  auto* generate = app.add_subcommand("generate", "Print a prefix of a word");
  so.attach(generate);
  generate->add_option("--length", length, "Prefix length")->required();

  auto* profile = app.add_subcommand("profile", "p/op/cl rows as CSV");
  so.attach(profile);
  profile->add_option("--n", range, "Lengths a..b")->required();
  profile->add_option("--csv", csv_path, "Write CSV here instead of standard output");
  profile->add_flag("--force", force, "Allow lengths beyond the certified range");
  profile->add_option("--syndetic", syndetic, "Keep rows with n = r mod d, as d:r");

  auto* classify = app.add_subcommand("classify", "Open/closed verdicts");
  so.attach(classify);
  classify->add_option("--n", range, "Classify every factor of this length");
  classify->add_flag("--brute", brute, "Use the brute-force classifier");
  classify->add_flag("--force", force, "Allow lengths beyond the certified range");

  auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph as DOT");
  so.attach(rauzy);
  rauzy->add_option("--n", length, "Graph order")->required();
  rauzy->add_option("--dot", dot_path, "Write DOT here instead of standard output");
  rauzy->add_flag("--specials", specials, "List left and right special factors");
  rauzy->add_flag("--force", force, "Allow lengths beyond the certified range");

  auto* returns = app.add_subcommand("returns", "Return words of a factor");
  so.attach(returns);
  returns->add_option("--target", target, "Factor whose returns are listed")->required();
  returns->add_option("--length", length, "Use a plain prefix of this length");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--check", selector, "Comma-separated check names; name* matches a prefix");
  verify->add_flag("--list", list, "List registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (g.threads == 0)
    g.threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);

  try {
    if (*generate) return run_generate(so, length);
    if (*profile) return run_profile(so, range, csv_path, force, syndetic, g);
    if (*classify) return run_classify(so, range, brute, force, g);
    if (*rauzy) return run_rauzy(so, length, dot_path, force, specials, g);
    if (*returns) return run_returns(so, target, length, g);
    if (*verify) return run_verify(selector, list, g);
  } catch (const Failure& f) {
    std::cerr << "wordlab: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}
