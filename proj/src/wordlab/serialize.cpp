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

#include "wordlab/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

constexpr std::string_view kCsvHeader = "n,p,op,cl,frontier_lengths";

std::size_t parse_count(std::string_view field, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
    throw Error(Errc::parse, "line " + std::to_string(line) + ": bad number \"" +
                                 std::string(field) + "\"");
  return v;
}

std::vector<std::string_view> split_fields(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_bare(std::string_view v) {
  if (v == "true" || v == "false") return true;
  return !v.empty() && std::all_of(v.begin(), v.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

std::string quote(std::string_view v) {
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string value_text(std::string_view v) { return is_bare(v) ? std::string(v) : quote(v); }

void append_attrs(std::string& out, const std::vector<DotAttr>& attrs) {
  if (attrs.empty()) return;
  out += " [";
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (i) out += ", ";
    out += attrs[i].key;
    out.push_back('=');
    out += value_text(attrs[i].value);
  }
  out.push_back(']');
}

class DotLexer {
 public:
  enum class Kind { id, quoted, punct, arrow, end };
  struct Token {
    Kind kind;
    std::string text;
  };

  explicit DotLexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) return {Kind::end, ""};
    const char c = src_[pos_];
    if (c == '"') {
      std::string out;
      ++pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
        out.push_back(src_[pos_++]);
      }
      if (pos_ >= src_.size()) throw Error(Errc::parse, "unterminated string in DOT input");
      ++pos_;
      return {Kind::quoted, out};
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Kind::arrow, "->"};
    }
    if (std::string_view("{}[]=,;").find(c) != std::string_view::npos) {
      ++pos_;
      return {Kind::punct, std::string(1, c)};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Kind::id, std::string(src_.substr(start, pos_ - start))};
    }
    throw Error(Errc::parse, std::string("unexpected character '") + c + "' in DOT input");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class DotParser {
 public:
  explicit DotParser(std::string_view src) : lex_(src) { advance(); }

  DotDocument parse() {
    DotDocument doc;
    if (tok_.kind != DotLexer::Kind::id || tok_.text != "digraph")
      throw Error(Errc::parse, "DOT input must start with 'digraph'");
    advance();
    doc.name = take_id();
    expect("{");
    while (!(tok_.kind == DotLexer::Kind::punct && tok_.text == "}")) {
      std::string first = take_id();
      if (tok_.kind == DotLexer::Kind::arrow) {
        advance();
        DotEdge e{std::move(first), take_id(), {}};
        e.attrs = attrs();
        doc.edges.push_back(std::move(e));
      } else {
        DotNode n{std::move(first), attrs()};
        doc.nodes.push_back(std::move(n));
      }
      expect(";");
    }
    advance();
    if (tok_.kind != DotLexer::Kind::end) throw Error(Errc::parse, "trailing input after graph");
    return doc;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  void expect(const char* p) {
    if (tok_.kind != DotLexer::Kind::punct || tok_.text != p)
      throw Error(Errc::parse, std::string("expected '") + p + "' in DOT input, got '" +
                                   tok_.text + "'");
    advance();
  }

  std::string take_id() {
    if (tok_.kind != DotLexer::Kind::id && tok_.kind != DotLexer::Kind::quoted)
      throw Error(Errc::parse, "expected identifier in DOT input, got '" + tok_.text + "'");
    std::string out = std::move(tok_.text);
    advance();
    return out;
  }

  std::vector<DotAttr> attrs() {
    std::vector<DotAttr> out;
    if (!(tok_.kind == DotLexer::Kind::punct && tok_.text == "[")) return out;
    advance();
    while (true) {
      DotAttr a;
      a.key = take_id();
      expect("=");
      a.value = take_id();
      out.push_back(std::move(a));
      if (tok_.kind == DotLexer::Kind::punct && tok_.text == ",") {
        advance();
        continue;
      }
      expect("]");
      return out;
    }
  }

  DotLexer lex_;
  DotLexer::Token tok_{DotLexer::Kind::end, ""};
};

}  // namespace

std::string profile_csv(std::span<const ComplexityRow> rows, bool approx_column) {
  std::string out(kCsvHeader);
  if (approx_column) out += ",approx";
  out.push_back('\n');
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.p) + ',' + std::to_string(r.op) + ',' +
           std::to_string(r.cl) + ',';
    for (std::size_t i = 0; i < r.frontier_lengths.size(); ++i) {
      if (i) out.push_back(';');
      out += std::to_string(r.frontier_lengths[i]);
    }
    if (approx_column) out += r.approximate ? ",1" : ",0";
    out.push_back('\n');
  }
  return out;
}

ProfileTable parse_profile_csv(std::string_view text) {
  ProfileTable table;
  auto lines = split_fields(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(Errc::parse, "empty CSV input");
  if (lines[0] == kCsvHeader) {
    table.approx_column = false;
  } else if (lines[0] == std::string(kCsvHeader) + ",approx") {
    table.approx_column = true;
  } else {
    throw Error(Errc::parse, "unexpected CSV header \"" + std::string(lines[0]) + "\"");
  }
  const std::size_t width = table.approx_column ? 6 : 5;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i], ',');
    if (fields.size() != width)
      throw Error(Errc::parse, "line " + std::to_string(i + 1) + ": expected " +
                                   std::to_string(width) + " fields");
    ComplexityRow row;
    row.n = parse_count(fields[0], i + 1);
    row.p = parse_count(fields[1], i + 1);
    row.op = parse_count(fields[2], i + 1);
    row.cl = parse_count(fields[3], i + 1);
    if (!fields[4].empty())
      for (auto f : split_fields(fields[4], ';'))
        row.frontier_lengths.push_back(parse_count(f, i + 1));
    if (row.p != row.op + row.cl || row.frontier_lengths.size() != row.cl)
      throw Error(Errc::parse, "line " + std::to_string(i + 1) + ": inconsistent counts");
    if (table.approx_column) {
      if (fields[5] != "0" && fields[5] != "1")
        throw Error(Errc::parse, "line " + std::to_string(i + 1) + ": approx must be 0 or 1");
      row.approximate = fields[5] == "1";
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string DotDocument::serialize() const {
  std::string out = "digraph " + quote(name) + " {\n";
  for (const auto& n : nodes) {
    out += "  " + quote(n.id);
    append_attrs(out, n.attrs);
    out += ";\n";
  }
  for (const auto& e : edges) {
    out += "  " + quote(e.from) + " -> " + quote(e.to);
    append_attrs(out, e.attrs);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

DotDocument DotDocument::parse(std::string_view text) { return DotParser(text).parse(); }

}  // namespace wordlab
