// Copyright 2026 The rdfstar2pg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdfstar2pg/turtle_parser.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

namespace rdfstar2pg {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

std::string_view to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Lexical: return "Lexical";
    case ParseError::Kind::Syntax: return "Syntax";
    case ParseError::Kind::UndefinedPrefix: return "UndefinedPrefix";
    case ParseError::Kind::RelativeIri: return "RelativeIri";
    case ParseError::Kind::UnsupportedConstruct: return "UnsupportedConstruct";
  }
  return "?";
}

Iri expand_prefixed_name(const PrefixEnv& env, std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(ParseError::Kind::Syntax, 1, 1,
                     "expected a prefixed name, got '" + std::string(name) + "'");
  }
  const auto prefix = name.substr(0, colon);
  const auto it = env.find(prefix);
  if (it == env.end()) {
    throw ParseError(ParseError::Kind::UndefinedPrefix, 1, 1,
                     "undefined prefix '" + std::string(prefix) + ":'");
  }
  return Iri(it->second + std::string(name.substr(colon + 1)));
}

BlankNode BlankNodeAllocator::named(std::string_view original) {
  auto it = by_original_.find(original);
  if (it == by_original_.end()) {
    it = by_original_.emplace(std::string(original), "b" + std::to_string(next_++)).first;
  }
  return BlankNode{it->second, std::string(original)};
}

BlankNode BlankNodeAllocator::fresh() {
  std::string label = "b" + std::to_string(next_++);
  return BlankNode{label, ""};
}

Term expand_collection(std::span<const Term> elements, BlankNodeAllocator& blanks, Graph& graph) {
  if (elements.empty()) return Iri(std::string(vocab::kRdfNil));
  std::vector<BlankNode> cells;
  cells.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) cells.push_back(blanks.fresh());
  const Iri first{std::string(vocab::kRdfFirst)};
  const Iri rest{std::string(vocab::kRdfRest)};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    graph.insert(Statement(cells[i], first, elements[i]), Origin::Collection);
    Term next = i + 1 < elements.size() ? Term(cells[i + 1]) : Term(Iri(std::string(vocab::kRdfNil)));
    graph.insert(Statement(cells[i], rest, std::move(next)), Origin::Collection);
  }
  return cells.front();
}

namespace {

using Kind = ParseError::Kind;

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
// PN_CHARS_BASE, approximated for non-ASCII as "any byte >= 0x80".
bool is_pn_base(char c) { return is_alpha(c) || is_high(c); }
bool is_pn_chars_u(char c) { return is_pn_base(c) || c == '_'; }
bool is_pn_chars(char c) { return is_pn_chars_u(c) || c == '-' || is_digit(c); }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::string_view input, const ParseOptions& options)
      : in_(input), prefixes_(options.initial_prefixes), current_(&dataset_.default_graph) {}

  Dataset run() {
    skip_ws();
    while (!eof()) {
      statement();
      skip_ws();
    }
    return std::move(dataset_);
  }

 private:
  // ---- errors and positions ----

  [[noreturn]] void fail(Kind kind, std::size_t offset, const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < in_.size(); ++i) {
      if (in_[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(in_[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    throw ParseError(kind, line, column, message);
  }

  [[noreturn]] void fail(Kind kind, const std::string& message) const { fail(kind, pos_, message); }

  std::string describe_here() const {
    if (eof()) return "end of input";
    std::string s = "'";
    s += in_[pos_];
    return s + "'";
  }

  // ---- character access ----

  bool eof() const { return pos_ >= in_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }
  bool looking_at(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

  bool consume(std::string_view s) {
    if (!looking_at(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s, const char* what) {
    skip_ws();
    if (!consume(s)) fail(Kind::Syntax, std::string("expected ") + what + ", found " + describe_here());
  }

  void skip_ws() {
    while (!eof()) {
      const char c = in_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!eof() && in_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Case-insensitive keyword followed by a non-name character.
  bool keyword_ahead(std::string_view kw) const {
    if (pos_ + kw.size() > in_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char c = in_[pos_ + i];
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      if (c != kw[i]) return false;
    }
    const char next = peek(kw.size());
    return !(is_pn_chars(next) || next == ':' || next == '.');
  }

  // ---- document level ----

  void statement() {
    if (looking_at("@prefix")) {
      pos_ += 7;
      prefix_body();
      expect(".", "'.' after @prefix");
    } else if (looking_at("@base")) {
      fail(Kind::UnsupportedConstruct, "@base is not supported; use absolute IRIs");
    } else if (keyword_ahead("PREFIX")) {
      pos_ += 6;
      prefix_body();
    } else if (keyword_ahead("BASE")) {
      fail(Kind::UnsupportedConstruct, "BASE is not supported; use absolute IRIs");
    } else if (keyword_ahead("GRAPH")) {
      pos_ += 5;
      skip_ws();
      const std::size_t at = pos_;
      Term name = subject_term();
      if (!name.is_iri()) fail(Kind::UnsupportedConstruct, at, "graph names must be IRIs");
      skip_ws();
      graph_block(name.iri());
    } else if (peek() == '{') {
      graph_block(std::nullopt);
    } else {
      triples_or_block();
    }
  }

  void prefix_body() {
    skip_ws();
    const std::size_t at = pos_;
    std::string label;
    if (is_pn_base(peek())) label = pn_prefix();
    if (!consume(":")) fail(Kind::Syntax, at, "expected a prefix label ending in ':'");
    skip_ws();
    if (peek() != '<') fail(Kind::Syntax, "expected <IRI> in prefix declaration");
    prefixes_[label] = iriref().str();
  }

  void triples_or_block() {
    const std::size_t at = pos_;
    if (property_list_ahead()) {
      Term subject = blank_node_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
      expect(".", "'.' at end of statement");
      return;
    }
    Term subject = subject_term();
    skip_ws();
    if (peek() == '{') {
      if (!subject.is_iri()) fail(Kind::UnsupportedConstruct, at, "graph names must be IRIs");
      graph_block(subject.iri());
      return;
    }
    predicate_object_list(subject);
    expect(".", "'.' at end of statement");
  }

  void graph_block(const std::optional<Iri>& name) {
    if (current_ != &dataset_.default_graph) fail(Kind::Syntax, "graph blocks cannot nest");
    const std::size_t open = pos_;
    if (!consume("{")) fail(Kind::Syntax, "expected '{'");
    current_ = name ? &dataset_.named_graphs[*name] : &dataset_.default_graph;
    for (;;) {
      skip_ws();
      if (consume("}")) break;
      if (eof()) fail(Kind::Syntax, open, "unterminated graph block");
      if (looking_at("@prefix") || keyword_ahead("PREFIX") || peek() == '{') {
        fail(Kind::Syntax, "directives and nested blocks are not allowed inside a graph block");
      }
      const bool bare_allowed = property_list_ahead();
      Term subject = subject_term();
      skip_ws();
      if (!(bare_allowed && (peek() == '.' || peek() == '}'))) predicate_object_list(subject);
      skip_ws();
      if (consume(".")) continue;
      if (peek() == '}') continue;
      fail(Kind::Syntax, "expected '.' or '}', found " + describe_here());
    }
    current_ = &dataset_.default_graph;
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      skip_ws();
      const Iri predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (!consume(";")) return;
      // Repeated or trailing ';' are allowed.
      for (;;) {
        skip_ws();
        if (!consume(";")) break;
      }
      skip_ws();
      if (peek() == '.' || peek() == ']' || peek() == '}' || eof()) return;
    }
  }

  void object_list(const Term& subject, const Iri& predicate) {
    for (;;) {
      skip_ws();
      Term object = object_term();
      emit(Statement(subject, predicate, std::move(object)));
      skip_ws();
      if (looking_at("{|")) fail(Kind::UnsupportedConstruct, "annotation syntax '{| ... |}' is not supported");
      if (!consume(",")) return;
    }
  }

  void emit(Statement stmt) { current_->insert(std::move(stmt)); }

  // ---- terms ----

  Iri verb() {
    if (peek() == 'a' && !is_pn_chars(peek(1)) && peek(1) != ':' && peek(1) != '.') {
      ++pos_;
      return Iri(std::string(vocab::kRdfType));
    }
    if (peek() == '<' && peek(1) != '<') return iriref();
    if (is_pn_base(peek()) || peek() == ':') return prefixed_name();
    fail(Kind::Syntax, "expected a predicate, found " + describe_here());
  }

  Term subject_term() {
    const char c = peek();
    if (c == '<' && peek(1) == '<') return quoted_triple();
    if (c == '<') return iriref();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection();
    if (c == '[') return anon_or_list();
    if (c == '"' || c == '\'' || is_digit(c) || c == '+' || c == '-' ||
        keyword_ahead("TRUE") || keyword_ahead("FALSE")) {
      fail(Kind::Syntax, "a literal cannot be used as a subject");
    }
    if (is_pn_base(c) || c == ':') return prefixed_name();
    fail(Kind::Syntax, "expected a subject, found " + describe_here());
  }

  Term object_term() {
    const char c = peek();
    if (c == '<' && peek(1) == '<') return quoted_triple();
    if (c == '<') return iriref();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection();
    if (c == '[') return anon_or_list();
    if (c == '"' || c == '\'') return string_literal();
    if (is_digit(c) || c == '+' || c == '-' || (c == '.' && is_digit(peek(1)))) return numeric_literal();
    if (keyword_ahead("TRUE") && looking_at("true")) {
      pos_ += 4;
      return Literal("true", Iri(std::string(vocab::kXsdBoolean)));
    }
    if (keyword_ahead("FALSE") && looking_at("false")) {
      pos_ += 5;
      return Literal("false", Iri(std::string(vocab::kXsdBoolean)));
    }
    if (is_pn_base(c) || c == ':') return prefixed_name();
    fail(Kind::Syntax, "expected an object, found " + describe_here());
  }

  Term quoted_triple() {
    const std::size_t open = pos_;
    pos_ += 2;
    skip_ws();
    Term subject = [&]() -> Term {
      const char c = peek();
      if (c == '<' && peek(1) == '<') return quoted_triple();
      if (c == '<') return iriref();
      if (c == '_' && peek(1) == ':') return blank_label();
      if (c == '[') return empty_anon();
      if (is_pn_base(c) || c == ':') return prefixed_name();
      fail(Kind::Syntax, "expected the subject of a quoted triple, found " + describe_here());
    }();
    skip_ws();
    Iri predicate = verb();
    skip_ws();
    Term object = [&]() -> Term {
      const char c = peek();
      if (c == '(') fail(Kind::Syntax, "collections are not allowed inside a quoted triple");
      if (c == '[') return empty_anon();
      return object_term();
    }();
    skip_ws();
    if (!consume(">>")) fail(Kind::Syntax, "expected '>>' to close quoted triple opened at offset " + std::to_string(open));
    return QuotedTriple(Statement(std::move(subject), std::move(predicate), std::move(object)));
  }

  Term empty_anon() {
    const std::size_t at = pos_;
    ++pos_;
    skip_ws();
    if (!consume("]")) fail(Kind::Syntax, at, "only '[]' is allowed inside a quoted triple");
    return blanks_.fresh();
  }

  // A '[' that opens a non-empty property list, which may stand alone as a
  // statement. An empty '[]' still needs predicates.
  bool property_list_ahead() {
    if (peek() != '[') return false;
    const std::size_t save = pos_;
    ++pos_;
    skip_ws();
    const bool result = peek() != ']';
    pos_ = save;
    return result;
  }

  Term anon_or_list() {
    const std::size_t save = pos_;
    ++pos_;
    skip_ws();
    if (consume("]")) return blanks_.fresh();
    pos_ = save;
    return blank_node_property_list();
  }

  Term blank_node_property_list() {
    ++pos_;  // '['
    Term node = blanks_.fresh();
    predicate_object_list(node);
    expect("]", "']' to close blank node property list");
    return node;
  }

  Term collection() {
    const std::size_t open = pos_;
    ++pos_;
    std::vector<Term> items;
    for (;;) {
      skip_ws();
      if (consume(")")) break;
      if (eof()) fail(Kind::Syntax, open, "unterminated collection");
      items.push_back(object_term());
    }
    return expand_collection(items, blanks_, *current_);
  }

  Term blank_label() {
    pos_ += 2;
    const std::size_t start = pos_;
    if (!(is_pn_chars_u(peek()) || is_digit(peek()))) fail(Kind::Lexical, "invalid blank node label");
    while (!eof() && (is_pn_chars(peek()) || peek() == '.')) ++pos_;
    while (in_[pos_ - 1] == '.') --pos_;
    return blanks_.named(in_.substr(start, pos_ - start));
  }

  Iri iriref() {
    const std::size_t start = pos_;
    ++pos_;  // '<'
    std::string value;
    for (;;) {
      if (eof()) fail(Kind::Lexical, start, "unterminated IRI");
      const char c = in_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        const std::size_t at = pos_;
        ++pos_;
        if (peek() == 'u' || peek() == 'U') {
          value += unicode_escape(at);
          continue;
        }
        fail(Kind::Lexical, at, "invalid escape in IRI");
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        fail(Kind::Lexical, "character not allowed in IRI");
      }
      value += c;
      ++pos_;
    }
    if (!Iri::looks_absolute(value)) {
      fail(Kind::RelativeIri, start, "relative IRI <" + value + "> (no scheme); relative IRIs are not resolved");
    }
    return Iri(std::move(value));
  }

  std::string pn_prefix() {
    const std::size_t start = pos_;
    ++pos_;
    while (!eof() && (is_pn_chars(peek()) || peek() == '.')) ++pos_;
    while (in_[pos_ - 1] == '.') --pos_;
    return std::string(in_.substr(start, pos_ - start));
  }

  Iri prefixed_name() {
    const std::size_t start = pos_;
    std::string prefix;
    if (is_pn_base(peek())) prefix = pn_prefix();
    if (!consume(":")) fail(Kind::Syntax, start, "expected ':' in prefixed name '" + prefix + "'");
    std::string local;
    std::size_t last_non_dot = local.size();
    std::size_t pos_after_last_non_dot = pos_;
    bool first = true;
    for (;;) {
      const char c = peek();
      bool ok = false;
      if (c == '%' && is_hex(peek(1)) && is_hex(peek(2))) {
        local.append(in_.substr(pos_, 3));
        pos_ += 3;
        ok = true;
      } else if (c == '\\' && std::string_view("_~.-!$&'()*+,;=/?#@%").find(peek(1)) != std::string_view::npos &&
                 peek(1) != '\0') {
        local += peek(1);
        pos_ += 2;
        ok = true;
      } else if (is_pn_chars_u(c) || c == ':' || is_digit(c) || (!first && (c == '-' || c == '.'))) {
        local += c;
        ++pos_;
        ok = c != '.';
        if (!ok) {
          first = false;
          continue;
        }
      } else {
        break;
      }
      first = false;
      if (ok) {
        last_non_dot = local.size();
        pos_after_last_non_dot = pos_;
      }
    }
    // A local name never ends in '.'; give trailing dots back to the statement.
    local.resize(last_non_dot);
    pos_ = pos_after_last_non_dot;
    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail(Kind::UndefinedPrefix, start, "undefined prefix '" + prefix + ":'");
    const std::string full = it->second + local;
    if (!Iri::looks_absolute(full)) fail(Kind::RelativeIri, start, "prefixed name expands to relative IRI '" + full + "'");
    return Iri(full);
  }

  std::string unicode_escape(std::size_t at) {
    const std::size_t digits = peek() == 'u' ? 4 : 8;
    ++pos_;
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char h = peek();
      if (!is_hex(h)) fail(Kind::Lexical, at, "malformed \\u escape");
      cp = cp * 16 + static_cast<std::uint32_t>(is_digit(h) ? h - '0' : (h | 0x20) - 'a' + 10);
      ++pos_;
    }
    if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) fail(Kind::Lexical, at, "escape is not a Unicode scalar value");
    std::string out;
    append_utf8(out, cp);
    return out;
  }

  Term string_literal() {
    const std::size_t start = pos_;
    const char quote = peek();
    const bool long_form = peek(1) == quote && peek(2) == quote;
    pos_ += long_form ? 3 : 1;
    std::string lexical;
    for (;;) {
      if (eof()) fail(Kind::Lexical, start, "unterminated string literal");
      const char c = in_[pos_];
      if (c == quote) {
        if (!long_form) {
          ++pos_;
          break;
        }
        if (peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          break;
        }
        lexical += c;
        ++pos_;
        continue;
      }
      if (c == '\\') {
        const std::size_t at = pos_;
        ++pos_;
        switch (peek()) {
          case '"': lexical += '"'; ++pos_; break;
          case '\\': lexical += '\\'; ++pos_; break;
          case 'n': lexical += '\n'; ++pos_; break;
          case 't': lexical += '\t'; ++pos_; break;
          case 'r': lexical += '\r'; ++pos_; break;
          case 'u':
            if (true) {
              lexical += unicode_escape(at);
              break;
            }
            [[fallthrough]];
          default:
            fail(Kind::Lexical, at, "unsupported escape sequence in string literal");
        }
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail(Kind::Lexical, "line break inside a short string literal");
      lexical += c;
      ++pos_;
    }
    if (peek() == '@') {
      const std::size_t at = pos_;
      ++pos_;
      const std::size_t tag_start = pos_;
      while (is_alpha(peek())) ++pos_;
      if (pos_ == tag_start) fail(Kind::Lexical, at, "empty language tag");
      while (peek() == '-' && (is_alpha(peek(1)) || is_digit(peek(1)))) {
        ++pos_;
        while (is_alpha(peek()) || is_digit(peek())) ++pos_;
      }
      return Literal::with_language(std::move(lexical), std::string(in_.substr(tag_start, pos_ - tag_start)));
    }
    if (consume("^^")) {
      Iri datatype = peek() == '<' ? iriref() : prefixed_name();
      if (datatype.str() == vocab::kRdfLangString) {
        fail(Kind::Syntax, "rdf:langString literals need a language tag");
      }
      return Literal(std::move(lexical), std::move(datatype));
    }
    return Literal(std::move(lexical));
  }

  Term numeric_literal() {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t int_digits = 0;
    while (is_digit(peek())) {
      ++pos_;
      ++int_digits;
    }
    bool decimal = false;
    if (peek() == '.' && is_digit(peek(1))) {
      decimal = true;
      ++pos_;
      while (is_digit(peek())) ++pos_;
    }
    bool exponent = false;
    if ((peek() == 'e' || peek() == 'E') && (int_digits > 0 || decimal)) {
      std::size_t look = 1;
      if (peek(1) == '+' || peek(1) == '-') look = 2;
      if (is_digit(peek(look))) {
        exponent = true;
        pos_ += look;
        while (is_digit(peek())) ++pos_;
      }
    }
    if (int_digits == 0 && !decimal) fail(Kind::Lexical, start, "malformed number");
    std::string lexical(in_.substr(start, pos_ - start));
    std::string_view type = exponent ? vocab::kXsdDouble : decimal ? vocab::kXsdDecimal : vocab::kXsdInteger;
    return Literal(std::move(lexical), Iri(std::string(type)));
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  PrefixEnv prefixes_;
  BlankNodeAllocator blanks_;
  Dataset dataset_;
  Graph* current_;
};

}  // namespace

Dataset parse_turtle_star(std::string_view input, const ParseOptions& options) {
  return Parser(input, options).run();
}

std::string write_turtle_star(const Dataset& dataset) {
  std::ostringstream out;
  for (const auto& entry : dataset.default_graph.entries()) {
    out << to_ntriples(entry.statement) << " .\n";
  }
  for (const auto& [name, graph] : dataset.named_graphs) {
    out << "<" << name.str() << "> {\n";
    for (const auto& entry : graph.entries()) {
      out << "  " << to_ntriples(entry.statement) << " .\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace rdfstar2pg
