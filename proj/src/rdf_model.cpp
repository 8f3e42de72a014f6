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

#include "rdfstar2pg/rdf_model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rdfstar2pg {

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!looks_absolute(value_)) {
    throw std::invalid_argument("not an absolute IRI: '" + value_ + "'");
  }
}

bool Iri::looks_absolute(std::string_view value) {
  if (value.empty() || !std::isalpha(static_cast<unsigned char>(value.front()))) return false;
  for (char c : value.substr(1)) {
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

Literal::Literal(std::string lexical)
    : Literal(std::move(lexical), Iri(std::string(vocab::kXsdString)), std::nullopt) {}

Literal::Literal(std::string lexical, Iri datatype)
    : Literal(std::move(lexical), std::move(datatype), std::nullopt) {}

Literal Literal::with_language(std::string lexical, std::string language) {
  if (language.empty()) throw std::invalid_argument("empty language tag");
  return Literal(std::move(lexical), Iri(std::string(vocab::kRdfLangString)),
                 std::move(language));
}

Literal::Literal(std::string lexical, Iri datatype, std::optional<std::string> language)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), language_(std::move(language)) {
  const bool lang_type = datatype_.str() == vocab::kRdfLangString;
  if (lang_type != language_.has_value()) {
    throw std::invalid_argument("a language tag requires rdf:langString and vice versa");
  }
}

QuotedTriple::QuotedTriple(Statement statement)
    : statement_(std::make_shared<const Statement>(std::move(statement))) {}

bool operator==(const QuotedTriple& a, const QuotedTriple& b) {
  return a.statement_ == b.statement_ || *a.statement_ == *b.statement_;
}

std::strong_ordering operator<=>(const QuotedTriple& a, const QuotedTriple& b) {
  if (a.statement_ == b.statement_) return std::strong_ordering::equal;
  return *a.statement_ <=> *b.statement_;
}

bool operator==(const Term& a, const Term& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  return std::visit(
      [&b](const auto& lhs) -> std::strong_ordering {
        using T = std::decay_t<decltype(lhs)>;
        return lhs <=> std::get<T>(b.value_);
      },
      a.value_);
}

Statement::Statement(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) throw std::invalid_argument("a literal cannot be a subject");
}

bool operator==(const Statement& a, const Statement& b) {
  return a.predicate == b.predicate && a.subject == b.subject && a.object == b.object;
}

std::strong_ordering operator<=>(const Statement& a, const Statement& b) {
  if (auto c = a.subject <=> b.subject; c != 0) return c;
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return a.object <=> b.object;
}

std::string_view to_string(StatementKind kind) {
  switch (kind) {
    case StatementKind::ObjectProperty: return "ObjectProperty";
    case StatementKind::DatatypeProperty: return "DatatypeProperty";
    case StatementKind::StarSubject: return "StarSubject";
    case StatementKind::StarObject: return "StarObject";
    case StatementKind::StarBoth: return "StarBoth";
  }
  return "?";
}

std::string local_name(const Iri& iri) {
  const std::string& s = iri.str();
  auto pos = s.rfind('#');
  if (pos == std::string::npos) pos = s.rfind('/');
  if (pos == std::string::npos || pos + 1 == s.size()) return s;
  return s.substr(pos + 1);
}

StatementKind classify(const Statement& stmt) {
  const bool qs = stmt.subject.is_quoted();
  const bool qo = stmt.object.is_quoted();
  if (qs && qo) return StatementKind::StarBoth;
  if (qs) return StatementKind::StarSubject;
  if (qo) return StatementKind::StarObject;
  return stmt.object.is_literal() ? StatementKind::DatatypeProperty
                                  : StatementKind::ObjectProperty;
}

std::size_t quote_depth(const Term& term) {
  return term.is_quoted() ? quote_depth(term.quoted()) : 0;
}

std::size_t quote_depth(const Statement& stmt) {
  return 1 + std::max(quote_depth(stmt.subject), quote_depth(stmt.object));
}

bool is_plain(const Statement& stmt) {
  return !stmt.subject.is_quoted() && !stmt.object.is_quoted();
}

const Statement& innermost_statement(const Statement& stmt) {
  const Statement* cur = &stmt;
  while (!is_plain(*cur)) {
    cur = cur->subject.is_quoted() ? &cur->subject.quoted() : &cur->object.quoted();
  }
  return *cur;
}

namespace {

void append_escaped(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

}  // namespace

std::string to_ntriples(const Term& term) {
  std::string out;
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Iri>) {
          out = "<" + v.str() + ">";
        } else if constexpr (std::is_same_v<T, BlankNode>) {
          out = "_:" + v.label;
        } else if constexpr (std::is_same_v<T, Literal>) {
          out = "\"";
          append_escaped(out, v.lexical());
          out += '"';
          if (v.language()) {
            out += "@" + *v.language();
          } else if (v.datatype().str() != vocab::kXsdString) {
            out += "^^<" + v.datatype().str() + ">";
          }
        } else {
          out = "<< " + to_ntriples(v.statement()) + " >>";
        }
      },
      term.value());
  return out;
}

std::string to_ntriples(const Statement& stmt) {
  return to_ntriples(stmt.subject) + " <" + stmt.predicate.str() + "> " + to_ntriples(stmt.object);
}

bool Graph::insert(Statement stmt, Origin origin) {
  if (!index_.insert(stmt).second) return false;
  entries_.push_back(Entry{std::move(stmt), origin});
  return true;
}

std::size_t Dataset::statement_count() const {
  std::size_t n = default_graph.size();
  for (const auto& [name, graph] : named_graphs) n += graph.size();
  return n;
}

}  // namespace rdfstar2pg
