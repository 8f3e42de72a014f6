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

#ifndef RDFSTAR2PG_RDF_MODEL_HPP_
#define RDFSTAR2PG_RDF_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rdfstar2pg {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfFirst = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view kRdfRest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view kRdfNil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kXsdDate = "http://www.w3.org/2001/XMLSchema#date";
}  // namespace vocab

// An absolute IRI. Construction validates that a scheme is present; no
// normalization or resolution is performed.
class Iri {
 public:
  // Throws std::invalid_argument when `value` is empty or lacks a scheme.
  explicit Iri(std::string value);

  static bool looks_absolute(std::string_view value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

// A document-scoped blank node. Only the canonical label takes part in
// equality; `original` keeps the label as written in the source document.
struct BlankNode {
  std::string label;
  std::string original;

  friend bool operator==(const BlankNode& a, const BlankNode& b) { return a.label == b.label; }
  friend std::strong_ordering operator<=>(const BlankNode& a, const BlankNode& b) {
    return a.label <=> b.label;
  }
};

class Literal {
 public:
  // Plain literal typed xsd:string.
  explicit Literal(std::string lexical);
  // Typed literal. Throws std::invalid_argument for rdf:langString without a
  // language tag.
  Literal(std::string lexical, Iri datatype);
  // Language-tagged literal (datatype rdf:langString).
  static Literal with_language(std::string lexical, std::string language);

  const std::string& lexical() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& language() const noexcept { return language_; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  Literal(std::string lexical, Iri datatype, std::optional<std::string> language);

  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> language_;
};

struct Statement;

// A quoted (embedded) statement used as a term. Holds its statement through a
// shared immutable pointer so nested terms stay cheap to copy.
class QuotedTriple {
 public:
  explicit QuotedTriple(Statement statement);

  const Statement& statement() const noexcept { return *statement_; }

  friend bool operator==(const QuotedTriple& a, const QuotedTriple& b);
  friend std::strong_ordering operator<=>(const QuotedTriple& a, const QuotedTriple& b);

 private:
  std::shared_ptr<const Statement> statement_;
};

class Term {
 public:
  using Value = std::variant<Iri, BlankNode, Literal, QuotedTriple>;

  Term(Iri iri) : value_(std::move(iri)) {}                // NOLINT(runtime/explicit)
  Term(BlankNode node) : value_(std::move(node)) {}        // NOLINT(runtime/explicit)
  Term(Literal literal) : value_(std::move(literal)) {}    // NOLINT(runtime/explicit)
  Term(QuotedTriple quoted) : value_(std::move(quoted)) {} // NOLINT(runtime/explicit)

  bool is_iri() const noexcept { return std::holds_alternative<Iri>(value_); }
  bool is_blank() const noexcept { return std::holds_alternative<BlankNode>(value_); }
  bool is_literal() const noexcept { return std::holds_alternative<Literal>(value_); }
  bool is_quoted() const noexcept { return std::holds_alternative<QuotedTriple>(value_); }
  // IRI or blank node.
  bool is_resource() const noexcept { return is_iri() || is_blank(); }

  const Iri& iri() const { return std::get<Iri>(value_); }
  const BlankNode& blank() const { return std::get<BlankNode>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }
  const Statement& quoted() const { return std::get<QuotedTriple>(value_).statement(); }

  const Value& value() const noexcept { return value_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Value value_;
};

// (subject, predicate, object). Subjects are never literals.
struct Statement {
  // Throws std::invalid_argument for a literal subject.
  Statement(Term subject, Iri predicate, Term object);

  Term subject;
  Iri predicate;
  Term object;

  friend bool operator==(const Statement& a, const Statement& b);
  friend std::strong_ordering operator<=>(const Statement& a, const Statement& b);
};

enum class StatementKind { ObjectProperty, DatatypeProperty, StarSubject, StarObject, StarBoth };

std::string_view to_string(StatementKind kind);

// Fragment after the last '#', else segment after the last '/'. Falls back to
// the whole IRI when the candidate is empty or no separator exists.
std::string local_name(const Iri& iri);

StatementKind classify(const Statement& stmt);

std::size_t quote_depth(const Term& term);
// Depth of a statement viewed as a quoted term: 1 + max(subject, object).
std::size_t quote_depth(const Statement& stmt);

bool is_plain(const Statement& stmt);

// Follows quoted subjects (or quoted objects when the subject is not quoted)
// down to the first statement without quoted terms.
const Statement& innermost_statement(const Statement& stmt);

// N-Triples-star rendering of a term or statement (no trailing " .").
std::string to_ntriples(const Term& term);
std::string to_ntriples(const Statement& stmt);

// How a statement entered a graph. `Collection` marks rdf:first/rdf:rest
// chains synthesized from `( ... )` syntax.
enum class Origin { Written, Collection };

// A set of statements that remembers insertion order.
class Graph {
 public:
  struct Entry {
    Statement statement;
    Origin origin;
  };

  // Returns false (and changes nothing) when the statement is already present.
  bool insert(Statement stmt, Origin origin = Origin::Written);
  bool contains(const Statement& stmt) const { return index_.contains(stmt); }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  // Set equality; insertion order and origin are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.index_ == b.index_; }

 private:
  std::vector<Entry> entries_;
  std::set<Statement> index_;
};

struct Dataset {
  Graph default_graph;
  std::map<Iri, Graph> named_graphs;

  std::size_t statement_count() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

}  // namespace rdfstar2pg

#endif  // RDFSTAR2PG_RDF_MODEL_HPP_
