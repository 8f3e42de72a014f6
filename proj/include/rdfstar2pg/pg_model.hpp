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

#ifndef RDFSTAR2PG_PG_MODEL_HPP_
#define RDFSTAR2PG_PG_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdfstar2pg/rdf_model.hpp"

namespace rdfstar2pg {

// Exact decimal. `lexical` is canonical: optional '-', no leading zeros in the
// integer part (a single "0" is kept), no trailing zeros in the fraction and
// no '.' when the fraction is empty. `scale` counts the fraction digits.
struct Decimal {
  std::string lexical;
  int scale = 0;

  // Accepts [+-]?digits[.digits]? (either side may be empty, not both) and an
  // optional [eE][+-]?digits exponent. Returns nullopt for anything else.
  static std::optional<Decimal> parse(std::string_view text);
  static Decimal from_integer(std::int64_t value);

  friend bool operator==(const Decimal& a, const Decimal& b) { return a.lexical == b.lexical; }
  // Numeric order.
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);
};

// ISO-8601 calendar date, optionally with a timezone suffix, as written.
struct Date {
  std::string iso;

  static std::optional<Date> parse(std::string_view text);

  friend bool operator==(const Date&, const Date&) = default;
  friend auto operator<=>(const Date&, const Date&) = default;
};

using Scalar = std::variant<std::string, std::int64_t, Decimal, bool, Date>;

struct List {
  std::vector<Scalar> items;

  friend bool operator==(const List&, const List&) = default;
  friend auto operator<=>(const List&, const List&) = default;
};

using PropertyValue = std::variant<std::string, std::int64_t, Decimal, bool, Date, List>;
using PropertyMap = std::map<std::string, PropertyValue>;

enum class ValueKind { String, Integer, Decimal, Boolean, Date, List };

ValueKind kind_of(const Scalar& v);
ValueKind kind_of(const PropertyValue& v);
std::string_view to_string(ValueKind kind);

PropertyValue to_property_value(const Scalar& v);

// Maps a literal onto a scalar: xsd:integer -> integer (decimal when it does
// not fit 64 bits), xsd:decimal and xsd:double -> decimal, xsd:boolean ->
// boolean, xsd:date -> date. Lexical forms outside the value space, and every
// other datatype, fall back to the lexical string.
Scalar scalar_from_literal(const Literal& literal);

// Plain text form: strings as-is, numbers in lexical form, booleans as
// true/false, dates as ISO text, lists joined with `list_separator`.
std::string display(const PropertyValue& v, std::string_view list_separator = ",");
std::string display(const Scalar& v);

// Type-tagged encoding that distinguishes every value (used for hashing).
std::string encode(const PropertyValue& v);

using NodeId = std::string;
using EdgeId = std::string;

struct Node {
  NodeId id;
  std::set<std::string> labels;
  PropertyMap properties;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  EdgeId id;
  NodeId source;
  NodeId target;
  std::set<std::string> labels;
  PropertyMap properties;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct PropertyGraph {
  std::map<NodeId, Node> nodes;
  std::map<EdgeId, Edge> edges;

  friend bool operator==(const PropertyGraph&, const PropertyGraph&) = default;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind { PropertyConflict, DanglingEndpoint, InvalidEdge, InvalidKey };

  GraphError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Node ids are "n:" + identity key; edge ids are "e:" + 16 hex digits.
NodeId node_id_for(std::string_view identity_key);

// Inserts a node for `identity_key` or merges into the existing one. Labels
// are unioned; a new property is added; an existing property with a
// different value throws GraphError(PropertyConflict) and leaves the graph
// unchanged.
NodeId upsert_node(PropertyGraph& graph, std::string_view identity_key,
                   const std::set<std::string>& labels, const PropertyMap& properties);

// Adds an edge whose id hashes (source, labels, target, properties). An
// identical edge is returned instead of duplicated. Throws
// GraphError(DanglingEndpoint) or GraphError(InvalidEdge) for empty labels.
EdgeId add_edge(PropertyGraph& graph, const NodeId& source, const NodeId& target,
                const std::set<std::string>& labels, const PropertyMap& properties);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

struct CanonicalForm {
  std::vector<Node> nodes;  // by id
  std::vector<Edge> edges;  // by (source, labels, target, id)

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const PropertyGraph& graph);

// Property counts, skipping the given bookkeeping keys.
std::size_t count_node_properties(const PropertyGraph& graph);
std::size_t count_edge_properties(const PropertyGraph& graph);

// Keys that describe the source term rather than data: iri, bnode, value,
// datatype, lang and any "<key>.graph" companion on nodes; iri and graph on
// edges.
bool is_node_bookkeeping_key(std::string_view key);
bool is_edge_bookkeeping_key(std::string_view key);

}  // namespace rdfstar2pg

#endif  // RDFSTAR2PG_PG_MODEL_HPP_
