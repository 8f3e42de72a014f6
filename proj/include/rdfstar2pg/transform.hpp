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

// RDF-star to property graph transformations.
//
// Three approaches share one engine:
//   RPT     every statement is an edge, literals become nodes.
//   PGT     literal-valued statements become node properties.
//   Hybrid  star statements as in RPT, plain literal-valued statements per
//           `hybrid_datatype_policy`.
//
// A statement about a quoted statement is attached to the edge materialized
// for the innermost quoted statement (its "carrier"). Keys are flattened for
// nesting: `<<<<s p o>> q x>> r y` yields q=x and q.r=y on the s-p-o edge. A
// quoted statement in object position adds inv:<p> to the carrier edge and a
// <p> property on the subject node holding the carrier's edge id.
//
// The report counts units: every top-level statement written in the input
// plus every quoted statement that itself quotes a statement. rdf:first /
// rdf:rest statements synthesized from collection syntax are not units.

#ifndef RDFSTAR2PG_TRANSFORM_HPP_
#define RDFSTAR2PG_TRANSFORM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdfstar2pg/pg_model.hpp"
#include "rdfstar2pg/rdf_model.hpp"

namespace rdfstar2pg {

enum class Approach { RPT, PGT, Hybrid };
enum class DatatypePolicy { AsEdge, AsProperty };
enum class TypePolicy { AsEdge, AsLabel };
enum class NamedGraphPolicy { Merge, Partition, EdgeProperty };
enum class ListPolicy { Expand, CollapseLiterals };
enum class MultiValuePolicy { ListMerge, LastWins };

std::string_view to_string(Approach a);
std::optional<Approach> parse_approach(std::string_view text);  // rpt|pgt|hybrid, any case

struct TransformConfig {
  Approach approach = Approach::RPT;
  DatatypePolicy hybrid_datatype_policy = DatatypePolicy::AsProperty;
  // Unset: AsLabel for PGT, AsEdge for RPT and Hybrid.
  std::optional<TypePolicy> rdf_type_policy;
  NamedGraphPolicy named_graph_policy = NamedGraphPolicy::EdgeProperty;
  ListPolicy list_policy = ListPolicy::Expand;
  // Unset: ListMerge for node properties, LastWins for edge properties.
  std::optional<MultiValuePolicy> multi_value_policy;
  // RPT only: add "ObjectProperty" / "DatatypeProperty" to edge labels.
  bool rpt_kind_labels = true;

  TypePolicy effective_type_policy() const;
  MultiValuePolicy node_multi_value_policy() const;
  MultiValuePolicy edge_multi_value_policy() const;
};

inline constexpr std::string_view kKindLabelObject = "ObjectProperty";
inline constexpr std::string_view kKindLabelDatatype = "DatatypeProperty";

inline constexpr std::string_view kReasonPropertyOfProperty = "properties over other properties";
inline constexpr std::string_view kReasonGraphDiscarded = "graph names discarded";
inline constexpr std::string_view kReasonOverwritten = "value overwritten";
inline constexpr std::string_view kReasonCoerced = "mixed value kinds coerced to string";
inline constexpr std::string_view kReasonMultiGraph = "property drawn from several graphs";
inline constexpr std::string_view kReasonLabelGraph = "graph name of a type label discarded";
inline constexpr std::string_view kReasonReservedKey = "property key collides with a reserved key";

struct ReportEntry {
  Statement statement;
  std::optional<Iri> graph;
  std::string reason;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct TransformReport {
  std::size_t total_statements = 0;
  std::size_t converted = 0;
  std::vector<ReportEntry> partial;
  std::vector<ReportEntry> ignored;
  std::vector<ReportEntry> errors;
  // Converted units whose encoding is worth knowing about (IRI stored as
  // text, inverse-direction keys, flattened nesting).
  std::vector<ReportEntry> notes;

  bool lossless() const { return partial.empty() && ignored.empty() && errors.empty(); }
  double converted_fraction() const {
    return total_statements == 0 ? 1.0 : static_cast<double>(converted) / static_cast<double>(total_statements);
  }
};

struct TransformResult {
  PropertyGraph graph;
  TransformReport report;
};

// Dispatches on cfg.approach.
TransformResult transform(const Dataset& dataset, const TransformConfig& cfg);

// Same engine with the approach forced.
TransformResult rpt(const Dataset& dataset, TransformConfig cfg = {});
TransformResult pgt(const Dataset& dataset, TransformConfig cfg = {});
TransformResult hybrid(const Dataset& dataset, TransformConfig cfg = {});

// Node identity keys.
std::string identity_key(const Term& term);

}  // namespace rdfstar2pg

#endif  // RDFSTAR2PG_TRANSFORM_HPP_
