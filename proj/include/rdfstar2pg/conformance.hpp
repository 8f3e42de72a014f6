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

// Built-in 23-case corpus, its frozen expected shapes, and the harness that
// checks every (case, approach) pair.

#ifndef RDFSTAR2PG_CONFORMANCE_HPP_
#define RDFSTAR2PG_CONFORMANCE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdfstar2pg/pg_model.hpp"
#include "rdfstar2pg/rdf_model.hpp"
#include "rdfstar2pg/transform.hpp"
#include "rdfstar2pg/turtle_parser.hpp"

namespace rdfstar2pg {

struct TestCase {
  std::string id;     // "1", "2.1", ... "15.2"
  std::string title;
  std::string source; // Turtle-star text, kept as originally written
  std::size_t statement_count;
};

const std::vector<TestCase>& builtin_corpus();

// Case 2.4 uses rdf:type without declaring rdf:, so corpus parsing pre-binds
// the standard rdf namespace. Declarations in a source still win.
ParseOptions corpus_parse_options();
Dataset parse_case(const TestCase& test_case);

// Orders "2.1" < "10" < "11.2" numerically.
bool case_id_less(std::string_view a, std::string_view b);

enum class CaseStatus { Converted, Partial, Ignored, Error };
std::string_view to_string(CaseStatus s);

// Most degraded status present in a report.
CaseStatus status_of(const TransformReport& report);

struct Shape {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t node_properties = 0;  // bookkeeping keys excluded
  std::size_t edge_properties = 0;  // bookkeeping keys excluded
  CaseStatus status = CaseStatus::Converted;

  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape observe(const TransformResult& result);

// Reference shapes come from published worked examples; computed ones were
// worked out by hand from the mapping rules.
enum class Basis { Reference, Computed };
std::string_view to_string(Basis b);

struct ExpectedShape {
  Shape shape;
  Basis basis = Basis::Computed;
  // For Partial rows: the reason every partial unit must carry, and how many.
  std::string loss_reason;
  std::size_t partial_units = 0;
};

using ExpectedTable = std::map<std::pair<std::string, Approach>, ExpectedShape>;

const ExpectedTable& expected_shape_table();

// FNV-1a over a canonical text rendering of the table, as 16 hex digits.
// CHANGELOG.md records the current value.
std::string expected_table_fingerprint();

// Per-approach defaults used by the harness: type policy by approach,
// EdgeProperty for named graphs, Expand for lists, ListMerge everywhere,
// AsProperty for hybrid literals.
TransformConfig conformance_config(Approach approach);

struct ConformanceRow {
  std::string case_id;
  Approach approach;
  Shape observed;
  ExpectedShape expected;
  std::size_t units = 0;
  std::size_t converted = 0;
  std::vector<ReportEntry> partial;
  std::size_t ignored = 0;
  std::size_t errors = 0;
  bool pass = false;
};

struct ApproachAggregate {
  std::size_t total = 0;
  std::size_t converted = 0;
  std::size_t partial = 0;
  std::size_t ignored = 0;
  std::size_t errors = 0;

  double fraction() const { return total == 0 ? 1.0 : static_cast<double>(converted) / static_cast<double>(total); }
};

struct ConformanceReport {
  std::vector<ConformanceRow> rows;  // by case id, then approach
  std::map<Approach, ApproachAggregate> aggregate;

  bool all_pass() const;
};

using ConfigOverride = std::function<void(TransformConfig&)>;

// Cases run concurrently; the report does not depend on scheduling.
ConformanceReport run_conformance(const std::vector<Approach>& approaches, const ConfigOverride& overrides = {});

std::string report_to_json(const ConformanceReport& report);
std::string report_table(const ConformanceReport& report, bool color);

}  // namespace rdfstar2pg

#endif  // RDFSTAR2PG_CONFORMANCE_HPP_
