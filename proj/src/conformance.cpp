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

#include "rdfstar2pg/conformance.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>

#include "json.hpp"

namespace rdfstar2pg {

ParseOptions corpus_parse_options() {
  ParseOptions options;
  options.initial_prefixes["rdf"] = std::string(vocab::kRdf);
  return options;
}

Dataset parse_case(const TestCase& test_case) {
  return parse_turtle_star(test_case.source, corpus_parse_options());
}

bool case_id_less(std::string_view a, std::string_view b) {
  auto parts = [](std::string_view id) {
    std::vector<long> out;
    std::size_t start = 0;
    for (;;) {
      const auto dot = id.find('.', start);
      const auto piece = id.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      long v = 0;
      for (char c : piece) v = c >= '0' && c <= '9' ? v * 10 + (c - '0') : v;
      out.push_back(v);
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return out;
  };
  const auto pa = parts(a);
  const auto pb = parts(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

std::string_view to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Converted: return "Converted";
    case CaseStatus::Partial: return "Partial";
    case CaseStatus::Ignored: return "Ignored";
    case CaseStatus::Error: return "Error";
  }
  return "?";
}

std::string_view to_string(Basis b) {
  return b == Basis::Reference ? "reference" : "computed";
}

CaseStatus status_of(const TransformReport& report) {
  if (!report.errors.empty()) return CaseStatus::Error;
  if (!report.ignored.empty()) return CaseStatus::Ignored;
  if (!report.partial.empty()) return CaseStatus::Partial;
  return CaseStatus::Converted;
}

Shape observe(const TransformResult& result) {
  return Shape{result.graph.nodes.size(), result.graph.edges.size(), count_node_properties(result.graph),
               count_edge_properties(result.graph), status_of(result.report)};
}

TransformConfig conformance_config(Approach approach) {
  TransformConfig cfg;
  cfg.approach = approach;
  cfg.hybrid_datatype_policy = DatatypePolicy::AsProperty;
  cfg.named_graph_policy = NamedGraphPolicy::EdgeProperty;
  cfg.list_policy = ListPolicy::Expand;
  cfg.multi_value_policy = MultiValuePolicy::ListMerge;
  return cfg;
}

bool ConformanceReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConformanceRow& r) { return r.pass; });
}

namespace {

ConformanceRow check(const TestCase& tc, const Dataset& dataset, Approach approach, const ConfigOverride& overrides) {
  TransformConfig cfg = conformance_config(approach);
  if (overrides) overrides(cfg);
  cfg.approach = approach;
  const TransformResult result = transform(dataset, cfg);
  ConformanceRow row;
  row.case_id = tc.id;
  row.approach = approach;
  row.observed = observe(result);
  row.units = result.report.total_statements;
  row.converted = result.report.converted;
  row.partial = result.report.partial;
  row.ignored = result.report.ignored.size();
  row.errors = result.report.errors.size();
  const auto& table = expected_shape_table();
  const auto it = table.find({tc.id, approach});
  if (it == table.end()) return row;
  row.expected = it->second;
  bool pass = row.observed == row.expected.shape && row.units == tc.statement_count;
  if (row.expected.shape.status == CaseStatus::Partial) {
    pass = pass && row.partial.size() == row.expected.partial_units &&
           std::all_of(row.partial.begin(), row.partial.end(),
                       [&](const ReportEntry& e) { return e.reason == row.expected.loss_reason; });
  }
  row.pass = pass;
  return row;
}

std::vector<ConformanceRow> run_case(const TestCase& tc, const std::vector<Approach>& approaches,
                                     const ConfigOverride& overrides) {
  std::vector<ConformanceRow> rows;
  Dataset dataset;
  try {
    dataset = parse_case(tc);
  } catch (const ParseError&) {
    for (Approach a : approaches) {
      ConformanceRow row;
      row.case_id = tc.id;
      row.approach = a;
      row.observed.status = CaseStatus::Error;
      row.units = tc.statement_count;
      row.errors = tc.statement_count;
      rows.push_back(row);
    }
    return rows;
  }
  for (Approach a : approaches) rows.push_back(check(tc, dataset, a, overrides));
  return rows;
}

}  // namespace

ConformanceReport run_conformance(const std::vector<Approach>& approaches, const ConfigOverride& overrides) {
  std::vector<Approach> unique = approaches;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<std::future<std::vector<ConformanceRow>>> futures;
  for (const TestCase& tc : builtin_corpus()) {
    futures.push_back(std::async(std::launch::async, run_case, std::cref(tc), std::cref(unique), std::cref(overrides)));
  }
  ConformanceReport report;
  for (auto& f : futures) {
    for (auto& row : f.get()) report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const ConformanceRow& a, const ConformanceRow& b) {
    if (a.case_id != b.case_id) return case_id_less(a.case_id, b.case_id);
    return a.approach < b.approach;
  });
  for (Approach a : unique) report.aggregate[a];
  for (const ConformanceRow& row : report.rows) {
    ApproachAggregate& agg = report.aggregate[row.approach];
    agg.total += row.units;
    agg.converted += row.converted;
    agg.partial += row.partial.size();
    agg.ignored += row.ignored;
    agg.errors += row.errors;
  }
  return report;
}

std::string report_to_json(const ConformanceReport& report) {
  using ojson = nlohmann::ordered_json;
  auto shape_json = [](const Shape& s) {
    ojson j;
    j["nodes"] = s.nodes;
    j["edges"] = s.edges;
    j["node_properties"] = s.node_properties;
    j["edge_properties"] = s.edge_properties;
    j["status"] = std::string(to_string(s.status));
    return j;
  };
  ojson doc;
  doc["rows"] = ojson::array();
  for (const ConformanceRow& row : report.rows) {
    ojson r;
    r["case"] = row.case_id;
    r["approach"] = std::string(to_string(row.approach));
    r["observed"] = shape_json(row.observed);
    ojson expected = shape_json(row.expected.shape);
    expected["basis"] = std::string(to_string(row.expected.basis));
    if (!row.expected.loss_reason.empty()) expected["loss_reason"] = row.expected.loss_reason;
    r["expected"] = std::move(expected);
    r["statements"] = row.units;
    r["converted"] = row.converted;
    ojson partial = ojson::array();
    for (const ReportEntry& e : row.partial) {
      partial.push_back({{"statement", to_ntriples(e.statement)}, {"reason", e.reason}});
    }
    r["partial"] = std::move(partial);
    r["pass"] = row.pass;
    doc["rows"].push_back(std::move(r));
  }
  ojson agg = ojson::object();
  for (const auto& [approach, a] : report.aggregate) {
    agg[std::string(to_string(approach))] = {{"total", a.total},       {"converted", a.converted},
                                             {"partial", a.partial},   {"ignored", a.ignored},
                                             {"errors", a.errors},     {"fraction", a.fraction()}};
  }
  doc["aggregate"] = std::move(agg);
  doc["all_pass"] = report.all_pass();
  return doc.dump(2) + "\n";
}

std::string report_table(const ConformanceReport& report, bool color) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %-7s %5s %5s %6s %6s  %-10s %-10s %s\n", "case", "approach", "nodes",
                "edges", "nprops", "eprops", "status", "expected", "result");
  out << line;
  for (const ConformanceRow& row : report.rows) {
    std::snprintf(line, sizeof line, "%-6s %-7s %5zu %5zu %6zu %6zu  %-10s %-10s ", row.case_id.c_str(),
                  std::string(to_string(row.approach)).c_str(), row.observed.nodes, row.observed.edges,
                  row.observed.node_properties, row.observed.edge_properties,
                  std::string(to_string(row.observed.status)).c_str(),
                  std::string(to_string(row.expected.shape.status)).c_str());
    out << line;
    if (color) out << (row.pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m");
    else out << (row.pass ? "PASS" : "FAIL");
    out << '\n';
  }
  for (const auto& [approach, a] : report.aggregate) {
    std::snprintf(line, sizeof line, "%s: converted %zu/%zu (%.3f), partial %zu, ignored %zu, errors %zu\n",
                  std::string(to_string(approach)).c_str(), a.converted, a.total, a.fraction(), a.partial, a.ignored,
                  a.errors);
    out << line;
  }
  return out.str();
}

}  // namespace rdfstar2pg
