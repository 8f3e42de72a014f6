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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdfstar2pg/conformance.hpp"
#include "rdfstar2pg/exporters.hpp"
#include "rdfstar2pg/turtle_parser.hpp"

namespace rdfstar2pg::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct ConvertOptions {
  std::string input = "-";
  std::string approach = "rpt";
  std::string datatype_policy = "property";
  std::string type_policy;
  std::string graph_policy = "edge-property";
  std::string list_policy = "expand";
  std::string multi_value_policy;
  bool no_kind_labels = false;
  std::string format = "json";
  std::string output = "-";
  std::string report;
};

struct ConformanceOptions {
  std::string approaches = "rpt,pgt,hybrid";
  std::string json;
};

std::optional<std::string> read_input(const std::string& path, std::istream& in, std::ostream& err) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << path << ": error: cannot open input\n";
    return std::nullopt;
  }
  return std::string(std::istreambuf_iterator<char>(file), {});
}

bool write_output(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << path << ": error: cannot write output\n";
    return false;
  }
  return true;
}

std::optional<Dataset> parse_input(const std::string& path, std::istream& in, std::ostream& err) {
  auto text = read_input(path, in, err);
  if (!text) return std::nullopt;
  try {
    return parse_turtle_star(*text);
  } catch (const ParseError& e) {
    err << (path == "-" ? "<stdin>" : path) << ':' << e.line() << ':' << e.column() << ": error: " << e.message()
        << " [" << to_string(e.kind()) << "]\n";
    return std::nullopt;
  }
}

ojson entries_json(const std::vector<ReportEntry>& entries) {
  ojson arr = ojson::array();
  for (const ReportEntry& e : entries) {
    ojson j;
    j["statement"] = to_ntriples(e.statement);
    if (e.graph) j["graph"] = e.graph->str();
    j["reason"] = e.reason;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

int cmd_convert(const ConvertOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto dataset = parse_input(o.input, in, err);
  if (!dataset) return kExitFailure;

  TransformConfig cfg;
  cfg.approach = *parse_approach(o.approach);
  cfg.hybrid_datatype_policy = o.datatype_policy == "edge" ? DatatypePolicy::AsEdge : DatatypePolicy::AsProperty;
  if (!o.type_policy.empty()) cfg.rdf_type_policy = o.type_policy == "label" ? TypePolicy::AsLabel : TypePolicy::AsEdge;
  static const std::map<std::string, NamedGraphPolicy> kGraph = {{"merge", NamedGraphPolicy::Merge},
                                                                 {"partition", NamedGraphPolicy::Partition},
                                                                 {"edge-property", NamedGraphPolicy::EdgeProperty}};
  cfg.named_graph_policy = kGraph.at(o.graph_policy);
  cfg.list_policy = o.list_policy == "collapse" ? ListPolicy::CollapseLiterals : ListPolicy::Expand;
  if (!o.multi_value_policy.empty()) {
    cfg.multi_value_policy = o.multi_value_policy == "last" ? MultiValuePolicy::LastWins : MultiValuePolicy::ListMerge;
  }
  cfg.rpt_kind_labels = !o.no_kind_labels;

  const TransformResult result = transform(*dataset, cfg);
  std::string text;
  try {
    text = export_graph(result.graph, *parse_format(o.format));
  } catch (const ExportError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (!write_output(o.output, text, out, err)) return kExitFailure;
  if (!o.report.empty() && !write_output(o.report, report_json(result.report), out, err)) return kExitFailure;
  for (const ReportEntry& e : result.report.partial) {
    err << "partial: " << to_ntriples(e.statement) << ": " << e.reason << '\n';
  }
  for (const ReportEntry& e : result.report.ignored) {
    err << "ignored: " << to_ntriples(e.statement) << ": " << e.reason << '\n';
  }
  for (const ReportEntry& e : result.report.errors) {
    err << "error: " << to_ntriples(e.statement) << ": " << e.reason << '\n';
  }
  return result.report.lossless() ? kExitOk : kExitLossy;
}

int cmd_conformance(const ConformanceOptions& o, std::ostream& out, std::ostream& err, bool color) {
  std::vector<Approach> approaches;
  std::stringstream list(o.approaches);
  for (std::string item; std::getline(list, item, ',');) {
    auto a = parse_approach(item);
    if (!a) {
      err << "error: unknown approach '" << item << "'\n";
      return kExitUsage;
    }
    approaches.push_back(*a);
  }
  if (approaches.empty()) {
    err << "error: --approaches is empty\n";
    return kExitUsage;
  }
  const ConformanceReport report = run_conformance(approaches);
  out << report_table(report, color);
  if (!o.json.empty() && !write_output(o.json, report_to_json(report), out, err)) return kExitFailure;
  return report.all_pass() ? kExitOk : kExitFailure;
}

int cmd_inspect(const std::string& input, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto dataset = parse_input(input, in, err);
  if (!dataset) return kExitFailure;
  std::map<StatementKind, std::size_t> kinds;
  std::size_t depth = 0;
  auto scan = [&](const Graph& g) {
    for (const auto& e : g.entries()) {
      ++kinds[classify(e.statement)];
      depth = std::max({depth, quote_depth(e.statement.subject), quote_depth(e.statement.object)});
    }
  };
  scan(dataset->default_graph);
  for (const auto& [name, g] : dataset->named_graphs) scan(g);

  out << plural(dataset->statement_count(), "statement");
  if (kinds.size() == 1) {
    out << ", " << to_string(kinds.begin()->first);
  } else {
    for (const auto& [k, n] : kinds) out << ", " << to_string(k) << ' ' << n;
  }
  out << ", max depth " << depth << ", " << plural(dataset->named_graphs.size(), "named graph") << '\n';
  if (!dataset->default_graph.empty() || dataset->named_graphs.empty()) {
    out << "default graph: " << plural(dataset->default_graph.size(), "statement") << '\n';
  }
  for (const auto& [name, g] : dataset->named_graphs) {
    out << "graph <" << name.str() << ">: " << plural(g.size(), "statement") << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string report_json(const TransformReport& report) {
  ojson j;
  j["total_statements"] = report.total_statements;
  j["converted"] = report.converted;
  j["converted_fraction"] = report.converted_fraction();
  j["partial"] = entries_json(report.partial);
  j["ignored"] = entries_json(report.ignored);
  j["errors"] = entries_json(report.errors);
  j["notes"] = entries_json(report.notes);
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Convert RDF-star (Turtle-star / TriG-star) into property graphs.", "rdfstar2pg"};
  app.require_subcommand(1);

  ConvertOptions convert;
  auto* c = app.add_subcommand("convert", "Transform a document and export the property graph");
  c->add_option("input", convert.input, "Input file, '-' for standard input")->capture_default_str();
  c->add_option("--approach", convert.approach, "rpt|pgt|hybrid")
      ->check(CLI::IsMember({"rpt", "pgt", "hybrid"}))
      ->capture_default_str();
  c->add_option("--datatype-policy", convert.datatype_policy, "Hybrid only: edge|property")
      ->check(CLI::IsMember({"edge", "property"}))
      ->capture_default_str();
  c->add_option("--rdf-type-policy", convert.type_policy, "edge|label (default: label for pgt, else edge)")
      ->check(CLI::IsMember({"edge", "label"}));
  c->add_option("--named-graph-policy", convert.graph_policy, "merge|partition|edge-property")
      ->check(CLI::IsMember({"merge", "partition", "edge-property"}))
      ->capture_default_str();
  c->add_option("--list-policy", convert.list_policy, "expand|collapse")
      ->check(CLI::IsMember({"expand", "collapse"}))
      ->capture_default_str();
  c->add_option("--multi-value-policy", convert.multi_value_policy,
                "list|last (default: list for node properties, last for edge properties)")
      ->check(CLI::IsMember({"list", "last"}));
  c->add_flag("--no-kind-labels", convert.no_kind_labels, "RPT: omit ObjectProperty/DatatypeProperty edge labels");
  c->add_option("--format", convert.format, "json|graphml|cypher")
      ->check(CLI::IsMember({"json", "graphml", "cypher"}))
      ->capture_default_str();
  c->add_option("--output,-o", convert.output, "Output file, '-' for standard output")->capture_default_str();
  c->add_option("--report", convert.report, "Write the conversion report as JSON to this path");

  ConformanceOptions conf;
  auto* k = app.add_subcommand("conformance", "Run the built-in corpus against the expected shapes");
  k->add_option("--approaches", conf.approaches, "Comma-separated approaches")->capture_default_str();
  k->add_option("--json", conf.json, "Also write the report as JSON to this path");

  std::string inspect_input = "-";
  auto* i = app.add_subcommand("inspect", "Summarize a document");
  i->add_option("input", inspect_input, "Input file, '-' for standard input")->capture_default_str();

  std::vector<const char*> argv{"rdfstar2pg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (c->parsed()) return cmd_convert(convert, in, out, err);
  if (k->parsed()) return cmd_conformance(conf, out, err, color);
  return cmd_inspect(inspect_input, in, out, err);
}

}  // namespace rdfstar2pg::cli
