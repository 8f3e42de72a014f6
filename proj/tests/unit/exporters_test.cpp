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

#include "rdfstar2pg/exporters.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <string>

#include "json.hpp"
#include "rdfstar2pg/transform.hpp"
#include "support/cases.hpp"
#include "support/mini_cypher.hpp"

namespace rdfstar2pg {
namespace {

using testing::case_dataset;

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

PropertyGraph graph_with_list() {
  PropertyGraph g;
  upsert_node(g, "k", {"Resource"}, {{"subject", List{{std::string("Info_Page"), std::string("aau_page")}}}});
  return g;
}

TEST(FormatTest, Parse) {
  EXPECT_EQ(parse_format("json"), ExportFormat::JsonPG);
  EXPECT_EQ(parse_format("graphml"), ExportFormat::GraphML);
  EXPECT_EQ(parse_format("cypher"), ExportFormat::CypherScript);
  EXPECT_FALSE(parse_format("csv"));
}

TEST(JsonTest, EmptyGraph) { EXPECT_EQ(to_json(PropertyGraph{}), "{\"nodes\":[],\"edges\":[]}\n"); }

// Built by hand from the two-node, one-edge shape.
TEST(JsonTest, SingleEdgeGraph) {
  const PropertyGraph g = rpt(case_dataset("1")).graph;
  const auto doc = nlohmann::json::parse(to_json(g));
  ASSERT_EQ(doc["nodes"].size(), 2u);
  ASSERT_EQ(doc["edges"].size(), 1u);
  EXPECT_EQ(doc["nodes"][0]["id"], "n:iri:http://example.org/alice");
  EXPECT_EQ(doc["nodes"][0]["labels"], nlohmann::json::array({"Resource"}));
  EXPECT_EQ(doc["nodes"][0]["properties"]["iri"], "http://example.org/alice");
  EXPECT_EQ(doc["edges"][0]["labels"], nlohmann::json::array({"ObjectProperty", "meets"}));
  EXPECT_EQ(doc["edges"][0]["source"], "n:iri:http://example.org/alice");
  EXPECT_EQ(doc["edges"][0]["target"], "n:iri:http://example.org/bob");
}

TEST(JsonTest, ByteStable) {
  const PropertyGraph g = rpt(case_dataset("3.1")).graph;
  EXPECT_EQ(to_json(g), to_json(g));
  const PropertyGraph copy = g;
  EXPECT_EQ(to_json(copy), to_json(g));
}

TEST(JsonTest, DecimalsAndDatesAreTypedStrings) {
  const PropertyGraph g = pgt(case_dataset("3.1")).graph;
  const auto doc = nlohmann::json::parse(to_json(g));
  const auto& node = doc["nodes"][0];
  EXPECT_EQ(node["properties"]["publish_date"], "1963-03-22");
  EXPECT_EQ(node["properties"]["pages"], 100);
  EXPECT_EQ(node["types"]["publish_date"], "date");
  const auto edge = nlohmann::json::parse(to_json(rpt(case_dataset("8")).graph))["edges"][0];
  EXPECT_EQ(edge["properties"]["certainty"], "0.5");
  EXPECT_EQ(edge["types"]["certainty"], "decimal");
}

TEST(JsonTest, RoundTripAllValueKinds) {
  PropertyGraph g;
  const NodeId a = upsert_node(
      g, "a", {"A", "B"},
      {{"s", std::string("x\"\n\xc3\xa9")},
       {"i", std::int64_t{-5}},
       {"d", *Decimal::parse("12.5")},
       {"b", true},
       {"t", Date{"2026-10-18Z"}},
       {"ls", List{{std::string("1"), std::string("2")}}},
       {"ld", List{{*Decimal::parse("1"), *Decimal::parse("2.5")}}},
       {"lt", List{{Date{"2026-01-01"}}}},
       {"li", List{{std::int64_t{1}, std::int64_t{2}}}}});
  const NodeId b = upsert_node(g, "b", {}, {});
  add_edge(g, a, b, {"r"}, {{"w", *Decimal::parse("0.25")}});
  EXPECT_EQ(canonical_form(from_json(to_json(g))), canonical_form(g));
}

TEST(JsonTest, FromJsonRejectsBadInput) {
  auto kind = [](std::string_view text) {
    try {
      from_json(text);
    } catch (const ExportError& e) {
      return e.kind();
    }
    return ExportError::Kind::UnrepresentableValue;
  };
  EXPECT_EQ(kind("not json"), ExportError::Kind::InvalidInput);
  EXPECT_EQ(kind("{\"nodes\":[]}"), ExportError::Kind::InvalidInput);
  EXPECT_EQ(kind("{\"nodes\":[],\"edges\":[{\"id\":\"e\",\"source\":\"x\",\"target\":\"y\",\"labels\":[\"r\"],"
                 "\"properties\":{}}]}"),
            ExportError::Kind::InvalidInput);
}

TEST(GraphMLTest, ElementCounts) {
  const PropertyGraph g = rpt(case_dataset("1")).graph;
  const std::string xml = to_graphml(g);
  EXPECT_EQ(count(xml, "<node "), 2u);
  EXPECT_EQ(count(xml, "<edge "), 1u);
  EXPECT_NE(xml.find("attr.name=\"labels\""), std::string::npos);
  EXPECT_NE(xml.find(">ObjectProperty;meets<"), std::string::npos);
  EXPECT_EQ(xml.back(), '\n');
  EXPECT_EQ(xml.find('\r'), std::string::npos);
}

TEST(GraphMLTest, EmptySkeleton) {
  const std::string xml = to_graphml(PropertyGraph{});
  EXPECT_NE(xml.find("<graphml"), std::string::npos);
  EXPECT_NE(xml.find("<graph "), std::string::npos);
  EXPECT_EQ(count(xml, "<node "), 0u);
}

TEST(GraphMLTest, ListsJoinedAndFlagged) {
  const std::string xml = to_graphml(graph_with_list());
  const std::smatch m = [&] {
    std::smatch out;
    std::regex_search(xml, out, std::regex("<data key=\"k\\d+\">(Info_Page[^<]*)</data>"));
    return out;
  }();
  ASSERT_FALSE(m.empty());
  const std::string joined = m[1];
  const std::string separator = "&#x1F;";
  const auto pos = joined.find(separator);
  ASSERT_NE(pos, std::string::npos);
  EXPECT_EQ(joined.substr(0, pos), "Info_Page");
  EXPECT_EQ(joined.substr(pos + separator.size()), "aau_page");
  EXPECT_NE(xml.find("<desc>"), std::string::npos);
}

TEST(GraphMLTest, ListRejectedWhenJoinDisabled) {
  try {
    to_graphml(graph_with_list(), GraphMLOptions{false});
    FAIL();
  } catch (const ExportError& e) {
    EXPECT_EQ(e.kind(), ExportError::Kind::UnrepresentableValue);
  }
}

TEST(GraphMLTest, EscapesMarkup) {
  PropertyGraph g;
  upsert_node(g, "a&b", {"L<1>"}, {{"q", std::string("\"x\" & <y>")}});
  const std::string xml = to_graphml(g);
  EXPECT_NE(xml.find("&quot;x&quot; &amp; &lt;y&gt;"), std::string::npos);
  EXPECT_NE(xml.find("id=\"n:a&amp;b\""), std::string::npos);
  EXPECT_EQ(xml.find("<y>"), std::string::npos);
}

TEST(GraphMLTest, TypedKeys) {
  const std::string xml = to_graphml(pgt(case_dataset("3.1")).graph);
  EXPECT_NE(xml.find("attr.name=\"pages\" attr.type=\"long\""), std::string::npos);
  EXPECT_NE(xml.find("attr.name=\"publish_date\" attr.type=\"string\""), std::string::npos);
}

TEST(CypherTest, SingleEdgeScript) {
  const std::string script = to_cypher(rpt(case_dataset("1")).graph);
  EXPECT_EQ(script.rfind("CREATE (n0:Resource {id:\"n:iri:http://example.org/alice\", iri:\"http://example.org/alice\"})\n", 0),
            0u);
  EXPECT_NE(script.find("CREATE (n0)-[:meets {"), std::string::npos);
  EXPECT_NE(script.find("]->(n1)\n"), std::string::npos);
  const testing::CypherLoad load = testing::load_cypher(script);
  ASSERT_TRUE(load.ok) << load.error;
  EXPECT_EQ(load.nodes, 2u);
  EXPECT_EQ(load.relationships, 1u);
  EXPECT_EQ(load.relationship_types.at("meets"), 1u);
}

TEST(CypherTest, EmptyGraphEmptyScript) { EXPECT_EQ(to_cypher(PropertyGraph{}), ""); }

TEST(CypherTest, EdgePropertyInline) {
  const std::string script = to_cypher(rpt(case_dataset("8")).graph);
  EXPECT_NE(script.find("certainty:0.5"), std::string::npos);
  EXPECT_TRUE(testing::load_cypher(script).ok);
}

TEST(CypherTest, EscapingAndSanitizing) {
  PropertyGraph g;
  upsert_node(g, "a", {"has space"}, {{"inv:source", std::string("say \"hi\"\\\n")}, {"n", *Decimal::parse("3")}});
  const std::string script = to_cypher(g);
  EXPECT_NE(script.find(":has_space"), std::string::npos);
  EXPECT_NE(script.find("inv_source:\"say \\\"hi\\\"\\\\\\n\""), std::string::npos);
  EXPECT_NE(script.find("n:3.0"), std::string::npos);
  const testing::CypherLoad load = testing::load_cypher(script);
  EXPECT_TRUE(load.ok) << load.error;
}

TEST(CypherTest, KeyCollisionAfterSanitizing) {
  PropertyGraph g;
  upsert_node(g, "a", {"L"}, {{"a:b", std::string("1")}, {"a_b", std::string("2")}});
  try {
    to_cypher(g);
    FAIL();
  } catch (const ExportError& e) {
    EXPECT_EQ(e.kind(), ExportError::Kind::UnsanitizableIdentifier);
  }
}

TEST(CypherTest, AllCorpusOutputsLoad) {
  for (const TestCase& tc : builtin_corpus()) {
    for (Approach a : {Approach::RPT, Approach::PGT, Approach::Hybrid}) {
      TransformConfig cfg;
      cfg.approach = a;
      const PropertyGraph g = transform(parse_case(tc), cfg).graph;
      const testing::CypherLoad load = testing::load_cypher(to_cypher(g));
      ASSERT_TRUE(load.ok) << tc.id << ' ' << to_string(a) << ": " << load.error;
      EXPECT_EQ(load.nodes, g.nodes.size());
      EXPECT_EQ(load.relationships, g.edges.size());
    }
  }
}

TEST(SanitizeTest, Rules) {
  EXPECT_EQ(sanitize_identifier("meets"), "meets");
  EXPECT_EQ(sanitize_identifier("publish-date"), "publish_date");
  EXPECT_EQ(sanitize_identifier("1st"), "_1st");
  EXPECT_EQ(sanitize_identifier("mentionedBy.source"), "mentionedBy_source");
  EXPECT_THROW(sanitize_identifier(""), ExportError);
}

TEST(MiniCypherTest, RejectsBrokenScripts) {
  EXPECT_FALSE(testing::load_cypher("CREATE (n0)-[:r]->(n1)\n").ok);
  EXPECT_FALSE(testing::load_cypher("CREATE (n0)\nCREATE (n0)\n").ok);
  EXPECT_FALSE(testing::load_cypher("CREATE (n0 {a:\"x})\n").ok);
  EXPECT_FALSE(testing::load_cypher("CREATE (n0:1abc)\n").ok);
  EXPECT_FALSE(testing::load_cypher("CREATE (n0)").ok);
  EXPECT_TRUE(testing::load_cypher("CREATE (n0:A:B {a:[1, -2.5, \"x\"], b:true})\n").ok);
}

TEST(ExportGraphTest, Dispatch) {
  const PropertyGraph g = rpt(case_dataset("1")).graph;
  EXPECT_EQ(export_graph(g, ExportFormat::JsonPG), to_json(g));
  EXPECT_EQ(export_graph(g, ExportFormat::GraphML), to_graphml(g));
  EXPECT_EQ(export_graph(g, ExportFormat::CypherScript), to_cypher(g));
}

}  // namespace
}  // namespace rdfstar2pg
