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

#include "rdfstar2pg/pg_model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "rdfstar2pg/conformance.hpp"
#include "rdfstar2pg/transform.hpp"
#include "support/cases.hpp"

namespace rdfstar2pg {
namespace {

Iri xsd(const std::string& local) { return Iri(std::string(vocab::kXsd) + local); }

TEST(DecimalTest, ParseCanonicalizes) {
  EXPECT_EQ(Decimal::parse("0.50")->lexical, "0.5");
  EXPECT_EQ(Decimal::parse("0.50")->scale, 1);
  EXPECT_EQ(Decimal::parse("+007")->lexical, "7");
  EXPECT_EQ(Decimal::parse("-0.0")->lexical, "0");
  EXPECT_EQ(Decimal::parse(".5")->lexical, "0.5");
  EXPECT_EQ(Decimal::parse("5.")->lexical, "5");
  EXPECT_EQ(Decimal::parse("1.5e2")->lexical, "150");
  EXPECT_EQ(Decimal::parse("15E-3")->lexical, "0.015");
  EXPECT_FALSE(Decimal::parse("."));
  EXPECT_FALSE(Decimal::parse("abc"));
  EXPECT_FALSE(Decimal::parse("1e"));
  EXPECT_FALSE(Decimal::parse("1e999"));
}

TEST(DecimalTest, NumericOrder) {
  auto d = [](const char* s) { return *Decimal::parse(s); };
  EXPECT_LT(d("-2"), d("-1.5"));
  EXPECT_LT(d("0.5"), d("1"));
  EXPECT_LT(d("9.99"), d("10"));
  EXPECT_EQ(d("1.0") <=> d("1"), std::strong_ordering::equal);
  EXPECT_EQ(Decimal::from_integer(-42).lexical, "-42");
}

TEST(DateTest, Validation) {
  EXPECT_TRUE(Date::parse("1963-03-22"));
  EXPECT_TRUE(Date::parse("1963-03-22Z"));
  EXPECT_TRUE(Date::parse("1963-03-22+01:00"));
  EXPECT_FALSE(Date::parse("1963-13-22"));
  EXPECT_FALSE(Date::parse("1963-3-22"));
  EXPECT_FALSE(Date::parse("22/03/1963"));
}

TEST(ScalarTest, FromLiteral) {
  EXPECT_EQ(scalar_from_literal(Literal("100", xsd("integer"))), Scalar(std::int64_t{100}));
  EXPECT_EQ(scalar_from_literal(Literal("20", xsd("integer"))), Scalar(std::int64_t{20}));
  EXPECT_EQ(scalar_from_literal(Literal("0.5", xsd("decimal"))), Scalar(*Decimal::parse("0.5")));
  EXPECT_EQ(scalar_from_literal(Literal("1e3", xsd("double"))), Scalar(*Decimal::parse("1000")));
  EXPECT_EQ(scalar_from_literal(Literal("true", xsd("boolean"))), Scalar(true));
  EXPECT_EQ(scalar_from_literal(Literal("0", xsd("boolean"))), Scalar(false));
  EXPECT_EQ(scalar_from_literal(Literal("1963-03-22", xsd("date"))), Scalar(Date{"1963-03-22"}));
  EXPECT_EQ(scalar_from_literal(Literal("55")), Scalar(std::string("55")));
  EXPECT_EQ(scalar_from_literal(Literal::with_language("Bog", "da")), Scalar(std::string("Bog")));
}

TEST(ScalarTest, OutOfRangeFallsBack) {
  EXPECT_EQ(scalar_from_literal(Literal("99999999999999999999", xsd("integer"))),
            Scalar(*Decimal::parse("99999999999999999999")));
  EXPECT_EQ(scalar_from_literal(Literal("INF", xsd("double"))), Scalar(std::string("INF")));
  EXPECT_EQ(scalar_from_literal(Literal("abc", xsd("integer"))), Scalar(std::string("abc")));
  EXPECT_EQ(scalar_from_literal(Literal("2026-02-30x", xsd("date"))), Scalar(std::string("2026-02-30x")));
}

TEST(ValueTest, DisplayAndEncode) {
  const PropertyValue list = List{{std::string("a"), std::int64_t{1}}};
  EXPECT_EQ(display(list), "a,1");
  EXPECT_EQ(display(list, ";"), "a;1");
  EXPECT_EQ(display(PropertyValue(true)), "true");
  EXPECT_NE(encode(PropertyValue(std::string("1"))), encode(PropertyValue(std::int64_t{1})));
  EXPECT_EQ(kind_of(list), ValueKind::List);
  EXPECT_EQ(to_string(ValueKind::Decimal), "decimal");
}

TEST(UpsertNodeTest, IdempotentForSameKey) {
  PropertyGraph g;
  const NodeId a = upsert_node(g, "iri:http://example.org/book", {"Resource"}, {});
  const NodeId b = upsert_node(g, "iri:http://example.org/book", {"Resource"}, {});
  EXPECT_EQ(a, b);
  EXPECT_EQ(g.nodes.size(), 1u);
  EXPECT_EQ(a, "n:iri:http://example.org/book");
}

TEST(UpsertNodeTest, DistinctKeysDistinctNodes) {
  PropertyGraph g;
  upsert_node(g, "iri:http://example.org/alice", {"Resource"}, {});
  upsert_node(g, "iri:http://example.org/bob", {"Resource"}, {});
  EXPECT_EQ(g.nodes.size(), 2u);
}

TEST(UpsertNodeTest, MergesLabelsAndProperties) {
  PropertyGraph g;
  upsert_node(g, "k", {"A"}, {{"x", std::int64_t{1}}});
  upsert_node(g, "k", {"B"}, {{"y", std::string("v")}, {"x", std::int64_t{1}}});
  const Node& n = g.nodes.at(node_id_for("k"));
  EXPECT_EQ(n.labels, (std::set<std::string>{"A", "B"}));
  EXPECT_EQ(n.properties.size(), 2u);
}

TEST(UpsertNodeTest, ConflictThrowsAndLeavesGraph) {
  PropertyGraph g;
  upsert_node(g, "k", {"A"}, {{"x", std::int64_t{1}}});
  const PropertyGraph before = g;
  try {
    upsert_node(g, "k", {"B"}, {{"x", std::int64_t{2}}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::PropertyConflict);
  }
  EXPECT_EQ(g, before);
  EXPECT_THROW(upsert_node(g, "", {}, {}), GraphError);
}

TEST(AddEdgeTest, EdgeBetweenNodes) {
  PropertyGraph g;
  const NodeId a = upsert_node(g, "iri:http://example.org/alice", {"Resource"}, {});
  const NodeId b = upsert_node(g, "iri:http://example.org/bob", {"Resource"}, {});
  const EdgeId e = add_edge(g, a, b, {"meets"}, {});
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges.at(e).source, a);
  EXPECT_EQ(g.edges.at(e).target, b);
  EXPECT_EQ(e.size(), 2u + 16u);
  EXPECT_EQ(e.rfind("e:", 0), 0u);
}

TEST(AddEdgeTest, IdenticalEdgeDeduplicated) {
  PropertyGraph g;
  const NodeId a = upsert_node(g, "a", {}, {});
  const NodeId b = upsert_node(g, "b", {}, {});
  EXPECT_EQ(add_edge(g, a, b, {"meets"}, {}), add_edge(g, a, b, {"meets"}, {}));
  EXPECT_EQ(g.edges.size(), 1u);
  add_edge(g, a, b, {"likes"}, {});
  add_edge(g, a, b, {"meets"}, {{"w", std::int64_t{1}}});
  EXPECT_EQ(g.edges.size(), 3u);
}

TEST(AddEdgeTest, Errors) {
  PropertyGraph g;
  const NodeId a = upsert_node(g, "a", {}, {});
  try {
    add_edge(g, a, "n:missing", {"x"}, {});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::DanglingEndpoint);
  }
  try {
    add_edge(g, a, a, {}, {});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::InvalidEdge);
  }
  EXPECT_TRUE(g.edges.empty());
}

TEST(AddEdgeTest, TwoTypeEdges) {
  // Two rdf:type statements under RPT with edge policy give two "type" edges.
  const Dataset ds = testing::case_dataset("7");
  TransformConfig cfg;
  cfg.rdf_type_policy = TypePolicy::AsEdge;
  const TransformResult r = rpt(ds, cfg);
  std::size_t typed = 0;
  for (const auto& [id, e] : r.graph.edges) {
    typed += e.labels.count("type");
    EXPECT_EQ(e.source, "n:iri:http://example.com/alice");
  }
  EXPECT_EQ(typed, 2u);
}

TEST(CanonicalFormTest, Empty) {
  const CanonicalForm f = canonical_form(PropertyGraph{});
  EXPECT_TRUE(f.nodes.empty());
  EXPECT_TRUE(f.edges.empty());
}

TEST(CanonicalFormTest, NodesInIdOrder) {
  const TransformResult r = rpt(testing::case_dataset("1"));
  const CanonicalForm f = canonical_form(r.graph);
  ASSERT_EQ(f.nodes.size(), 2u);
  EXPECT_EQ(f.nodes[0].id, "n:iri:http://example.org/alice");
  EXPECT_EQ(f.nodes[1].id, "n:iri:http://example.org/bob");
  ASSERT_EQ(f.edges.size(), 1u);
}

TEST(CanonicalFormTest, InsertionOrderIndependent) {
  const Dataset ds = testing::case_dataset("3.1");
  std::vector<Statement> stmts;
  for (const auto& e : ds.default_graph.entries()) stmts.push_back(e.statement);
  const CanonicalForm reference = canonical_form(rpt(ds).graph);
  std::sort(stmts.begin(), stmts.end());
  do {
    Dataset p;
    for (const auto& s : stmts) p.default_graph.insert(s);
    EXPECT_EQ(canonical_form(rpt(p).graph), reference);
  } while (std::next_permutation(stmts.begin(), stmts.end()));
}

TEST(CanonicalFormTest, EdgesOrderedBySourceLabelsTarget) {
  PropertyGraph g;
  const NodeId a = upsert_node(g, "a", {}, {});
  const NodeId b = upsert_node(g, "b", {}, {});
  add_edge(g, b, a, {"x"}, {});
  add_edge(g, a, b, {"z"}, {});
  add_edge(g, a, b, {"y"}, {});
  const CanonicalForm f = canonical_form(g);
  ASSERT_EQ(f.edges.size(), 3u);
  EXPECT_EQ(*f.edges[0].labels.begin(), "y");
  EXPECT_EQ(*f.edges[1].labels.begin(), "z");
  EXPECT_EQ(f.edges[2].source, b);
}

TEST(BookkeepingTest, Keys) {
  for (const char* k : {"iri", "bnode", "value", "datatype", "lang", "age.graph"}) {
    EXPECT_TRUE(is_node_bookkeeping_key(k)) << k;
  }
  EXPECT_FALSE(is_node_bookkeeping_key("age"));
  EXPECT_TRUE(is_edge_bookkeeping_key("graph"));
  EXPECT_TRUE(is_edge_bookkeeping_key("iri"));
  EXPECT_FALSE(is_edge_bookkeeping_key("certainty"));
}

TEST(Fnv1aTest, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

// Referential integrity and id determinism across random mutation sequences.
TEST(PgModelPropertyTest, IntegrityAfterRandomMutations) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    PropertyGraph g;
    std::vector<NodeId> ids;
    for (int step = 0; step < 30; ++step) {
      const int op = std::uniform_int_distribution<int>(0, 2)(rng);
      if (op < 2 || ids.empty()) {
        const std::string key = "k" + std::to_string(std::uniform_int_distribution<int>(0, 6)(rng));
        const NodeId id = upsert_node(g, key, {"L"}, {});
        EXPECT_EQ(id, node_id_for(key));
        ids.push_back(id);
      } else {
        const NodeId& s = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
        const NodeId& t = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
        add_edge(g, s, t, {"r" + std::to_string(std::uniform_int_distribution<int>(0, 1)(rng))}, {});
      }
      for (const auto& [eid, e] : g.edges) {
        ASSERT_TRUE(g.nodes.count(e.source));
        ASSERT_TRUE(g.nodes.count(e.target));
        EXPECT_EQ(eid, e.id);
      }
    }
  }
}

}  // namespace
}  // namespace rdfstar2pg
