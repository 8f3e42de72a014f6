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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "support/generators.hpp"

namespace rdfstar2pg {
namespace {

Iri ex(const std::string& local) { return Iri("http://example.org/" + local); }
Iri xsd(const std::string& local) { return Iri(std::string(vocab::kXsd) + local); }

Statement stmt(Term s, Iri p, Term o) { return Statement(std::move(s), std::move(p), std::move(o)); }

TEST(IriTest, RejectsMissingScheme) {
  EXPECT_THROW(Iri(""), std::invalid_argument);
  EXPECT_THROW(Iri("example.org/x"), std::invalid_argument);
  EXPECT_THROW(Iri("1abc:x"), std::invalid_argument);
  EXPECT_NO_THROW(Iri("urn:isbn"));
  EXPECT_NO_THROW(Iri("http://example.org/"));
}

TEST(LocalNameTest, LastPathSegment) { EXPECT_EQ(local_name(Iri("http://example.com/meets")), "meets"); }

TEST(LocalNameTest, NoSeparatorIsIdentity) { EXPECT_EQ(local_name(Iri("urn:isbn")), "urn:isbn"); }

TEST(LocalNameTest, FragmentWins) {
  EXPECT_EQ(local_name(Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")), "type");
}

TEST(LocalNameTest, EmptyCandidateFallsBackToWholeIri) {
  EXPECT_EQ(local_name(Iri("http://example.org/")), "http://example.org/");
  EXPECT_EQ(local_name(Iri("http://example.org/x#")), "http://example.org/x#");
}

TEST(ClassifyTest, ObjectProperty) {
  EXPECT_EQ(classify(stmt(ex("alice"), ex("meets"), ex("bob"))), StatementKind::ObjectProperty);
}

TEST(ClassifyTest, DatatypeProperty) {
  EXPECT_EQ(classify(stmt(ex("book"), ex("index"), Literal("55"))), StatementKind::DatatypeProperty);
}

TEST(ClassifyTest, StarPositions) {
  const QuotedTriple q(stmt(ex("alice"), ex("likes"), ex("bob")));
  EXPECT_EQ(classify(stmt(q, ex("certainty"), Literal("0.5", xsd("decimal")))), StatementKind::StarSubject);
  EXPECT_EQ(classify(stmt(ex("x"), ex("source"), q)), StatementKind::StarObject);
  EXPECT_EQ(classify(stmt(q, ex("same"), q)), StatementKind::StarBoth);
}

TEST(ClassifyTest, BlankObjectIsObjectProperty) {
  EXPECT_EQ(classify(stmt(ex("bob"), ex("nationality"), BlankNode{"b0", "c"})), StatementKind::ObjectProperty);
}

TEST(QuoteDepthTest, Examples) {
  EXPECT_EQ(quote_depth(Term(ex("alice"))), 0u);
  const Statement age = stmt(ex("Mark"), ex("age"), Literal("28", xsd("integer")));
  EXPECT_EQ(quote_depth(Term(QuotedTriple(age))), 1u);
  const Statement inner = stmt(ex("Steve"), ex("position"), Literal("CEO"));
  const Statement middle = stmt(QuotedTriple(inner), ex("mentionedBy"), ex("book"));
  EXPECT_EQ(quote_depth(Term(QuotedTriple(middle))), 2u);
  EXPECT_EQ(quote_depth(middle), 2u);
  EXPECT_EQ(quote_depth(inner), 1u);
}

TEST(StatementTest, LiteralSubjectRejected) {
  EXPECT_THROW(stmt(Literal("x"), ex("p"), ex("o")), std::invalid_argument);
}

TEST(LiteralTest, LangStringNeedsTag) {
  EXPECT_THROW(Literal("x", Iri(std::string(vocab::kRdfLangString))), std::invalid_argument);
  const Literal l = Literal::with_language("Bog", "da");
  EXPECT_EQ(l.datatype().str(), vocab::kRdfLangString);
  EXPECT_EQ(*l.language(), "da");
}

TEST(LiteralTest, TermWiseComparison) {
  // "100"^^xsd:integer and plain "100" stay distinct.
  EXPECT_NE(Literal("100", xsd("integer")), Literal("100"));
}

TEST(BlankNodeTest, OriginalLabelIgnoredByEquality) {
  EXPECT_EQ((BlankNode{"b0", "c"}), (BlankNode{"b0", "x"}));
  EXPECT_NE((BlankNode{"b0", "c"}), (BlankNode{"b1", "c"}));
}

TEST(InnermostTest, FollowsSubjectChain) {
  const Statement inner = stmt(ex("Steve"), ex("position"), Literal("CEO"));
  const Statement middle = stmt(QuotedTriple(inner), ex("mentionedBy"), ex("book"));
  const Statement outer = stmt(QuotedTriple(middle), ex("source"), ex("journal"));
  EXPECT_EQ(innermost_statement(outer), inner);
  EXPECT_EQ(innermost_statement(inner), inner);
  EXPECT_TRUE(is_plain(inner));
  EXPECT_FALSE(is_plain(outer));
}

TEST(InnermostTest, FollowsObjectWhenSubjectPlain) {
  const Statement inner = stmt(ex("mainPage"), ex("writer"), ex("alice"));
  EXPECT_EQ(innermost_statement(stmt(ex("bobhomepage"), ex("source"), QuotedTriple(inner))), inner);
}

TEST(NTriplesTest, Rendering) {
  EXPECT_EQ(to_ntriples(stmt(ex("a"), ex("p"), Literal("x\"y\n"))),
            "<http://example.org/a> <http://example.org/p> \"x\\\"y\\n\"");
  EXPECT_EQ(to_ntriples(Term(Literal::with_language("Book", "en"))), "\"Book\"@en");
  EXPECT_EQ(to_ntriples(Term(Literal("20", xsd("integer")))), "\"20\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  EXPECT_EQ(to_ntriples(Term(BlankNode{"b3", "q"})), "_:b3");
  EXPECT_EQ(to_ntriples(Term(QuotedTriple(stmt(ex("a"), ex("p"), ex("b"))))),
            "<< <http://example.org/a> <http://example.org/p> <http://example.org/b> >>");
}

TEST(GraphTest, SetSemantics) {
  Graph g;
  EXPECT_TRUE(g.insert(stmt(ex("a"), ex("p"), ex("b"))));
  EXPECT_FALSE(g.insert(stmt(ex("a"), ex("p"), ex("b"))));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains(stmt(ex("a"), ex("p"), ex("b"))));
}

TEST(GraphTest, EqualityIgnoresOrder) {
  Graph a;
  Graph b;
  a.insert(stmt(ex("a"), ex("p"), ex("b")));
  a.insert(stmt(ex("b"), ex("p"), ex("c")));
  b.insert(stmt(ex("b"), ex("p"), ex("c")));
  b.insert(stmt(ex("a"), ex("p"), ex("b")));
  EXPECT_EQ(a, b);
}

TEST(DatasetTest, CountsAllGraphs) {
  Dataset ds;
  ds.default_graph.insert(stmt(ex("a"), ex("p"), ex("b")));
  ds.named_graphs[ex("g")].insert(stmt(ex("a"), ex("p"), ex("b")));
  EXPECT_EQ(ds.statement_count(), 2u);
}

// Exactly one kind per statement, stable across calls; duplicate inserts
// never grow a graph; depth composes as 1 + max.
TEST(RdfModelPropertyTest, ClassifyTotalAndSetSemantics) {
  std::mt19937_64 rng(testing::kDefaultSeed);
  const testing::GenOptions opt;
  for (int i = 0; i < 1000; ++i) {
    const Statement s = testing::random_statement(rng, opt, 2);
    const StatementKind k = classify(s);
    EXPECT_EQ(k, classify(s));
    const bool sq = s.subject.is_quoted();
    const bool oq = s.object.is_quoted();
    if (sq && oq) EXPECT_EQ(k, StatementKind::StarBoth);
    else if (sq) EXPECT_EQ(k, StatementKind::StarSubject);
    else if (oq) EXPECT_EQ(k, StatementKind::StarObject);
    else if (s.object.is_literal()) EXPECT_EQ(k, StatementKind::DatatypeProperty);
    else EXPECT_EQ(k, StatementKind::ObjectProperty);

    EXPECT_EQ(quote_depth(s), 1 + std::max(quote_depth(s.subject), quote_depth(s.object)));
    EXPECT_LE(quote_depth(s), 3u);

    Graph g;
    g.insert(s);
    g.insert(s);
    EXPECT_EQ(g.size(), 1u);
  }
}

}  // namespace
}  // namespace rdfstar2pg
