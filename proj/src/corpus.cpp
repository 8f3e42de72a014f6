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

// Corpus sources and the frozen expected-shape table. Any edit to the table
// changes expected_table_fingerprint() and needs a CHANGELOG.md entry.

#include <cstdio>
#include <sstream>

#include "rdfstar2pg/conformance.hpp"

namespace rdfstar2pg {

const std::vector<TestCase>& builtin_corpus() {
  static const std::vector<TestCase> corpus = {
      {"1", "object property statement", R"ttl(#Case 1
@prefix ex: <http://example.org/> .
ex:alice ex:meets ex:bob .
)ttl", 1},
      {"2.1", "predicate described by literals", R"ttl(#Case 2.1
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix ex: <http://example.org/> .
ex:Sam ex:mentor ex:Lee .
ex:mentor rdfs:label "project supervisor" .
ex:mentor ex:name "mentor's name" .
)ttl", 3},
      {"2.2", "predicate with an alias", R"ttl(#Case 2.2:
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix ex: <http://example.org/> .
ex:Martin ex:mentorJoe ex:Joe .
ex:mentorJoe ex:alias ex:teacher .
)ttl", 2},
      {"2.3", "predicate as sub-property", R"ttl(#Case 2.3:
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix ex: <http://example.org/> .
ex:Jan ex:supervise ex:Leo .
ex:supervise rdfs:subPropertyOf ex:administer .
)ttl", 2},
      {"2.4", "predicate with a type", R"ttl(#Case 2.4:
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix ex: <http://example.org/> .
ex:Tom ex:friend ex:Chris .
ex:friend rdf:type ex:relation .
)ttl", 2},
      {"3.1", "typed literals", R"ttl(#Case 3.1:
@prefix ex: <http://example.org/> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
ex:book  ex:publish_date "1963-03-22"^^xsd:date .
ex:book  ex:pages        "100"^^xsd:integer .
ex:book  ex:cover        20 .
ex:book  ex:index        "55" .
)ttl", 4},
      {"3.2", "language-tagged literals", R"ttl(#Case 3.2:
@prefix ex: <http://example.org/> .
ex:book  ex:Englishtitle "Book"@en .
ex:book  ex:title "Bog"@da .
)ttl", 2},
      {"4", "collection", R"ttl(#Case 4:
@prefix ex: <http://example.org/> .
ex:List1 ex:contents ("one" "two" "three") .
)ttl", 1},
      {"5", "blank node", R"ttl(#Case 5:
@prefix ex: <http://example.org/> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns> .
ex:bob ex:nationality _:c .
_:c a  ex:Person .
)ttl", 2},
      {"6", "named graphs", R"ttl(#Case 6:
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema> .
@prefix ex: <http://example.org/> .
ex:Graph1 { ex:Monica ex:name "Monica" .
            ex:Monica ex:homepage ex:Monicahompage .
            ex:Monica ex:hasSkill ex:Management }
ex:Graph2 { ex:Monica rdf:type ex:Person .
            ex:Monica ex:hasSkill ex:Programming }
)ttl", 5},
      {"7", "several types", R"ttl(#Case 7:
@prefix ex: <http://example.com/> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns> .
ex:alice  a ex:Artist .
ex:alice  a ex:Author .
)ttl", 2},
      {"8", "quoted object property, subject position", R"ttl(#Case 8:
@prefix ex: <http://example.org/> .
<<ex:alice ex:likes ex:bob>> ex:certainty 0.5 .
)ttl", 1},
      {"9", "quoted datatype property, subject position", R"ttl(#Case 9:
@prefix ex: <http://example.org/> .
<<ex:Mark ex:age 28>> ex:certainty 1 .
)ttl", 1},
      {"10", "quoted object property, object position", R"ttl(#Case 10:
@prefix ex: <http://example.org/> .
ex:bobhomepage ex:source <<ex:mainPage ex:writer ex:alice>> .
)ttl", 1},
      {"11.1", "quoted subject, IRI object", R"ttl(#Case 11.1:
@prefix ex: <http://example.org/> .
<<ex:mainPage ex:writer ex:alice>> ex:source ex:bobhomepage .
)ttl", 1},
      {"11.2", "quoted subject, IRI object described further", R"ttl(#Case 11.2:
@prefix ex: <http://example.org/> .
<<ex:alice ex:friend ex:bob>> ex:mentionedBy ex:Alex .
  ex:Alex  ex:age    25 .
)ttl", 2},
      {"12.1", "type of a quoted statement", R"ttl(#Case 12.1:
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>.
@prefix ex: <http://example.com/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
<<ex:mainPage ex:writer ex:alice>> rdf:type ex:bobhomepage .
)ttl", 1},
      {"12.2", "quoted type statement", R"ttl(#Case 12.2:
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix ex: <http://example.org/> .
<<ex:lara rdf:type ex:writer>> ex:owner ex:Journal .

)ttl", 1},
      {"13", "doubly nested quoted statement", R"ttl(#Case 13:
@prefix ex: <http://example.com/> .
<<<<ex:Steve ex:position "CEO">> ex:mentionedBy ex:book>> ex:source ex:journal .
)ttl", 2},
      {"14.1", "multi-valued literal property", R"ttl(#Case 14.1:
@prefix ex: <http://example.org/> .
ex:college_page ex:subject "Info_Page" ;
                ex:subject "aau_page" .
)ttl", 2},
      {"14.2", "multi-valued property of a quoted statement", R"ttl(#Case 14.2:
@prefix ex: <http://example.org/> .
<<ex:Mary ex:likes ex:Matt>> ex:certainty 0.5 .
<<ex:Mary ex:likes ex:Matt>> ex:certainty 1 .
)ttl", 2},
      {"15.1", "one quoted statement, two annotations", R"ttl(#Case 15.1:
@prefix ex: <http://example.com/> .
<<ex:Mary ex:likes ex:Matt>> ex:certainty 0.5 .
<<ex:Mary ex:likes ex:Matt>> ex:source "text" .
)ttl", 2},
      {"15.2", "statement both quoted and asserted", R"ttl(#Case 15.2:
@prefix ex: <http://example.com/> .
<<ex:Mary ex:likes ex:Matt>> ex:certainty 0.5 .
  ex:Mary ex:likes ex:Matt .
)ttl", 2},
  };
  return corpus;
}

namespace {

constexpr auto R = Approach::RPT;
constexpr auto P = Approach::PGT;
constexpr auto H = Approach::Hybrid;
constexpr auto F = Basis::Reference;
constexpr auto D = Basis::Computed;

ExpectedShape ok(std::size_t n, std::size_t e, std::size_t np, std::size_t ep, Basis basis) {
  return ExpectedShape{Shape{n, e, np, ep, CaseStatus::Converted}, basis, {}, 0};
}

ExpectedShape lossy(std::size_t n, std::size_t e, std::size_t np, std::size_t ep, Basis basis,
                    std::size_t units) {
  return ExpectedShape{Shape{n, e, np, ep, CaseStatus::Partial}, basis, std::string(kReasonPropertyOfProperty),
                       units};
}

}  // namespace

const ExpectedTable& expected_shape_table() {
  // (nodes, edges, node properties, edge properties).
  static const ExpectedTable table = {
      {{"1", R}, ok(2, 1, 0, 0, F)},      {{"1", P}, ok(2, 1, 0, 0, F)},      {{"1", H}, ok(2, 1, 0, 0, D)},
      {{"2.1", R}, ok(5, 3, 0, 0, D)},    {{"2.1", P}, ok(3, 1, 2, 0, D)},    {{"2.1", H}, ok(3, 1, 2, 0, D)},
      {{"2.2", R}, ok(4, 2, 0, 0, D)},    {{"2.2", P}, ok(4, 2, 0, 0, D)},    {{"2.2", H}, ok(4, 2, 0, 0, D)},
      {{"2.3", R}, ok(4, 2, 0, 0, D)},    {{"2.3", P}, ok(4, 2, 0, 0, D)},    {{"2.3", H}, ok(4, 2, 0, 0, D)},
      {{"2.4", R}, ok(4, 2, 0, 0, D)},    {{"2.4", P}, ok(3, 1, 0, 0, D)},    {{"2.4", H}, ok(4, 2, 0, 0, D)},
      {{"3.1", R}, ok(5, 4, 0, 0, F)},    {{"3.1", P}, ok(1, 0, 4, 0, F)},    {{"3.1", H}, ok(1, 0, 4, 0, D)},
      {{"3.2", R}, ok(3, 2, 0, 0, D)},    {{"3.2", P}, ok(1, 0, 2, 0, D)},    {{"3.2", H}, ok(1, 0, 2, 0, D)},
      {{"4", R}, ok(8, 7, 0, 0, D)},      {{"4", P}, ok(5, 4, 3, 0, D)},      {{"4", H}, ok(5, 4, 3, 0, D)},
      {{"5", R}, ok(3, 2, 0, 0, D)},      {{"5", P}, ok(2, 1, 0, 0, D)},      {{"5", H}, ok(3, 2, 0, 0, D)},
      {{"6", R}, ok(6, 5, 0, 0, D)},      {{"6", P}, ok(5, 4, 1, 0, D)},      {{"6", H}, ok(5, 4, 1, 0, D)},
      {{"7", R}, ok(3, 2, 0, 0, D)},      {{"7", P}, ok(1, 0, 0, 0, D)},      {{"7", H}, ok(3, 2, 0, 0, D)},
      {{"8", R}, ok(2, 1, 0, 1, F)},      {{"8", P}, ok(2, 1, 0, 1, D)},      {{"8", H}, ok(2, 1, 0, 1, D)},
      {{"9", R}, ok(2, 1, 0, 1, F)},      {{"9", P}, lossy(1, 0, 1, 0, F, 1)}, {{"9", H}, ok(2, 1, 0, 1, D)},
      {{"10", R}, ok(3, 1, 1, 1, D)},     {{"10", P}, ok(3, 1, 1, 1, D)},     {{"10", H}, ok(3, 1, 1, 1, D)},
      {{"11.1", R}, ok(2, 1, 0, 1, D)},   {{"11.1", P}, ok(2, 1, 0, 1, D)},   {{"11.1", H}, ok(2, 1, 0, 1, D)},
      {{"11.2", R}, ok(4, 2, 0, 1, D)},   {{"11.2", P}, ok(3, 1, 1, 1, D)},   {{"11.2", H}, ok(3, 1, 1, 1, D)},
      {{"12.1", R}, ok(2, 1, 0, 1, D)},   {{"12.1", P}, ok(2, 1, 0, 1, D)},   {{"12.1", H}, ok(2, 1, 0, 1, D)},
      {{"12.2", R}, ok(2, 1, 0, 1, D)},   {{"12.2", P}, ok(2, 1, 0, 1, D)},   {{"12.2", H}, ok(2, 1, 0, 1, D)},
      {{"13", R}, ok(2, 1, 0, 2, D)},     {{"13", P}, lossy(1, 0, 1, 0, D, 2)}, {{"13", H}, ok(2, 1, 0, 2, D)},
      {{"14.1", R}, ok(3, 2, 0, 0, D)},   {{"14.1", P}, ok(1, 0, 1, 0, F)},   {{"14.1", H}, ok(1, 0, 1, 0, D)},
      {{"14.2", R}, ok(2, 1, 0, 1, D)},   {{"14.2", P}, ok(2, 1, 0, 1, D)},   {{"14.2", H}, ok(2, 1, 0, 1, D)},
      {{"15.1", R}, ok(2, 1, 0, 2, D)},   {{"15.1", P}, ok(2, 1, 0, 2, D)},   {{"15.1", H}, ok(2, 1, 0, 2, D)},
      {{"15.2", R}, ok(2, 1, 0, 1, D)},   {{"15.2", P}, ok(2, 1, 0, 1, D)},   {{"15.2", H}, ok(2, 1, 0, 1, D)},
  };
  return table;
}

std::string expected_table_fingerprint() {
  std::ostringstream text;
  for (const auto& [key, e] : expected_shape_table()) {
    text << key.first << '|' << to_string(key.second) << '|' << e.shape.nodes << '|' << e.shape.edges << '|'
         << e.shape.node_properties << '|' << e.shape.edge_properties << '|' << to_string(e.shape.status) << '|'
         << to_string(e.basis) << '|' << e.loss_reason << '|' << e.partial_units << '\n';
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(text.str())));
  return hex;
}

}  // namespace rdfstar2pg
