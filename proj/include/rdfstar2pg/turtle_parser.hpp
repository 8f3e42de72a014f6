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

// Recursive-descent reader for the Turtle-star subset used by the bundled
// corpus, plus TriG-style `name { ... }` graph blocks.
//
// Supported: @prefix / PREFIX, prefixed names, absolute <IRI>s, string
// literals (short and long forms) with @lang or ^^datatype, integer / decimal /
// double / boolean shorthand, `;` and `,` lists, `a`, `_:label`, `[]` and
// `[ p o ]`, collections, `<< s p o >>` at any depth, and graph blocks.
// Rejected with UnsupportedConstruct: @base / BASE and `{| ... |}` annotations.

#ifndef RDFSTAR2PG_TURTLE_PARSER_HPP_
#define RDFSTAR2PG_TURTLE_PARSER_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rdfstar2pg/rdf_model.hpp"

namespace rdfstar2pg {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Syntax, UndefinedPrefix, RelativeIri, UnsupportedConstruct };

  ParseError(Kind kind, std::size_t line, std::size_t column, std::string message);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

std::string_view to_string(ParseError::Kind kind);

// Prefix label (possibly empty) to namespace IRI. Later declarations replace
// earlier ones.
using PrefixEnv = std::map<std::string, std::string, std::less<>>;

// Expands "prefix:local". Throws ParseError(UndefinedPrefix) for an unknown
// prefix and ParseError(Syntax) when `name` has no ':'.
Iri expand_prefixed_name(const PrefixEnv& env, std::string_view name);

// Hands out canonical blank-node labels b0, b1, ... in order of first use.
class BlankNodeAllocator {
 public:
  // Same original label yields the same node within one document.
  BlankNode named(std::string_view original);
  BlankNode fresh();

 private:
  std::map<std::string, std::string, std::less<>> by_original_;
  std::size_t next_ = 0;
};

// Emits the rdf:first / rdf:rest chain for `elements` into `graph` (marked
// Origin::Collection) and returns the head term, rdf:nil for an empty list.
Term expand_collection(std::span<const Term> elements, BlankNodeAllocator& blanks, Graph& graph);

struct ParseOptions {
  // Prefixes visible before the first declaration in the document.
  PrefixEnv initial_prefixes;
};

Dataset parse_turtle_star(std::string_view input, const ParseOptions& options = {});

// Writes a Dataset back as Turtle-star with full IRIs: default-graph
// statements first, then one `<name> { ... }` block per named graph.
std::string write_turtle_star(const Dataset& dataset);

}  // namespace rdfstar2pg

#endif  // RDFSTAR2PG_TURTLE_PARSER_HPP_
