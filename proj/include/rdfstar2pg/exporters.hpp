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

// Serializers over canonical_form(). Output is UTF-8 with LF line endings and
// byte-stable for equal graphs.

#ifndef RDFSTAR2PG_EXPORTERS_HPP_
#define RDFSTAR2PG_EXPORTERS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rdfstar2pg/pg_model.hpp"

namespace rdfstar2pg {

enum class ExportFormat { JsonPG, GraphML, CypherScript };

std::optional<ExportFormat> parse_format(std::string_view text);  // json|graphml|cypher

class ExportError : public std::runtime_error {
 public:
  enum class Kind { UnrepresentableValue, UnsanitizableIdentifier, InvalidInput };

  ExportError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// {"nodes":[...],"edges":[...]} on one line plus "\n". Integers and booleans
// are JSON scalars; decimals and dates are strings, and a record lists such
// keys under "types" so from_json can restore them.
std::string to_json(const PropertyGraph& graph);

// Inverse of to_json. Throws ExportError(InvalidInput) on malformed input or
// dangling edge endpoints.
PropertyGraph from_json(std::string_view text);

// Separator for joined list values in GraphML (US-ASCII unit separator).
inline constexpr char kGraphMLListSeparator = '\x1F';

struct GraphMLOptions {
  // false: a list property throws ExportError(UnrepresentableValue).
  bool join_lists = true;
};

std::string to_graphml(const PropertyGraph& graph, const GraphMLOptions& options = {});

// One openCypher CREATE clause per line, nodes first, as a single query so the
// node variables stay bound. Empty graph gives an empty script.
std::string to_cypher(const PropertyGraph& graph);

// Replaces characters outside [A-Za-z0-9_] with '_' and prefixes '_' when the
// result starts with a digit. Throws ExportError(UnsanitizableIdentifier) for
// an empty input.
std::string sanitize_identifier(std::string_view text);

std::string export_graph(const PropertyGraph& graph, ExportFormat format);

}  // namespace rdfstar2pg

#endif  // RDFSTAR2PG_EXPORTERS_HPP_
