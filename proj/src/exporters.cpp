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

#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rdfstar2pg {

using ojson = nlohmann::ordered_json;

std::optional<ExportFormat> parse_format(std::string_view text) {
  if (text == "json") return ExportFormat::JsonPG;
  if (text == "graphml") return ExportFormat::GraphML;
  if (text == "cypher") return ExportFormat::CypherScript;
  return std::nullopt;
}

// ---- JSON ----

namespace {

ojson scalar_json(const Scalar& v) {
  return std::visit(
      [](const auto& x) -> ojson {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) return x;
        else if constexpr (std::is_same_v<T, std::int64_t>) return x;
        else if constexpr (std::is_same_v<T, Decimal>) return x.lexical;
        else if constexpr (std::is_same_v<T, bool>) return x;
        else return x.iso;
      },
      v);
}

// Type tag needed to restore a value, or empty when JSON carries it.
std::string type_tag(const PropertyValue& v) {
  ValueKind kind = kind_of(v);
  std::string prefix;
  if (const auto* list = std::get_if<List>(&v)) {
    if (list->items.empty()) return {};
    kind = kind_of(list->items.front());
    prefix = "list:";
  }
  if (kind == ValueKind::Decimal || kind == ValueKind::Date) return prefix + std::string(to_string(kind));
  return {};
}

void write_properties(ojson& record, const PropertyMap& props) {
  ojson properties = ojson::object();
  ojson types = ojson::object();
  for (const auto& [key, value] : props) {
    if (const auto* list = std::get_if<List>(&value)) {
      ojson arr = ojson::array();
      for (const auto& item : list->items) arr.push_back(scalar_json(item));
      properties[key] = std::move(arr);
    } else {
      properties[key] = std::visit(
          [](const auto& x) -> ojson {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, List>) return nullptr;
            else return scalar_json(Scalar(x));
          },
          value);
    }
    if (auto tag = type_tag(value); !tag.empty()) types[key] = tag;
  }
  record["properties"] = std::move(properties);
  if (!types.empty()) record["types"] = std::move(types);
}

[[noreturn]] void bad_input(const std::string& message) {
  throw ExportError(ExportError::Kind::InvalidInput, message);
}

Scalar scalar_from_json(const nlohmann::json& j, std::string_view kind) {
  if (kind == "decimal") {
    if (!j.is_string()) bad_input("decimal value must be a string");
    auto d = Decimal::parse(j.get<std::string>());
    if (!d) bad_input("malformed decimal '" + j.get<std::string>() + "'");
    return *d;
  }
  if (kind == "date") {
    if (!j.is_string()) bad_input("date value must be a string");
    auto d = Date::parse(j.get<std::string>());
    if (!d) bad_input("malformed date '" + j.get<std::string>() + "'");
    return *d;
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      bad_input("integer out of range");
    }
    return j.get<std::int64_t>();
  }
  bad_input("unsupported property value " + j.dump());
}

PropertyMap read_properties(const nlohmann::json& record) {
  PropertyMap props;
  if (!record.contains("properties")) return props;
  const auto& properties = record.at("properties");
  if (!properties.is_object()) bad_input("properties must be an object");
  nlohmann::json types = record.contains("types") ? record.at("types") : nlohmann::json::object();
  for (const auto& [key, value] : properties.items()) {
    std::string tag = types.contains(key) ? types.at(key).get<std::string>() : std::string();
    if (value.is_array()) {
      const std::string elem = tag.rfind("list:", 0) == 0 ? tag.substr(5) : std::string();
      List list;
      for (const auto& item : value) list.items.push_back(scalar_from_json(item, elem));
      props[key] = std::move(list);
    } else {
      props[key] = to_property_value(scalar_from_json(value, tag));
    }
  }
  return props;
}

std::set<std::string> read_labels(const nlohmann::json& record) {
  std::set<std::string> labels;
  for (const auto& l : record.at("labels")) labels.insert(l.get<std::string>());
  return labels;
}

}  // namespace

std::string to_json(const PropertyGraph& graph) {
  const CanonicalForm form = canonical_form(graph);
  ojson doc;
  doc["nodes"] = ojson::array();
  doc["edges"] = ojson::array();
  for (const Node& n : form.nodes) {
    ojson rec;
    rec["id"] = n.id;
    rec["labels"] = n.labels;
    write_properties(rec, n.properties);
    doc["nodes"].push_back(std::move(rec));
  }
  for (const Edge& e : form.edges) {
    ojson rec;
    rec["id"] = e.id;
    rec["source"] = e.source;
    rec["target"] = e.target;
    rec["labels"] = e.labels;
    write_properties(rec, e.properties);
    doc["edges"].push_back(std::move(rec));
  }
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

PropertyGraph from_json(std::string_view text) {
  PropertyGraph graph;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& rec : doc.at("nodes")) {
      Node n{rec.at("id").get<std::string>(), read_labels(rec), read_properties(rec)};
      if (!graph.nodes.emplace(n.id, n).second) bad_input("duplicate node id " + n.id);
    }
    for (const auto& rec : doc.at("edges")) {
      Edge e{rec.at("id").get<std::string>(), rec.at("source").get<std::string>(),
             rec.at("target").get<std::string>(), read_labels(rec), read_properties(rec)};
      if (!graph.nodes.contains(e.source) || !graph.nodes.contains(e.target)) {
        bad_input("edge " + e.id + " has a dangling endpoint");
      }
      if (!graph.edges.emplace(e.id, e).second) bad_input("duplicate edge id " + e.id);
    }
  } catch (const nlohmann::json::exception& ex) {
    bad_input(std::string("malformed graph JSON: ") + ex.what());
  }
  return graph;
}

// ---- GraphML ----

namespace {

void xml_escape(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 && c != '\n' && c != '\t') {
          char buf[8];
          std::snprintf(buf, sizeof buf, "&#x%X;", static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

struct KeyInfo {
  std::string id;
  std::set<ValueKind> kinds;
};

std::string graphml_type(const std::set<ValueKind>& kinds) {
  if (kinds == std::set<ValueKind>{ValueKind::Integer}) return "long";
  if (kinds == std::set<ValueKind>{ValueKind::Boolean}) return "boolean";
  return "string";
}

}  // namespace

std::string to_graphml(const PropertyGraph& graph, const GraphMLOptions& options) {
  const CanonicalForm form = canonical_form(graph);
  // (domain, name) -> key; "labels" is reserved for the label set.
  std::map<std::pair<std::string, std::string>, KeyInfo> keys;
  keys[{"node", "labels"}].kinds.insert(ValueKind::String);
  keys[{"edge", "labels"}].kinds.insert(ValueKind::String);
  auto collect = [&](const char* domain, const PropertyMap& props) {
    for (const auto& [k, v] : props) {
      if (k == "labels") {
        throw ExportError(ExportError::Kind::UnrepresentableValue,
                          "property key 'labels' clashes with the GraphML label key");
      }
      if (std::holds_alternative<List>(v) && !options.join_lists) {
        throw ExportError(ExportError::Kind::UnrepresentableValue, "list property '" + k + "' in GraphML");
      }
      keys[{domain, k}].kinds.insert(kind_of(v));
    }
  };
  for (const Node& n : form.nodes) collect("node", n.properties);
  for (const Edge& e : form.edges) collect("edge", e.properties);
  std::size_t next = 0;
  for (auto& [dk, info] : keys) info.id = "k" + std::to_string(next++);

  std::string out;
  out += "<?xml version=\"1.1\" encoding=\"UTF-8\"?>\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  for (const auto& [dk, info] : keys) {
    out += "  <key id=\"" + info.id + "\" for=\"" + dk.first + "\" attr.name=\"";
    xml_escape(out, dk.second);
    out += "\" attr.type=\"" + graphml_type(info.kinds) + "\"";
    if (info.kinds.contains(ValueKind::List)) {
      out += "><desc>list joined with U+001F</desc></key>\n";
    } else {
      out += "/>\n";
    }
  }
  out += "  <graph id=\"G\" edgedefault=\"directed\">\n";
  auto write_data = [&](const char* domain, const std::set<std::string>& labels, const PropertyMap& props) {
    std::string joined;
    for (const auto& l : labels) joined += (joined.empty() ? "" : ";") + l;
    out += "      <data key=\"" + keys.at({domain, "labels"}).id + "\">";
    xml_escape(out, joined);
    out += "</data>\n";
    for (const auto& [k, v] : props) {
      out += "      <data key=\"" + keys.at({domain, k}).id + "\">";
      xml_escape(out, display(v, std::string_view(&kGraphMLListSeparator, 1)));
      out += "</data>\n";
    }
  };
  for (const Node& n : form.nodes) {
    out += "    <node id=\"";
    xml_escape(out, n.id);
    out += "\">\n";
    write_data("node", n.labels, n.properties);
    out += "    </node>\n";
  }
  for (const Edge& e : form.edges) {
    out += "    <edge id=\"";
    xml_escape(out, e.id);
    out += "\" source=\"";
    xml_escape(out, e.source);
    out += "\" target=\"";
    xml_escape(out, e.target);
    out += "\">\n";
    write_data("edge", e.labels, e.properties);
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

// ---- Cypher ----

std::string sanitize_identifier(std::string_view text) {
  if (text.empty()) throw ExportError(ExportError::Kind::UnsanitizableIdentifier, "empty identifier");
  std::string out;
  for (char c : text) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    out += ok ? c : '_';
  }
  if (out.front() >= '0' && out.front() <= '9') out.insert(0, "_");
  return out;
}

namespace {

std::string cypher_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string cypher_scalar(const Scalar& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) return cypher_string(x);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, Decimal>) return x.scale == 0 ? x.lexical + ".0" : x.lexical;
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else return cypher_string(x.iso);
      },
      v);
}

std::string cypher_value(const PropertyValue& v) {
  if (const auto* list = std::get_if<List>(&v)) {
    std::string out = "[";
    for (std::size_t i = 0; i < list->items.size(); ++i) {
      if (i) out += ", ";
      out += cypher_scalar(list->items[i]);
    }
    return out + "]";
  }
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, List>) return {};
        else return cypher_scalar(Scalar(x));
      },
      v);
}

// Renders {k: v, ...}; `fixed` entries come first and must not collide with
// sanitized property keys.
std::string cypher_map(const std::vector<std::pair<std::string, std::string>>& fixed, const PropertyMap& props,
                       const std::string& owner) {
  std::set<std::string> used;
  std::string out = " {";
  bool first = true;
  auto add = [&](const std::string& key, const std::string& value) {
    if (!used.insert(key).second) {
      throw ExportError(ExportError::Kind::UnsanitizableIdentifier,
                        "property key '" + key + "' on " + owner + " collides after sanitization");
    }
    if (!first) out += ", ";
    first = false;
    out += key + ":" + value;
  };
  for (const auto& [k, v] : fixed) add(k, v);
  for (const auto& [k, v] : props) add(sanitize_identifier(k), cypher_value(v));
  return out + "}";
}

bool is_kind_label(std::string_view label) {
  return label == "ObjectProperty" || label == "DatatypeProperty";
}

}  // namespace

std::string to_cypher(const PropertyGraph& graph) {
  const CanonicalForm form = canonical_form(graph);
  std::map<NodeId, std::string> vars;
  std::ostringstream out;
  for (const Node& n : form.nodes) {
    const std::string var = "n" + std::to_string(vars.size());
    vars.emplace(n.id, var);
    out << "CREATE (" << var;
    for (const auto& l : n.labels) out << ':' << sanitize_identifier(l);
    out << cypher_map({{"id", cypher_string(n.id)}}, n.properties, n.id) << ")\n";
  }
  for (const Edge& e : form.edges) {
    std::string type;
    for (const auto& l : e.labels) {
      if (!is_kind_label(l)) {
        type = l;
        break;
      }
    }
    if (type.empty()) type = *e.labels.begin();
    std::string labels = "[";
    for (const auto& l : e.labels) labels += (labels.size() > 1 ? ", " : "") + cypher_string(l);
    labels += "]";
    out << "CREATE (" << vars.at(e.source) << ")-[:" << sanitize_identifier(type)
        << cypher_map({{"id", cypher_string(e.id)}, {"labels", labels}}, e.properties, e.id) << "]->("
        << vars.at(e.target) << ")\n";
  }
  return out.str();
}

std::string export_graph(const PropertyGraph& graph, ExportFormat format) {
  switch (format) {
    case ExportFormat::JsonPG: return to_json(graph);
    case ExportFormat::GraphML: return to_graphml(graph);
    case ExportFormat::CypherScript: return to_cypher(graph);
  }
  return {};
}

}  // namespace rdfstar2pg
