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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <tuple>

namespace rdfstar2pg {

namespace {

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Splits a canonical decimal into (negative, integer digits, fraction digits).
std::tuple<bool, std::string_view, std::string_view> split(const Decimal& d) {
  std::string_view s = d.lexical;
  const bool neg = !s.empty() && s.front() == '-';
  if (neg) s.remove_prefix(1);
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return {neg, s, {}};
  return {neg, s.substr(0, dot), s.substr(dot + 1)};
}

std::strong_ordering compare_magnitude(const Decimal& a, const Decimal& b) {
  auto [na, ia, fa] = split(a);
  auto [nb, ib, fb] = split(b);
  if (ia.size() != ib.size()) return ia.size() <=> ib.size();
  if (auto c = ia.compare(ib); c != 0) return c <=> 0;
  const std::size_t n = std::max(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const char ca = i < fa.size() ? fa[i] : '0';
    const char cb = i < fb.size() ? fb[i] : '0';
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

bool is_leap(long year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_neg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_neg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (exp.empty() || !all_digits(exp) || exp.size() > 4) return std::nullopt;
    exponent = std::stol(std::string(exp));
    if (exp_neg) exponent = -exponent;
    if (exponent > 400 || exponent < -400) return std::nullopt;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!all_digits(int_part) || !all_digits(frac_part)) return std::nullopt;

  std::string digits = std::string(int_part) + std::string(frac_part);
  long point = static_cast<long>(int_part.size()) + exponent;
  if (point < 0) {
    digits.insert(0, static_cast<std::size_t>(-point), '0');
    point = 0;
  }
  if (point > static_cast<long>(digits.size())) digits.append(static_cast<std::size_t>(point) - digits.size(), '0');
  std::string ip = digits.substr(0, static_cast<std::size_t>(point));
  std::string fp = digits.substr(static_cast<std::size_t>(point));
  ip.erase(0, std::min(ip.find_first_not_of('0'), ip.size()));
  if (ip.empty()) ip = "0";
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  Decimal d;
  d.scale = static_cast<int>(fp.size());
  d.lexical = ip;
  if (!fp.empty()) d.lexical += "." + fp;
  if (neg && d.lexical != "0") d.lexical.insert(0, "-");
  return d;
}

Decimal Decimal::from_integer(std::int64_t value) { return Decimal{std::to_string(value), 0}; }

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  const bool na = !a.lexical.empty() && a.lexical.front() == '-';
  const bool nb = !b.lexical.empty() && b.lexical.front() == '-';
  if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto mag = compare_magnitude(a, b);
  if (!na) return mag;
  return 0 <=> mag;
}

std::optional<Date> Date::parse(std::string_view text) {
  std::string_view s = text;
  std::size_t i = 0;
  if (!s.empty() && s.front() == '-') ++i;
  const std::size_t year_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  const std::size_t year_len = i - year_start;
  if (year_len < 4 || (year_len > 4 && s[year_start] == '0')) return std::nullopt;
  if (s.size() < i + 6 || s[i] != '-' || s[i + 3] != '-') return std::nullopt;
  const std::string_view mm = s.substr(i + 1, 2);
  const std::string_view dd = s.substr(i + 4, 2);
  if (!all_digits(mm) || !all_digits(dd)) return std::nullopt;
  const long year = year_len > 9 ? 0 : std::stol(std::string(s.substr(year_start, year_len)));
  const int month = std::stoi(std::string(mm));
  const int day = std::stoi(std::string(dd));
  static constexpr int kDays[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12 || day < 1 || day > kDays[month - 1]) return std::nullopt;
  if (month == 2 && day == 29 && !is_leap(year)) return std::nullopt;
  std::string_view tz = s.substr(i + 6);
  if (!tz.empty() && tz != "Z") {
    if (tz.size() != 6 || (tz[0] != '+' && tz[0] != '-') || tz[3] != ':' ||
        !all_digits(tz.substr(1, 2)) || !all_digits(tz.substr(4, 2))) {
      return std::nullopt;
    }
    const int hh = std::stoi(std::string(tz.substr(1, 2)));
    const int mi = std::stoi(std::string(tz.substr(4, 2)));
    if (hh > 14 || mi > 59 || (hh == 14 && mi != 0)) return std::nullopt;
  }
  return Date{std::string(text)};
}

ValueKind kind_of(const Scalar& v) {
  return static_cast<ValueKind>(v.index());
}

ValueKind kind_of(const PropertyValue& v) {
  return static_cast<ValueKind>(v.index());
}

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::String: return "string";
    case ValueKind::Integer: return "integer";
    case ValueKind::Decimal: return "decimal";
    case ValueKind::Boolean: return "boolean";
    case ValueKind::Date: return "date";
    case ValueKind::List: return "list";
  }
  return "?";
}

PropertyValue to_property_value(const Scalar& v) {
  return std::visit([](const auto& x) -> PropertyValue { return x; }, v);
}

Scalar scalar_from_literal(const Literal& literal) {
  const std::string& lex = literal.lexical();
  const std::string& dt = literal.datatype().str();
  if (dt == vocab::kXsdInteger) {
    std::string_view s = lex;
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (!digits.empty() && all_digits(digits)) {
      if (s.front() == '+') s.remove_prefix(1);
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec == std::errc() && ptr == s.data() + s.size()) return value;
      if (auto d = Decimal::parse(lex)) return *d;
    }
    return lex;
  }
  if (dt == vocab::kXsdDecimal) {
    if (lex.find_first_of("eE") == std::string::npos) {
      if (auto d = Decimal::parse(lex)) return *d;
    }
    return lex;
  }
  if (dt == vocab::kXsdDouble) {
    if (auto d = Decimal::parse(lex)) return *d;
    return lex;
  }
  if (dt == vocab::kXsdBoolean) {
    if (lex == "true" || lex == "1") return true;
    if (lex == "false" || lex == "0") return false;
    return lex;
  }
  if (dt == vocab::kXsdDate) {
    if (auto d = Date::parse(lex)) return *d;
    return lex;
  }
  return lex;
}

std::string display(const Scalar& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) return x;
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, Decimal>) return x.lexical;
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else return x.iso;
      },
      v);
}

std::string display(const PropertyValue& v, std::string_view list_separator) {
  if (const auto* list = std::get_if<List>(&v)) {
    std::string out;
    for (std::size_t i = 0; i < list->items.size(); ++i) {
      if (i) out += list_separator;
      out += display(list->items[i]);
    }
    return out;
  }
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, List>) return {};
        else return display(Scalar(x));
      },
      v);
}

namespace {

void encode_scalar(std::string& out, const Scalar& v) {
  static constexpr char kTags[] = {'s', 'i', 'd', 'b', 't'};
  const std::string text = display(v);
  out += kTags[v.index()];
  out += std::to_string(text.size());
  out += ':';
  out += text;
}

}  // namespace

std::string encode(const PropertyValue& v) {
  std::string out;
  if (const auto* list = std::get_if<List>(&v)) {
    out += "l" + std::to_string(list->items.size()) + "[";
    for (const auto& item : list->items) encode_scalar(out, item);
    out += "]";
    return out;
  }
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (!std::is_same_v<T, List>) encode_scalar(out, Scalar(x));
      },
      v);
  return out;
}

NodeId node_id_for(std::string_view identity_key) { return "n:" + std::string(identity_key); }

NodeId upsert_node(PropertyGraph& graph, std::string_view identity_key,
                   const std::set<std::string>& labels, const PropertyMap& properties) {
  if (identity_key.empty()) throw GraphError(GraphError::Kind::InvalidKey, "empty node identity key");
  NodeId id = node_id_for(identity_key);
  auto it = graph.nodes.find(id);
  if (it == graph.nodes.end()) {
    graph.nodes.emplace(id, Node{id, labels, properties});
    return id;
  }
  Node& node = it->second;
  for (const auto& [key, value] : properties) {
    auto existing = node.properties.find(key);
    if (existing != node.properties.end() && existing->second != value) {
      throw GraphError(GraphError::Kind::PropertyConflict,
                       "node " + id + ": property '" + key + "' already holds a different value");
    }
  }
  node.labels.insert(labels.begin(), labels.end());
  for (const auto& [key, value] : properties) node.properties.emplace(key, value);
  return id;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

EdgeId add_edge(PropertyGraph& graph, const NodeId& source, const NodeId& target,
                const std::set<std::string>& labels, const PropertyMap& properties) {
  if (!graph.nodes.contains(source)) throw GraphError(GraphError::Kind::DanglingEndpoint, "no node " + source);
  if (!graph.nodes.contains(target)) throw GraphError(GraphError::Kind::DanglingEndpoint, "no node " + target);
  if (labels.empty()) throw GraphError(GraphError::Kind::InvalidEdge, "edge without labels");

  std::string content;
  auto field = [&content](std::string_view s) {
    content += std::to_string(s.size());
    content += ':';
    content += s;
  };
  field(source);
  for (const auto& l : labels) field(l);
  content += '|';
  field(target);
  for (const auto& [k, v] : properties) {
    field(k);
    field(encode(v));
  }
  for (std::uint64_t occurrence = 0;; ++occurrence) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(content + "#" + std::to_string(occurrence))));
    EdgeId id = "e:" + std::string(hex);
    auto it = graph.edges.find(id);
    if (it == graph.edges.end()) {
      graph.edges.emplace(id, Edge{id, source, target, labels, properties});
      return id;
    }
    const Edge& e = it->second;
    if (e.source == source && e.target == target && e.labels == labels && e.properties == properties) return id;
  }
}

CanonicalForm canonical_form(const PropertyGraph& graph) {
  CanonicalForm form;
  form.nodes.reserve(graph.nodes.size());
  for (const auto& [id, node] : graph.nodes) form.nodes.push_back(node);
  form.edges.reserve(graph.edges.size());
  for (const auto& [id, edge] : graph.edges) form.edges.push_back(edge);
  std::sort(form.edges.begin(), form.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.labels, a.target, a.id) < std::tie(b.source, b.labels, b.target, b.id);
  });
  return form;
}

bool is_node_bookkeeping_key(std::string_view key) {
  static constexpr std::string_view kSuffix = ".graph";
  if (key.size() > kSuffix.size() && key.substr(key.size() - kSuffix.size()) == kSuffix) return true;
  return key == "iri" || key == "bnode" || key == "value" || key == "datatype" || key == "lang";
}

bool is_edge_bookkeeping_key(std::string_view key) { return key == "iri" || key == "graph"; }

std::size_t count_node_properties(const PropertyGraph& graph) {
  std::size_t n = 0;
  for (const auto& [id, node] : graph.nodes) {
    for (const auto& [key, value] : node.properties) n += is_node_bookkeeping_key(key) ? 0 : 1;
  }
  return n;
}

std::size_t count_edge_properties(const PropertyGraph& graph) {
  std::size_t n = 0;
  for (const auto& [id, edge] : graph.edges) {
    for (const auto& [key, value] : edge.properties) n += is_edge_bookkeeping_key(key) ? 0 : 1;
  }
  return n;
}

}  // namespace rdfstar2pg
