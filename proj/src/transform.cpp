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

#include "rdfstar2pg/transform.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace rdfstar2pg {

std::string_view to_string(Approach a) {
  switch (a) {
    case Approach::RPT: return "RPT";
    case Approach::PGT: return "PGT";
    case Approach::Hybrid: return "Hybrid";
  }
  return "?";
}

std::optional<Approach> parse_approach(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "rpt") return Approach::RPT;
  if (lower == "pgt") return Approach::PGT;
  if (lower == "hybrid") return Approach::Hybrid;
  return std::nullopt;
}

TypePolicy TransformConfig::effective_type_policy() const {
  return rdf_type_policy.value_or(approach == Approach::PGT ? TypePolicy::AsLabel : TypePolicy::AsEdge);
}

MultiValuePolicy TransformConfig::node_multi_value_policy() const {
  return multi_value_policy.value_or(MultiValuePolicy::ListMerge);
}

MultiValuePolicy TransformConfig::edge_multi_value_policy() const {
  return multi_value_policy.value_or(MultiValuePolicy::LastWins);
}

std::string identity_key(const Term& term) {
  return std::visit(
      [&term](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Iri>) {
          return "iri:" + v.str();
        } else if constexpr (std::is_same_v<T, BlankNode>) {
          return "bn:_:" + v.label;
        } else if constexpr (std::is_same_v<T, Literal>) {
          return "lit:<" + v.datatype().str() + ">:" + v.language().value_or("") + ":" + v.lexical();
        } else {
          return "qt:" + to_ntriples(term);
        }
      },
      term.value());
}

namespace {

enum Status { kConverted = 0, kPartial = 1, kIgnored = 2, kError = 3 };

// An edge plan is identified by the graph tag it was planned in plus the
// statement it materializes.
using PlanKey = std::pair<std::string, Statement>;

struct Contribution {
  std::variant<Scalar, List, PlanKey> value;
  int unit;
  std::string graph_tag;  // "" for the default graph
};

struct PropPlan {
  std::map<std::string, Contribution> by_source;

  bool has_ref() const {
    return std::any_of(by_source.begin(), by_source.end(),
                       [](const auto& kv) { return std::holds_alternative<PlanKey>(kv.second.value); });
  }
};

struct NodePlan {
  std::set<std::string> labels;
  PropertyMap bookkeeping;
  std::map<std::string, PropPlan> props;
};

struct EdgePlan {
  std::string source;
  std::string target;
  std::set<std::string> labels;
  PropertyMap bookkeeping;
  std::map<std::string, PropPlan> props;
};

struct Unit {
  Statement statement;
  std::optional<Iri> graph;
  int status = kConverted;
  std::string reason;
  std::set<std::string> notes;
};

struct Ctx {
  std::optional<Iri> name;
  std::string key_prefix;
  std::string tag;
  bool edge_graph_prop = false;
};

struct Resolved {
  std::optional<PlanKey> carrier;
  std::string prefix;
};

struct CollapsePlan {
  std::map<Statement, List> heads;
  std::set<Statement> chain;
};

std::string blank_text(const BlankNode& b) { return "_:" + b.label; }

// Value of a non-predicate term when stored as a property.
Scalar term_as_value(const Term& t) {
  if (t.is_literal()) return scalar_from_literal(t.literal());
  if (t.is_iri()) return t.iri().str();
  if (t.is_blank()) return blank_text(t.blank());
  return to_ntriples(t);
}

CollapsePlan find_collapsible(const Graph& graph) {
  CollapsePlan plan;
  const std::string first(vocab::kRdfFirst);
  const std::string rest(vocab::kRdfRest);
  const std::string nil(vocab::kRdfNil);
  std::map<std::string, std::vector<const Statement*>> out;
  std::map<std::string, int> in_count;
  for (const auto& e : graph.entries()) {
    if (e.statement.subject.is_blank()) out[e.statement.subject.blank().label].push_back(&e.statement);
    if (e.statement.object.is_blank()) ++in_count[e.statement.object.blank().label];
  }
  for (const auto& e : graph.entries()) {
    const Statement& head = e.statement;
    if (!head.object.is_blank() || head.predicate.str() == first || head.predicate.str() == rest) continue;
    if (head.subject.is_quoted()) continue;
    std::string cur = head.object.blank().label;
    std::set<std::string> visited;
    std::vector<Scalar> items;
    std::vector<Statement> chain;
    bool ok = true;
    for (;;) {
      if (!visited.insert(cur).second || in_count[cur] != 1) {
        ok = false;
        break;
      }
      const auto& outs = out[cur];
      const Statement* f = nullptr;
      const Statement* r = nullptr;
      for (const Statement* s : outs) {
        if (s->predicate.str() == first && !f) f = s;
        else if (s->predicate.str() == rest && !r) r = s;
        else ok = false;
      }
      if (!ok || !f || !r || !f->object.is_literal()) {
        ok = false;
        break;
      }
      items.push_back(scalar_from_literal(f->object.literal()));
      chain.push_back(*f);
      chain.push_back(*r);
      if (r->object.is_iri() && r->object.iri().str() == nil) break;
      if (!r->object.is_blank()) {
        ok = false;
        break;
      }
      cur = r->object.blank().label;
    }
    if (!ok || items.empty()) continue;
    const ValueKind kind = kind_of(items.front());
    if (!std::all_of(items.begin(), items.end(), [kind](const Scalar& s) { return kind_of(s) == kind; })) continue;
    plan.heads.emplace(head, List{std::move(items)});
    plan.chain.insert(chain.begin(), chain.end());
  }
  return plan;
}

class Engine {
 public:
  explicit Engine(const TransformConfig& cfg) : cfg_(cfg), type_policy_(cfg.effective_type_policy()) {}

  TransformResult run(const Dataset& dataset) {
    run_graph(dataset.default_graph, std::nullopt);
    for (const auto& [name, graph] : dataset.named_graphs) run_graph(graph, name);
    TransformResult result;
    emit(result.graph);
    assemble(result.report);
    return result;
  }

 private:
  bool datatype_as_property() const {
    return cfg_.approach == Approach::PGT ||
           (cfg_.approach == Approach::Hybrid && cfg_.hybrid_datatype_policy == DatatypePolicy::AsProperty);
  }

  void run_graph(const Graph& graph, const std::optional<Iri>& name) {
    Ctx ctx;
    ctx.name = name;
    if (name) {
      switch (cfg_.named_graph_policy) {
        case NamedGraphPolicy::Merge: break;
        case NamedGraphPolicy::Partition:
          ctx.key_prefix = "g:" + name->str() + "|";
          ctx.tag = name->str();
          break;
        case NamedGraphPolicy::EdgeProperty:
          ctx.tag = name->str();
          ctx.edge_graph_prop = true;
          break;
      }
    }
    resolved_.clear();
    collapse_ = {};
    if (cfg_.list_policy == ListPolicy::CollapseLiterals && datatype_as_property()) {
      collapse_ = find_collapsible(graph);
    }
    for (const auto& entry : graph.entries()) {
      const int unit = entry.origin == Origin::Written ? unit_for(ctx, entry.statement) : -1;
      if (is_plain(entry.statement)) {
        plain(ctx, entry.statement, unit);
      } else {
        star(ctx, entry.statement, unit);
      }
    }
  }

  int unit_for(const Ctx& ctx, const Statement& stmt) {
    const std::string g = ctx.name ? ctx.name->str() : std::string();
    auto [it, inserted] = unit_index_.try_emplace({g, stmt}, static_cast<int>(units_.size()));
    if (inserted) {
      units_.push_back(Unit{stmt, ctx.name, kConverted, {}, {}});
      if (ctx.name && cfg_.named_graph_policy == NamedGraphPolicy::Merge) {
        degrade(it->second, kPartial, kReasonGraphDiscarded);
      }
    }
    return it->second;
  }

  void degrade(int unit, int status, std::string_view reason) {
    if (unit < 0) return;
    Unit& u = units_[static_cast<std::size_t>(unit)];
    if (status > u.status) {
      u.status = status;
      u.reason = std::string(reason);
    }
  }

  void note(int unit, std::string text) {
    if (unit >= 0) units_[static_cast<std::size_t>(unit)].notes.insert(std::move(text));
  }

  std::string ensure_node(const Ctx& ctx, const Term& term) {
    std::string key = ctx.key_prefix + identity_key(term);
    auto [it, inserted] = nodes_.try_emplace(key);
    if (inserted) {
      NodePlan& n = it->second;
      if (term.is_iri()) {
        n.labels.insert("Resource");
        n.bookkeeping["iri"] = term.iri().str();
      } else if (term.is_blank()) {
        n.labels.insert("Resource");
        n.bookkeeping["bnode"] = term.blank().label;
      } else if (term.is_literal()) {
        const Literal& lit = term.literal();
        n.labels.insert("Literal");
        n.bookkeeping["value"] = to_property_value(scalar_from_literal(lit));
        n.bookkeeping["datatype"] = lit.datatype().str();
        if (lit.language()) n.bookkeeping["lang"] = *lit.language();
      }
    }
    return key;
  }

  PlanKey edge_plan(const Ctx& ctx, const Statement& stmt) {
    PlanKey key{ctx.tag, stmt};
    if (edges_.contains(key)) return key;
    EdgePlan plan;
    plan.source = ensure_node(ctx, stmt.subject);
    plan.target = ensure_node(ctx, stmt.object);
    plan.labels.insert(local_name(stmt.predicate));
    if (cfg_.approach == Approach::RPT && cfg_.rpt_kind_labels) {
      plan.labels.insert(std::string(stmt.object.is_literal() ? kKindLabelDatatype : kKindLabelObject));
    }
    plan.bookkeeping["iri"] = stmt.predicate.str();
    if (ctx.edge_graph_prop) plan.bookkeeping["graph"] = ctx.name->str();
    edges_.emplace(key, std::move(plan));
    return key;
  }

  void add_node_prop(const std::string& node_key, const std::string& key, std::string source,
                     Contribution c) {
    nodes_[node_key].props[key].by_source.try_emplace(std::move(source), std::move(c));
  }

  void datatype_prop(const Ctx& ctx, const Statement& stmt, int unit) {
    const std::string key = local_name(stmt.predicate);
    const std::string node = ensure_node(ctx, stmt.subject);
    if (is_node_bookkeeping_key(key)) {
      degrade(unit, kError, kReasonReservedKey);
      return;
    }
    add_node_prop(node, key, ctx.tag + "\x1f" + to_ntriples(stmt),
                  Contribution{scalar_from_literal(stmt.object.literal()), unit, ctx.tag});
  }

  void plain(const Ctx& ctx, const Statement& stmt, int unit) {
    if (stmt.predicate.str() == vocab::kRdfType && type_policy_ == TypePolicy::AsLabel && stmt.object.is_iri()) {
      const std::string node = ensure_node(ctx, stmt.subject);
      nodes_[node].labels.insert(local_name(stmt.object.iri()));
      if (ctx.edge_graph_prop) degrade(unit, kPartial, kReasonLabelGraph);
      return;
    }
    if (auto it = collapse_.heads.find(stmt); it != collapse_.heads.end()) {
      const std::string key = local_name(stmt.predicate);
      const std::string node = ensure_node(ctx, stmt.subject);
      if (is_node_bookkeeping_key(key)) {
        degrade(unit, kError, kReasonReservedKey);
        return;
      }
      add_node_prop(node, key, ctx.tag + "\x1f" + to_ntriples(stmt),
                    Contribution{it->second, unit, ctx.tag});
      note(unit, "collection stored as a list property");
      return;
    }
    if (collapse_.chain.contains(stmt)) return;
    if (stmt.object.is_literal() && datatype_as_property()) {
      datatype_prop(ctx, stmt, unit);
      return;
    }
    edge_plan(ctx, stmt);
  }

  // Materializes a plain quoted statement. Returns its edge, or nothing when
  // the statement became a node property.
  std::optional<PlanKey> base(const Ctx& ctx, const Statement& stmt, int unit) {
    if (stmt.object.is_literal() && cfg_.approach == Approach::PGT) {
      datatype_prop(ctx, stmt, unit);
      return std::nullopt;
    }
    return edge_plan(ctx, stmt);
  }

  Resolved resolve(const Ctx& ctx, const Statement& quoted, int unit) {
    if (auto it = resolved_.find(quoted); it != resolved_.end()) return it->second;
    Resolved r;
    if (is_plain(quoted)) {
      r.carrier = base(ctx, quoted, unit);
    } else {
      const int nested = unit_for(ctx, quoted);
      star(ctx, quoted, nested);
      const std::string p = local_name(quoted.predicate);
      if (quoted.subject.is_quoted()) {
        Resolved inner = resolve(ctx, quoted.subject.quoted(), nested);
        r = {inner.carrier, inner.prefix + p + "."};
      } else {
        Resolved inner = resolve(ctx, quoted.object.quoted(), nested);
        r = {inner.carrier, inner.prefix + "inv:" + p + "."};
      }
    }
    resolved_.emplace(quoted, r);
    return r;
  }

  void attach(const Ctx& ctx, const PlanKey& carrier, const std::string& key, std::string source,
              Scalar value, int unit) {
    if (is_edge_bookkeeping_key(key)) {
      degrade(unit, kError, kReasonReservedKey);
      return;
    }
    edges_.at(carrier).props[key].by_source.try_emplace(std::move(source),
                                                          Contribution{std::move(value), unit, ctx.tag});
  }

  void star(const Ctx& ctx, const Statement& stmt, int unit) {
    const std::string p = local_name(stmt.predicate);
    const std::string text = ctx.tag + "\x1f" + to_ntriples(stmt);
    if (stmt.subject.is_quoted()) {
      const Resolved r = resolve(ctx, stmt.subject.quoted(), unit);
      const std::string key = r.prefix + p;
      if (!r.carrier) {
        degrade(unit, kPartial, kReasonPropertyOfProperty);
      } else {
        attach(ctx, *r.carrier, key, text + "|s", term_as_value(stmt.object), unit);
        if (stmt.object.is_iri()) note(unit, "IRI object stored as text in '" + key + "'");
        if (stmt.object.is_blank()) note(unit, "blank node object stored as text in '" + key + "'");
        if (stmt.object.is_quoted()) note(unit, "quoted object stored as text in '" + key + "'");
        if (!r.prefix.empty()) note(unit, "nested statement flattened into key '" + key + "'");
      }
    }
    if (stmt.object.is_quoted()) {
      const Resolved r = resolve(ctx, stmt.object.quoted(), unit);
      const std::string key = r.prefix + "inv:" + p;
      if (!r.carrier) {
        degrade(unit, kPartial, kReasonPropertyOfProperty);
        return;
      }
      attach(ctx, *r.carrier, key, text + "|o", term_as_value(stmt.subject), unit);
      note(unit, "quoted object recorded with inverse key '" + key + "'");
      if (!stmt.subject.is_quoted()) {
        const std::string node = ensure_node(ctx, stmt.subject);
        if (is_node_bookkeeping_key(p)) {
          degrade(unit, kError, kReasonReservedKey);
          return;
        }
        add_node_prop(node, p, text + "|ref", Contribution{*r.carrier, unit, ctx.tag});
      }
    }
  }

  // ---- emission ----

  PropertyValue resolve_value(const PropPlan& plan, MultiValuePolicy policy,
                              const std::map<PlanKey, EdgeId>* edge_ids) {
    std::vector<std::pair<std::string, const Contribution*>> cs;
    for (const auto& [source, c] : plan.by_source) cs.emplace_back(source, &c);
    // by_source is keyed by graph tag plus N-Triples text, so iteration order
    // is already canonical. "Last" therefore means last in that order, never
    // last in the input.
    auto scalars_of = [edge_ids](const Contribution& c) {
      std::vector<Scalar> out;
      if (const auto* s = std::get_if<Scalar>(&c.value)) out.push_back(*s);
      else if (const auto* l = std::get_if<List>(&c.value)) out = l->items;
      else out.push_back(edge_ids->at(std::get<PlanKey>(c.value)));
      return out;
    };
    if (cs.size() == 1) {
      const auto items = scalars_of(*cs.front().second);
      if (std::holds_alternative<List>(cs.front().second->value)) return List{items};
      return to_property_value(items.front());
    }
    if (policy == MultiValuePolicy::LastWins) {
      for (std::size_t i = 0; i + 1 < cs.size(); ++i) degrade(cs[i].second->unit, kPartial, kReasonOverwritten);
      const Contribution& last = *cs.back().second;
      const auto items = scalars_of(last);
      if (std::holds_alternative<List>(last.value)) return List{items};
      return to_property_value(items.front());
    }
    std::vector<Scalar> items;
    std::set<ValueKind> kinds;
    for (const auto& [source, c] : cs) {
      for (auto& s : scalars_of(*c)) {
        kinds.insert(kind_of(s));
        items.push_back(std::move(s));
      }
    }
    if (kinds.size() > 1) {
      const bool numeric = kinds == std::set<ValueKind>{ValueKind::Integer, ValueKind::Decimal};
      for (auto& s : items) {
        if (numeric) {
          if (const auto* i = std::get_if<std::int64_t>(&s)) s = Decimal::from_integer(*i);
        } else {
          s = display(s);
        }
      }
      if (!numeric) {
        for (const auto& [source, c] : cs) degrade(c->unit, kPartial, kReasonCoerced);
      }
    }
    std::sort(items.begin(), items.end());
    return List{std::move(items)};
  }

  void add_companion(PropertyMap& props, const std::string& key, const PropPlan& plan) {
    if (cfg_.named_graph_policy != NamedGraphPolicy::EdgeProperty) return;
    std::set<std::string> tags;
    for (const auto& [source, c] : plan.by_source) tags.insert(c.graph_tag);
    if (tags.size() == 1) {
      if (!tags.begin()->empty()) props[key + ".graph"] = *tags.begin();
      return;
    }
    for (const auto& [source, c] : plan.by_source) degrade(c.unit, kPartial, kReasonMultiGraph);
  }

  void emit(PropertyGraph& pg) {
    const MultiValuePolicy node_policy = cfg_.node_multi_value_policy();
    const MultiValuePolicy edge_policy = cfg_.edge_multi_value_policy();
    for (const auto& [key, plan] : nodes_) {
      PropertyMap props = plan.bookkeeping;
      for (const auto& [k, pp] : plan.props) {
        if (pp.has_ref()) continue;
        props[k] = resolve_value(pp, node_policy, nullptr);
        add_companion(props, k, pp);
      }
      upsert_node(pg, key, plan.labels, props);
    }
    std::map<PlanKey, EdgeId> edge_ids;
    for (const auto& [pk, plan] : edges_) {
      PropertyMap props = plan.bookkeeping;
      for (const auto& [k, pp] : plan.props) props[k] = resolve_value(pp, edge_policy, nullptr);
      edge_ids.emplace(pk, add_edge(pg, node_id_for(plan.source), node_id_for(plan.target), plan.labels, props));
    }
    for (const auto& [key, plan] : nodes_) {
      Node& node = pg.nodes.at(node_id_for(key));
      for (const auto& [k, pp] : plan.props) {
        if (!pp.has_ref()) continue;
        node.properties[k] = resolve_value(pp, node_policy, &edge_ids);
        add_companion(node.properties, k, pp);
      }
    }
  }

  void assemble(TransformReport& report) {
    report.total_statements = units_.size();
    for (const Unit& u : units_) {
      switch (u.status) {
        case kConverted: ++report.converted; break;
        case kPartial: report.partial.push_back({u.statement, u.graph, u.reason}); break;
        case kIgnored: report.ignored.push_back({u.statement, u.graph, u.reason}); break;
        default: report.errors.push_back({u.statement, u.graph, u.reason}); break;
      }
      for (const auto& n : u.notes) report.notes.push_back({u.statement, u.graph, n});
    }
  }

  const TransformConfig& cfg_;
  const TypePolicy type_policy_;
  std::map<std::string, NodePlan> nodes_;
  std::map<PlanKey, EdgePlan> edges_;
  std::vector<Unit> units_;
  std::map<std::pair<std::string, Statement>, int> unit_index_;
  std::map<Statement, Resolved> resolved_;
  CollapsePlan collapse_;
};

}  // namespace

TransformResult transform(const Dataset& dataset, const TransformConfig& cfg) {
  return Engine(cfg).run(dataset);
}

TransformResult rpt(const Dataset& dataset, TransformConfig cfg) {
  cfg.approach = Approach::RPT;
  return transform(dataset, cfg);
}

TransformResult pgt(const Dataset& dataset, TransformConfig cfg) {
  cfg.approach = Approach::PGT;
  return transform(dataset, cfg);
}

TransformResult hybrid(const Dataset& dataset, TransformConfig cfg) {
  cfg.approach = Approach::Hybrid;
  return transform(dataset, cfg);
}

}  // namespace rdfstar2pg
