// SPDX-License-Identifier: Apache-2.0
#include "scap/links.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scap::links {

LinkGraph::LinkGraph(double tau) : tau_(tau) {
  if (!std::isfinite(tau) || tau < 0.0) throw ValidationError("tau", "negative or non-finite");
}

void LinkGraph::upsert(const LinkState& link) {
  LinkState checked = validate_link(link);
  Slot& slot = by_subtask_[checked.subtask_id][{checked.source, checked.target}];
  if (checked.kind == LinkKind::Explicit) {
    slot.explicit_link = std::move(checked);
  } else {
    slot.implicit_link = std::move(checked);
  }
}

std::optional<LinkState> LinkGraph::find(const std::string& subtask, const std::string& source,
                                         const std::string& target, LinkKind kind) const {
  auto st = by_subtask_.find(subtask);
  if (st == by_subtask_.end()) return std::nullopt;
  auto it = st->second.find({source, target});
  if (it == st->second.end()) return std::nullopt;
  return kind == LinkKind::Explicit ? it->second.explicit_link : it->second.implicit_link;
}

std::vector<std::string> LinkGraph::subtasks() const {
  std::vector<std::string> out;
  out.reserve(by_subtask_.size());
  for (const auto& [subtask, _] : by_subtask_) out.push_back(subtask);
  return out;
}

std::vector<LinkState> LinkGraph::links(const std::string& subtask, LinkKind kind) const {
  std::vector<LinkState> out;
  auto st = by_subtask_.find(subtask);
  if (st == by_subtask_.end()) return out;
  for (const auto& [pair, slot] : st->second) {
    const auto& held = kind == LinkKind::Explicit ? slot.explicit_link : slot.implicit_link;
    if (held) out.push_back(*held);
  }
  return out;
}

std::vector<LinkState> LinkGraph::all_links() const {
  std::vector<LinkState> out;
  for (const auto& [subtask, pairs] : by_subtask_) {
    for (const auto& [pair, slot] : pairs) {
      if (slot.explicit_link) out.push_back(*slot.explicit_link);
      if (slot.implicit_link) out.push_back(*slot.implicit_link);
    }
  }
  return out;
}

std::vector<std::string> LinkGraph::agents(const std::string& subtask) const {
  std::set<std::string> seen;
  auto st = by_subtask_.find(subtask);
  if (st != by_subtask_.end()) {
    for (const auto& [pair, slot] : st->second) {
      seen.insert(pair.first);
      seen.insert(pair.second);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<LinkState> LinkGraph::promote_all() {
  std::vector<LinkState> promoted;
  for (auto& [subtask, pairs] : by_subtask_) {
    for (auto& [pair, slot] : pairs) {
      if (!slot.implicit_link) continue;
      LinkState candidate = promote(*slot.implicit_link, tau_);
      if (candidate.kind == LinkKind::Implicit) continue;
      if (slot.explicit_link) continue;  // explicit slot already taken
      slot.explicit_link = candidate;
      slot.implicit_link.reset();
      promoted.push_back(std::move(candidate));
    }
  }
  return promoted;
}

LinkState accumulate_explicit(const LinkState& link, std::span<const InteractionEvent> events,
                              const Interval& interval) {
  if (link.kind != LinkKind::Explicit)
    throw ValidationError("kind", "accumulation requires an explicit link");
  double sum = 0.0;
  for (const auto& event : events) {
    if (!interval.contains(event.timestamp))
      throw ValidationError("timestamp", "event outside interval");
    if (event.subtask_id != link.subtask_id)
      throw ValidationError("subtask_id", "subtask mismatch");
    if (event.agent_id != link.source)
      throw ValidationError("agent_id", "event not authored by link source");
    sum += event.interaction_value();
  }
  LinkState out = link;
  out.value += sum;
  return out;
}

std::optional<LinkState> triadic_implicit(const LinkState& l_ab, const LinkState& l_bc,
                                          double r_ab, double r_bc) {
  if (l_ab.kind != LinkKind::Explicit || l_bc.kind != LinkKind::Explicit)
    throw ValidationError("kind", "closure requires explicit links");
  if (l_ab.target != l_bc.source)
    throw ValidationError("target", "links do not share a middle agent");
  if (l_ab.subtask_id != l_bc.subtask_id) throw ValidationError("subtask_id", "subtask mismatch");
  if (l_ab.source == l_bc.target) throw ValidationError("target", "triad endpoints coincide");

  const double denom_root = std::abs(r_ab + r_bc);
  if (denom_root == 0.0) return std::nullopt;  // degenerate relation sum
  return LinkState{l_ab.source, l_bc.target, l_ab.subtask_id,
                   (l_ab.value + l_bc.value) / (denom_root * denom_root), LinkKind::Implicit};
}

std::optional<LinkState> path_implicit(std::span<const LinkState> path_links,
                                       std::span<const double> path_relations) {
  if (path_links.empty()) throw ValidationError("path_links", "empty path");
  if (path_links.size() != path_relations.size())
    throw ValidationError("path_relations", "one relation per path link required");

  std::set<std::pair<std::string, std::string>> seen;
  double link_sum = 0.0;
  double relation_sum = 0.0;
  for (std::size_t i = 0; i < path_links.size(); ++i) {
    const LinkState& l = path_links[i];
    if (l.kind != LinkKind::Explicit)
      throw ValidationError("kind", "closure requires explicit links");
    if (l.subtask_id != path_links.front().subtask_id)
      throw ValidationError("subtask_id", "subtask mismatch");
    if (i > 0 && path_links[i - 1].target != l.source)
      throw ValidationError("path_links", "disconnected path");
    if (!seen.insert({l.source, l.target}).second)
      throw ValidationError("path_links", "repeated link in path");
    link_sum += l.value;
    relation_sum += path_relations[i];
  }
  const std::string& source = path_links.front().source;
  const std::string& target = path_links.back().target;
  if (source == target) throw ValidationError("target", "path endpoints coincide");

  const double denom_root = std::abs(relation_sum);
  if (denom_root == 0.0) return std::nullopt;  // degenerate relation sum
  return LinkState{source, target, path_links.front().subtask_id,
                   link_sum / (denom_root * denom_root), LinkKind::Implicit};
}

namespace {

struct PathSearch {
  const std::map<std::string, std::vector<LinkState>>& adjacency;
  const std::string& target;

  std::vector<LinkState> current;
  std::vector<std::string> nodes;  // visited node sequence, current path
  double volume = 0.0;

  bool found = false;
  std::vector<LinkState> best;
  std::vector<std::string> best_nodes;
  double best_volume = 0.0;

  void visit(const std::string& node) {
    if (node == target) {
      if (!found || better()) {
        found = true;
        best = current;
        best_nodes = nodes;
        best_volume = volume;
      }
      return;
    }
    auto it = adjacency.find(node);
    if (it == adjacency.end()) return;
    for (const LinkState& edge : it->second) {
      if (std::find(nodes.begin(), nodes.end(), edge.target) != nodes.end()) continue;
      current.push_back(edge);
      nodes.push_back(edge.target);
      volume += edge.value;
      visit(edge.target);
      volume -= edge.value;
      nodes.pop_back();
      current.pop_back();
    }
  }

  // Maximum volume, then fewer hops, then smallest node sequence.
  bool better() const {
    if (volume != best_volume) return volume > best_volume;
    if (current.size() != best.size()) return current.size() < best.size();
    return nodes < best_nodes;
  }
};

}  // namespace

std::optional<std::vector<LinkState>> select_path(const LinkGraph& graph,
                                                  const std::string& subtask,
                                                  const std::string& source,
                                                  const std::string& target) {
  if (source == target) throw ValidationError("target", "source and target must differ");

  std::map<std::string, std::vector<LinkState>> adjacency;
  for (const LinkState& l : graph.links(subtask, LinkKind::Explicit))
    adjacency[l.source].push_back(l);

  PathSearch search{adjacency, target};
  search.nodes.push_back(source);
  search.visit(source);
  if (!search.found) return std::nullopt;  // unreachable
  return search.best;
}

double mode_value(std::span<const double> values) {
  if (values.empty()) throw ValidationError("values", "no link observations");
  std::map<double, std::size_t> frequency;
  for (double v : values) ++frequency[v];
  std::size_t top = 0;
  for (const auto& [_, count] : frequency) top = std::max(top, count);
  // The map is key-ordered, so the last maximal-count entry is the largest
  // modal value; with all counts at 1 this is the plain maximum.
  double winner = frequency.begin()->first;
  for (const auto& [value, count] : frequency) {
    if (count == top) winner = value;
  }
  return winner;
}

double update_relation(std::span<const double> explicit_values,
                       std::span<const double> implicit_values) {
  if (explicit_values.empty() && implicit_values.empty())
    throw ValidationError("values", "no link observations");
  if (!explicit_values.empty() && !implicit_values.empty() &&
      explicit_values.size() != implicit_values.size()) {
    throw ValidationError("implicit_values", "subtask alignment mismatch");
  }
  const std::size_t n = std::max(explicit_values.size(), implicit_values.size());
  std::vector<double> combined(n, 0.0);
  for (std::size_t i = 0; i < explicit_values.size(); ++i) combined[i] += explicit_values[i];
  for (std::size_t i = 0; i < implicit_values.size(); ++i) combined[i] += implicit_values[i];
  return mode_value(combined);
}

LinkState promote(const LinkState& link, double tau) {
  if (!std::isfinite(tau) || tau < 0.0) throw ValidationError("tau", "negative or non-finite");
  if (link.kind != LinkKind::Implicit) return link;
  if (link.value < tau) return link;
  LinkState out = link;
  out.kind = LinkKind::Explicit;
  return out;
}

ClosureDiagnostics close_graph(LinkGraph& graph, const RelationMatrix& relations) {
  ClosureDiagnostics diag;
  for (const std::string& subtask : graph.subtasks()) {
    for (const std::string& source : graph.agents(subtask)) {
      for (const std::string& target : graph.agents(subtask)) {
        if (source == target) continue;
        if (graph.find(subtask, source, target, LinkKind::Explicit)) continue;
        auto path = select_path(graph, subtask, source, target);
        if (!path) {
          ++diag.unreachable_pairs;
          continue;
        }
        std::vector<double> path_rel;
        path_rel.reserve(path->size());
        for (const LinkState& edge : *path) path_rel.push_back(relations.at(edge.source, edge.target));
        auto implicit = path_implicit(*path, path_rel);
        if (!implicit) {
          ++diag.degenerate_paths;
          continue;
        }
        graph.upsert(*implicit);
      }
    }
  }
  return diag;
}

RelationMatrix build_relations(const LinkGraph& graph) {
  // Per ordered pair: explicit/implicit values aligned over the subtasks
  // where the pair carries any link mass.
  std::map<std::pair<std::string, std::string>, std::pair<std::vector<double>, std::vector<double>>>
      observations;
  for (const std::string& subtask : graph.subtasks()) {
    std::map<std::pair<std::string, std::string>, std::pair<double, double>> here;
    for (const LinkState& l : graph.links(subtask, LinkKind::Explicit))
      here[{l.source, l.target}].first = l.value;
    for (const LinkState& l : graph.links(subtask, LinkKind::Implicit))
      here[{l.source, l.target}].second = l.value;
    for (const auto& [pair, values] : here) {
      observations[pair].first.push_back(values.first);
      observations[pair].second.push_back(values.second);
    }
  }
  RelationMatrix out;
  for (const auto& [pair, values] : observations)
    out.set(pair.first, pair.second, update_relation(values.first, values.second));
  return out;
}

}  // namespace scap::links
