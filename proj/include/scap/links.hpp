// SPDX-License-Identifier: Apache-2.0
#pragma once

// Link engine: explicit link accumulation, implicit links through triadic
// and path closure, relation updates via the mode rule, and threshold
// promotion of implicit links. All operations are pure functions of their
// inputs; the LinkGraph is the only stateful piece and is single-writer.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scap/model.hpp"

namespace scap::links {

// Link store for one task: at most one explicit and one implicit link per
// ordered (source, target, subtask) triple, plus the promotion threshold.
class LinkGraph {
 public:
  explicit LinkGraph(double tau);

  double tau() const noexcept { return tau_; }

  // Inserts or replaces the slot addressed by (source, target, subtask,
  // kind). The link is validated on the way in.
  void upsert(const LinkState& link);

  std::optional<LinkState> find(const std::string& subtask, const std::string& source,
                                const std::string& target, LinkKind kind) const;

  std::vector<std::string> subtasks() const;

  // Links of one kind on a subtask, ordered by (source, target).
  std::vector<LinkState> links(const std::string& subtask, LinkKind kind) const;

  std::vector<LinkState> all_links() const;

  // Agents appearing as an endpoint on the subtask, sorted.
  std::vector<std::string> agents(const std::string& subtask) const;

  // Applies promote() to every implicit link and moves the qualifying ones
  // into their explicit slot. A link whose explicit slot is already
  // occupied stays implicit. Returns the promoted links.
  std::vector<LinkState> promote_all();

 private:
  struct Slot {
    std::optional<LinkState> explicit_link;
    std::optional<LinkState> implicit_link;
  };

  double tau_;
  // subtask -> (source, target) -> slot
  std::map<std::string, std::map<std::pair<std::string, std::string>, Slot>> by_subtask_;
};

// Accumulation over one interval: returns a copy of `link` grown by the
// summed interaction values of `events`. Every event must fall inside
// `interval`, carry the link's subtask and be authored by the link's
// source; the input link is not mutated.
LinkState accumulate_explicit(const LinkState& link, std::span<const InteractionEvent> events,
                              const Interval& interval);

// Triadic closure: implicit a->c from explicit a->b and b->c, valued
// (l_ab + l_bc) / |r_ab + r_bc|^2. Returns nullopt on a degenerate
// relation sum (|r_ab + r_bc| == 0); callers skip the triad.
std::optional<LinkState> triadic_implicit(const LinkState& l_ab, const LinkState& l_bc,
                                          double r_ab, double r_bc);

// Path closure over a connected run of unrepeated explicit links:
// (sum of link values) / |sum of relations|^2, one relation per link.
// Structural defects (disconnected path, repeated link, size mismatch)
// throw; a zero relation sum returns nullopt.
std::optional<LinkState> path_implicit(std::span<const LinkState> path_links,
                                       std::span<const double> path_relations);

// Maximum-volume simple explicit path source -> target on one subtask.
// Ties prefer fewer hops, then the lexicographically smallest node
// sequence. Returns nullopt when the target is unreachable.
//
// The search enumerates simple paths exhaustively, which is exponential in
// the worst case; task subgraphs here are subgroup-sized.
std::optional<std::vector<LinkState>> select_path(const LinkGraph& graph,
                                                  const std::string& subtask,
                                                  const std::string& source,
                                                  const std::string& target);

// Mode over a multiset of observations: the most repeated value wins;
// all-distinct inputs fall back to the maximum, and multimodal ties take
// the largest modal value. Throws on an empty multiset.
double mode_value(std::span<const double> values);

// Relation update: mode_value over per-subtask combined values, where
// combined[s] = explicit_values[s] + implicit_values[s]. Either list may
// be empty (read as zeros); both empty is an error ("no link
// observations").
double update_relation(std::span<const double> explicit_values,
                       std::span<const double> implicit_values);

// Threshold promotion: an implicit link whose value reaches tau
// (inclusive) becomes explicit; anything else is returned unchanged.
LinkState promote(const LinkState& link, double tau);

struct ClosureDiagnostics {
  std::size_t degenerate_paths{};   // skipped for a zero relation sum
  std::size_t unreachable_pairs{};  // no explicit path between the endpoints
};

// Closure pass: for every ordered pair without an explicit link on a
// subtask, derives an implicit link from the maximum-volume path using
// task-level `relations` as the Eq-style denominator terms.
ClosureDiagnostics close_graph(LinkGraph& graph, const RelationMatrix& relations);

// Relations for every ordered pair carrying link mass in the graph:
// update_relation over the pair's linked subtasks (explicit + implicit
// aligned per subtask).
RelationMatrix build_relations(const LinkGraph& graph);

}  // namespace scap::links
