// SPDX-License-Identifier: Apache-2.0
#pragma once

// Capital engine: capacity, benevolence, potential benevolence, the
// conditional benevolence ratio, belief decay, per-agent instant SC,
// accumulative SC and group net SC. Pure functions throughout; per-agent
// rows for one interval may be computed in parallel once the shared
// relation values are frozen.

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "scap/model.hpp"

namespace scap::capital {

enum class BeliefMode {
  Ratio,        // belief factor 1 for every hop: the direct co-worker regime
  Exponential,  // exp(-lambda * hop_distance)
};

struct BeliefConfig {
  double lambda{0.0};  // >= 0
  BeliefMode mode{BeliefMode::Ratio};
};

// Per-agent inputs/outputs of one (task, interval) measurement.
struct CapitalRow {
  std::string agent_id;
  std::string task_id;
  std::size_t interval_index{};
  double capacity{};
  double benevolence{};
  double potential_benevolence{};
  double instant_sc{};
};

// Peer agent id -> hop distance to it; absent peers count as direct (1).
using HopMap = std::map<std::string, int, std::less<>>;

// (capability + willingness) * availability. Inputs must satisfy the
// profile invariants.
double capacity(double capability, double willingness, double availability);

// Case-study capacity proxy: the number of distinct commit ids the agent
// authored across the supplied events.
double capacity_from_commits(std::span<const InteractionEvent> events, std::string_view agent_id);

// relation * capacity.
double benevolence(double relation, double capacity);

// Decay weight for a contribution traversing `hop_distance` explicit
// links: 1 in ratio mode, exp(-lambda * hop_distance) in exponential mode.
// Monotonically nonincreasing in the distance.
double belief_factor(int hop_distance, const BeliefConfig& belief);

// Belief-weighted sum of the peers' benevolence. In ratio mode this is
// exactly the sum of benevolence over all other agents. Throws "no peers"
// when the rows hold no agent besides `agent_id`.
double potential_benevolence(std::string_view agent_id, std::span<const CapitalRow> rows,
                             const BeliefConfig& belief, const HopMap* hops = nullptr);

// Expectation of receiving benevolence given the potential pool:
// benevolence_in / potential_in when the pool is positive, 0 otherwise.
double conditional_benevolence(double benevolence_in, double potential_in);

// Instant social capital of one agent: belief-weighted conditional
// benevolence summed over peers. In ratio mode (all links direct) this
// reduces to conditional_benevolence(own benevolence, potential pool);
// in exponential mode each peer contributes its belief-weighted share of
// the pool.
double instant_sc(std::string_view agent_id, std::span<const CapitalRow> rows,
                  const BeliefConfig& belief, const HopMap* hops = nullptr);

// previous + instant.
double accumulate_sc(double previous, double instant);

// Group-level sum of the supplied per-agent SC values. Throws on an empty
// group.
double net_sc(std::span<const double> sc_values);

}  // namespace scap::capital
