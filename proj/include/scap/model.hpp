// SPDX-License-Identifier: Apache-2.0
#pragma once

// Domain types shared by every engine. Values are immutable after
// construction and safe to share across threads; all computation lives in
// the engine headers.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scap {

// Base class for every library failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invariant violation on a domain value; field() names the offender.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Seconds since the Unix epoch.
using Timestamp = std::int64_t;

// Half-open time window [start, end).
struct Interval {
  Timestamp start{};
  Timestamp end{};

  bool contains(Timestamp t) const noexcept { return t >= start && t < end; }
  bool operator==(const Interval&) const = default;
};

// Ability triple feeding the capacity measure for one task.
struct TaskAbility {
  double capability{};    // >= 0
  double willingness{};   // >= 0
  double availability{};  // in [0, 1]
};

struct AgentProfile {
  std::string agent_id;
  std::map<std::string, TaskAbility> per_task;  // task_id -> abilities
};

// Returns the profile unchanged when every ability triple is in range;
// throws ValidationError naming the offending field otherwise.
AgentProfile validate_profile(AgentProfile profile);

struct TaskSpec {
  std::string task_id;
  std::vector<std::string> subtasks;
};

// goal -> tasks -> subtasks tree plus the interval grid that scopes every
// graph and computation.
class TaskHierarchy {
 public:
  // Validates: nonempty task and interval lists, unique task ids, unique
  // subtask ids across tasks, ordered disjoint intervals.
  static TaskHierarchy build(std::string goal_id, std::vector<TaskSpec> tasks,
                             std::vector<Interval> intervals);

  const std::string& goal_id() const noexcept { return goal_id_; }
  const std::vector<TaskSpec>& tasks() const noexcept { return tasks_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  // Index of the interval containing t, if any. Disjointness guarantees at
  // most one match.
  std::optional<std::size_t> interval_of(Timestamp t) const noexcept;

  // Task owning subtask_id, if registered.
  std::optional<std::string> task_of(const std::string& subtask_id) const;

 private:
  TaskHierarchy() = default;

  std::string goal_id_;
  std::vector<TaskSpec> tasks_;
  std::vector<Interval> intervals_;
  std::map<std::string, std::string> subtask_to_task_;
};

// One contributor's line-level change on one subtask at one instant.
struct InteractionEvent {
  Timestamp timestamp{};
  std::string agent_id;
  std::string task_id;
  std::string subtask_id;
  std::uint64_t lines_added{};
  std::uint64_t lines_deleted{};
  std::string commit_id;

  // The interaction value of the event: total lines touched.
  double interaction_value() const noexcept {
    return static_cast<double>(lines_added + lines_deleted);
  }
};

enum class LinkKind { Explicit, Implicit };

// Directed pairwise link on one subtask. Kind moves only Implicit ->
// Explicit (promotion); there is no demotion path.
struct LinkState {
  std::string source;
  std::string target;
  std::string subtask_id;
  double value{};
  LinkKind kind{LinkKind::Explicit};
};

// Enforces: source != target, value finite and >= 0.
LinkState validate_link(LinkState link);

// Directed relation values for one task. Absent pairs read as 0 (no
// relation); self-pairs are rejected.
class RelationMatrix {
 public:
  double at(const std::string& source, const std::string& target) const;
  void set(const std::string& source, const std::string& target, double value);

  bool empty() const noexcept { return values_.empty(); }
  const std::map<std::pair<std::string, std::string>, double>& entries() const noexcept {
    return values_;
  }

 private:
  std::map<std::pair<std::string, std::string>, double> values_;
};

// Per-(interval, agent) measurement row.
struct ReportRow {
  std::size_t interval_index{};  // 0-based
  std::string agent_id;
  double links_total{};
  double relation{};
  double capacity{};
  double benevolence{};
  double potential_benevolence{};
  double instant_sc{};
  double accumulative_sc{};
};

struct SCReport {
  std::vector<std::string> agents;  // report order
  std::size_t interval_count{};
  std::vector<ReportRow> rows;  // interval-major, agents in report order
  std::vector<double> net_sc;   // one per interval

  bool empty() const noexcept { return rows.empty(); }
  const ReportRow& row(std::size_t interval_index, const std::string& agent_id) const;
};

}  // namespace scap
