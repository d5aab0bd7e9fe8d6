// SPDX-License-Identifier: Apache-2.0
#include "scap/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scap {

namespace {

void check_nonnegative_finite(const std::string& field, double v) {
  if (!std::isfinite(v)) throw ValidationError(field, "non-finite value");
  if (v < 0.0) throw ValidationError(field, "negative value");
}

}  // namespace

AgentProfile validate_profile(AgentProfile profile) {
  if (profile.agent_id.empty()) throw ValidationError("agent_id", "empty identifier");
  for (const auto& [task_id, ability] : profile.per_task) {
    check_nonnegative_finite("capability", ability.capability);
    check_nonnegative_finite("willingness", ability.willingness);
    if (!std::isfinite(ability.availability) || ability.availability < 0.0 ||
        ability.availability > 1.0) {
      throw ValidationError("availability", "availability out of [0,1]");
    }
  }
  return profile;
}

TaskHierarchy TaskHierarchy::build(std::string goal_id, std::vector<TaskSpec> tasks,
                                   std::vector<Interval> intervals) {
  if (goal_id.empty()) throw ValidationError("goal_id", "empty identifier");
  if (tasks.empty()) throw ValidationError("tasks", "empty task list");
  if (intervals.empty()) throw ValidationError("intervals", "empty interval list");

  TaskHierarchy h;
  std::set<std::string> task_ids;
  for (const auto& task : tasks) {
    if (task.task_id.empty()) throw ValidationError("task_id", "empty identifier");
    if (!task_ids.insert(task.task_id).second)
      throw ValidationError("task_id", "duplicate task id: " + task.task_id);
    for (const auto& subtask : task.subtasks) {
      if (subtask.empty()) throw ValidationError("subtask_id", "empty identifier");
      if (!h.subtask_to_task_.emplace(subtask, task.task_id).second)
        throw ValidationError("subtask_id", "duplicate subtask id: " + subtask);
    }
  }

  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].start >= intervals[i].end)
      throw ValidationError("intervals", "interval start must precede end");
    if (i > 0 && intervals[i].start < intervals[i - 1].end)
      throw ValidationError("intervals", "overlapping intervals");
  }

  h.goal_id_ = std::move(goal_id);
  h.tasks_ = std::move(tasks);
  h.intervals_ = std::move(intervals);
  return h;
}

std::optional<std::size_t> TaskHierarchy::interval_of(Timestamp t) const noexcept {
  // Intervals are ordered; binary search on start.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                             [](Timestamp v, const Interval& iv) { return v < iv.start; });
  if (it == intervals_.begin()) return std::nullopt;
  --it;
  if (it->contains(t)) return static_cast<std::size_t>(it - intervals_.begin());
  return std::nullopt;
}

std::optional<std::string> TaskHierarchy::task_of(const std::string& subtask_id) const {
  auto it = subtask_to_task_.find(subtask_id);
  if (it == subtask_to_task_.end()) return std::nullopt;
  return it->second;
}

LinkState validate_link(LinkState link) {
  if (link.source.empty()) throw ValidationError("source", "empty identifier");
  if (link.target.empty()) throw ValidationError("target", "empty identifier");
  if (link.source == link.target) throw ValidationError("target", "self-link not allowed");
  if (link.subtask_id.empty()) throw ValidationError("subtask_id", "empty identifier");
  if (!std::isfinite(link.value)) throw ValidationError("value", "non-finite value");
  if (link.value < 0.0) throw ValidationError("value", "negative value");
  return link;
}

double RelationMatrix::at(const std::string& source, const std::string& target) const {
  auto it = values_.find({source, target});
  return it == values_.end() ? 0.0 : it->second;
}

void RelationMatrix::set(const std::string& source, const std::string& target, double value) {
  if (source == target) throw ValidationError("target", "self-relation not allowed");
  if (!std::isfinite(value)) throw ValidationError("value", "non-finite value");
  values_[{source, target}] = value;
}

const ReportRow& SCReport::row(std::size_t interval_index, const std::string& agent_id) const {
  for (const auto& r : rows) {
    if (r.interval_index == interval_index && r.agent_id == agent_id) return r;
  }
  throw Error("no report row for interval " + std::to_string(interval_index) + ", agent " +
              agent_id);
}

}  // namespace scap
