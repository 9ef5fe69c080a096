#ifndef KSET_PARTITION_HPP
#define KSET_PARTITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "kset/errors.hpp"
#include "kset/metric.hpp"

namespace kset {

/// Assignment of n points to K nonempty disjoint sets covering the space.
/// Cluster ids are compact (0..K-1); from_assignment compacts arbitrary
/// labels in order of first appearance.
class Partition {
 public:
  Partition() = default;  // empty placeholder; algorithms fill it in

  static Partition from_assignment(const std::vector<int>& labels) {
    if (labels.empty()) throw domain_error("partition needs at least one point");
    std::vector<int> compact(labels.size());
    std::vector<int> seen;  // original label per compact id
    for (size_t i = 0; i < labels.size(); ++i) {
      int id = -1;
      for (size_t k = 0; k < seen.size(); ++k)
        if (seen[k] == labels[i]) {
          id = static_cast<int>(k);
          break;
        }
      if (id < 0) {
        id = static_cast<int>(seen.size());
        seen.push_back(labels[i]);
      }
      compact[i] = id;
    }
    const int k = static_cast<int>(seen.size());
    std::vector<std::vector<int>> members(k);
    for (size_t i = 0; i < compact.size(); ++i) members[compact[i]].push_back(static_cast<int>(i));
    std::vector<PointSet> sets;
    sets.reserve(k);
    for (auto& ms : members) sets.emplace_back(std::move(ms));
    return Partition(std::move(compact), std::move(sets));
  }

  static Partition from_sets(const std::vector<PointSet>& sets, int n) {
    if (n <= 0) throw domain_error("partition needs at least one point");
    std::vector<int> assignment(n, -1);
    for (size_t k = 0; k < sets.size(); ++k) {
      if (sets[k].empty()) throw domain_error("partition set " + std::to_string(k) + " is empty");
      for (int x : sets[k]) {
        if (x >= n) throw domain_error("point index " + std::to_string(x) + " out of range");
        if (assignment[x] != -1)
          throw domain_error("point " + std::to_string(x) + " appears in two sets");
        assignment[x] = static_cast<int>(k);
      }
    }
    for (int x = 0; x < n; ++x)
      if (assignment[x] == -1) throw domain_error("point " + std::to_string(x) + " is unassigned");
    return Partition(std::move(assignment), sets);
  }

  int n() const { return static_cast<int>(assignment_.size()); }
  int k() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& assignment() const { return assignment_; }
  const std::vector<PointSet>& sets() const { return sets_; }
  const PointSet& set(int id) const { return sets_[id]; }
  int cluster_of(int x) const { return assignment_[x]; }

  bool operator==(const Partition& o) const { return assignment_ == o.assignment_; }

 private:
  Partition(std::vector<int> assignment, std::vector<PointSet> sets)
      : assignment_(std::move(assignment)), sets_(std::move(sets)) {}

  std::vector<int> assignment_;
  std::vector<PointSet> sets_;
};

/// Builds a partition whose set ids are the labels themselves: every label
/// must lie in [0, k) and every id must be used. Unlike from_assignment,
/// ids are not renamed, so traces that reference set ids stay meaningful.
inline Partition partition_with_ids(const std::vector<int>& labels, int k) {
  std::vector<std::vector<int>> members(k);
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= k)
      throw domain_error("set id " + std::to_string(labels[i]) + " out of range [0," +
                         std::to_string(k) + ")");
    members[labels[i]].push_back(static_cast<int>(i));
  }
  std::vector<PointSet> sets;
  sets.reserve(k);
  for (auto& m : members) sets.emplace_back(std::move(m));
  return Partition::from_sets(sets, static_cast<int>(labels.size()));
}

}  // namespace kset

#endif  // KSET_PARTITION_HPP
