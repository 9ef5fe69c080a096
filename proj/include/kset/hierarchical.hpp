#ifndef KSET_HIERARCHICAL_HPP
#define KSET_HIERARCHICAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kset/cohesion.hpp"
#include "kset/errors.hpp"
#include "kset/partition.hpp"

namespace kset {

enum class MergePolicy {
  greedy_max,   // merge the most cohesive pair, ties to the smallest id pair
  first_found   // merge the smallest id pair with positive cohesion
};

struct MergeEvent {
  int left = 0;        // smaller set id
  int right = 0;       // larger set id
  int merged = 0;      // id of the new set (n, n+1, ...)
  double gamma = 0.0;  // cohesion of the pair at merge time
};

/// Dendrogram of the agglomerative run: leaves are the n singletons with
/// ids 0..n-1, each merge creates id n+t. Merging stops when every
/// remaining pair is incohesive, so final_sets is a partition of clusters.
struct MergeTree {
  int n_leaves = 0;
  std::vector<MergeEvent> events;
  std::vector<int> final_ids;        // surviving set ids, ascending
  std::vector<PointSet> final_sets;  // members, parallel to final_ids

  Partition final_partition() const {
    return Partition::from_sets(final_sets, n_leaves);
  }
};

/// Agglomerative clustering: start from singletons and merge cohesive
/// pairs until none is left. Set cohesions are maintained incrementally:
///   coh(Sk,Sk) = coh(Si,Si) + 2 coh(Si,Sj) + coh(Sj,Sj)
///   coh(Sk,Sl) = coh(Si,Sl) + coh(Sj,Sl)
/// A pair merges only if its cohesion exceeds the matrix tolerance, so a
/// pair sitting exactly at zero stays separate.
inline MergeTree hierarchical_cluster(const CohesionMatrix& g,
                                      MergePolicy policy = MergePolicy::greedy_max) {
  const int n = g.size();
  const double tol = g.tolerance();

  // Active sets kept in ascending id order; the merged set always gets the
  // largest id and is appended, so slot order and id order coincide and the
  // pair scan below resolves ties to the smallest id pair.
  std::vector<int> ids(n);
  std::vector<std::vector<int>> members(n);
  std::vector<std::vector<double>> coh(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    ids[i] = i;
    members[i] = {i};
    for (int j = 0; j < n; ++j) coh[i][j] = g(i, j);
  }

  MergeTree tree;
  tree.n_leaves = n;
  int next_id = n;

  while (ids.size() > 1) {
    const int k = static_cast<int>(ids.size());
    int bi = -1, bj = -1;
    double best = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (coh[i][j] <= tol) continue;
        if (policy == MergePolicy::first_found) {
          bi = i;
          bj = j;
          break;
        }
        if (coh[i][j] > best) {
          best = coh[i][j];
          bi = i;
          bj = j;
        }
      }
      if (policy == MergePolicy::first_found && bi >= 0) break;
    }
    if (bi < 0) break;  // all remaining pairs incohesive

    tree.events.push_back({ids[bi], ids[bj], next_id, coh[bi][bj]});

    std::vector<double> merged_row(k, 0.0);
    for (int l = 0; l < k; ++l) merged_row[l] = coh[bi][l] + coh[bj][l];
    const double merged_self = coh[bi][bi] + 2.0 * coh[bi][bj] + coh[bj][bj];

    std::vector<int> merged_members = members[bi];
    merged_members.insert(merged_members.end(), members[bj].begin(), members[bj].end());

    auto drop = [&](int slot) {
      ids.erase(ids.begin() + slot);
      members.erase(members.begin() + slot);
      merged_row.erase(merged_row.begin() + slot);
      coh.erase(coh.begin() + slot);
      for (auto& row : coh) row.erase(row.begin() + slot);
    };
    drop(bj);  // bj > bi, drop it first
    drop(bi);

    for (size_t l = 0; l < coh.size(); ++l) coh[l].push_back(merged_row[l]);
    merged_row.push_back(merged_self);
    coh.push_back(std::move(merged_row));
    ids.push_back(next_id++);
    members.push_back(std::move(merged_members));
  }

  for (size_t i = 0; i < ids.size(); ++i) {
    tree.final_ids.push_back(ids[i]);
    tree.final_sets.emplace_back(members[i]);
  }
  return tree;
}

/// Modularity of a partition: total within-set cohesion.
inline double modularity(const CohesionMatrix& g, const Partition& p) {
  if (p.n() != g.size()) throw domain_error("partition size does not match the matrix");
  double q = 0.0;
  for (const PointSet& s : p.sets()) q += cohesion(g, s, s);
  return q;
}

}  // namespace kset

#endif  // KSET_HIERARCHICAL_HPP
