#ifndef KSET_KSETS_HPP
#define KSET_KSETS_HPP

#include <string>
#include <utility>
#include <vector>

#include "kset/cohesion.hpp"
#include "kset/errors.hpp"
#include "kset/metric.hpp"
#include "kset/partition.hpp"
#include "kset/rng.hpp"

namespace kset {

/// Triangular distance from point x to set S: the mean of
/// d(x,z1) + d(x,z2) - d(z1,z2) over pairs from S. Nonnegative whenever d
/// satisfies the triangle inequality.
inline double triangular_distance(const DistanceMatrix& d, int x, const PointSet& s) {
  detail::require_nonempty(s, "S");
  double to_set = 0.0;
  for (int y : s) to_set += d(x, y);
  return 2.0 * to_set / s.size() - avg_distance(d, s, s);
}

/// The same quantity computed from a cohesion matrix (the dual route).
inline double triangular_distance(const CohesionMatrix& g, int x, const PointSet& s) {
  detail::require_nonempty(s, "S");
  double to_set = 0.0;
  for (int y : s) to_set += g(x, y);
  return g(x, x) - 2.0 * to_set / s.size() +
         cohesion(g, s, s) / (static_cast<double>(s.size()) * s.size());
}

/// Normalized modularity: within-set cohesion divided by set size, summed.
inline double normalized_modularity(const CohesionMatrix& g, const Partition& p) {
  if (p.n() != g.size()) throw domain_error("partition size does not match the matrix");
  double r = 0.0;
  for (const PointSet& s : p.sets()) r += cohesion(g, s, s) / s.size();
  return r;
}

struct MoveRecord {
  int pass = 0;
  int point = 0;
  int from = 0;
  int to = 0;
  double delta_from = 0.0;  // triangular distance to the current set
  double delta_to = 0.0;    // triangular distance to the chosen set
  bool applied = true;      // false when the sole-member guard blocked it
};

struct KSetsRun {
  Partition final;
  std::vector<MoveRecord> history;
  std::vector<double> r_trace;  // normalized modularity: initial, then after each applied move
  int passes = 0;
  bool converged = false;

  int moves() const {
    int c = 0;
    for (const auto& m : history) c += m.applied ? 1 : 0;
    return c;
  }
};

namespace detail {

inline void check_ksets_args(int n, int k, const Partition& init) {
  if (k < 2 || k > n) throw domain_error("K must be in [2, n], got " + std::to_string(k));
  if (init.n() != n) throw domain_error("initial partition size does not match the matrix");
  if (init.k() != k)
    throw domain_error("initial partition has " + std::to_string(init.k()) + " sets, expected " +
                       std::to_string(k));
}

/// Per-set running sums for the distance-driven run. rowsum[x][k] is the
/// sum of d(x, y) over y in set k; within[k] is the full ordered within-set
/// sum, so delta(x,k) = 2 rowsum/size - within/size^2.
class DistanceSums {
 public:
  DistanceSums(const DistanceMatrix& d, const Partition& p) : d_(d) {
    const int n = d.size(), k = p.k();
    size_.resize(k);
    within_.assign(k, 0.0);
    rowsum_.assign(n, std::vector<double>(k, 0.0));
    const auto& a = p.assignment();
    for (int x = 0; x < n; ++x) {
      size_[a[x]]++;
      for (int y = 0; y < n; ++y) rowsum_[x][a[y]] += d(x, y);
    }
    for (int x = 0; x < n; ++x) within_[a[x]] += rowsum_[x][a[x]];
    // sum_x coh(x,x) = total / n; constant across partitions of the same space.
    self_cohesion_total_ = d.total() / d.size();
  }

  int set_size(int k) const { return size_[k]; }

  double delta(int x, int k) const {
    const double sz = size_[k];
    return 2.0 * rowsum_[x][k] / sz - within_[k] / (sz * sz);
  }

  void move(int x, int from, int to) {
    within_[from] -= 2.0 * rowsum_[x][from];
    within_[to] += 2.0 * rowsum_[x][to];
    const int n = d_.size();
    for (int z = 0; z < n; ++z) {
      rowsum_[z][from] -= d_(z, x);
      rowsum_[z][to] += d_(z, x);
    }
    size_[from]--;
    size_[to]++;
  }

  double normalized_modularity() const {
    double within_mean_total = 0.0;
    for (size_t k = 0; k < within_.size(); ++k) within_mean_total += within_[k] / size_[k];
    return self_cohesion_total_ - within_mean_total;
  }

  double move_tolerance() const { return scaled_tol(d_.max_abs()); }

 private:
  const DistanceMatrix& d_;
  std::vector<int> size_;
  std::vector<double> within_;
  std::vector<std::vector<double>> rowsum_;
  double self_cohesion_total_ = 0.0;
};

/// The dual counterpart driven by a cohesion matrix.
class CohesionSums {
 public:
  CohesionSums(const CohesionMatrix& g, const Partition& p) : g_(g) {
    const int n = g.size(), k = p.k();
    size_.resize(k);
    within_.assign(k, 0.0);
    rowsum_.assign(n, std::vector<double>(k, 0.0));
    const auto& a = p.assignment();
    for (int x = 0; x < n; ++x) {
      size_[a[x]]++;
      for (int y = 0; y < n; ++y) rowsum_[x][a[y]] += g(x, y);
    }
    for (int x = 0; x < n; ++x) within_[a[x]] += rowsum_[x][a[x]];
  }

  int set_size(int k) const { return size_[k]; }

  double delta(int x, int k) const {
    const double sz = size_[k];
    return g_(x, x) - 2.0 * rowsum_[x][k] / sz + within_[k] / (sz * sz);
  }

  void move(int x, int from, int to) {
    // rowsum[x][from] still counts g(x,x); the within updates compensate.
    within_[from] -= 2.0 * rowsum_[x][from] - g_(x, x);
    within_[to] += 2.0 * rowsum_[x][to] + g_(x, x);
    const int n = g_.size();
    for (int z = 0; z < n; ++z) {
      rowsum_[z][from] -= g_(z, x);
      rowsum_[z][to] += g_(z, x);
    }
    size_[from]--;
    size_[to]++;
  }

  double normalized_modularity() const {
    double r = 0.0;
    for (size_t k = 0; k < within_.size(); ++k) r += within_[k] / size_[k];
    return r;
  }

  double move_tolerance() const { return scaled_tol(g_.max_abs()); }

 private:
  const CohesionMatrix& g_;
  std::vector<int> size_;
  std::vector<double> within_;
  std::vector<std::vector<double>> rowsum_;
};

/// One-step-minimization passes over the points in index order. A point
/// moves only when the best set beats its current one by more than the
/// tolerance (so the run terminates under floating point), ties go to the
/// current set and then to the lowest set id, and the sole member of a set
/// stays put (recorded as a skipped move).
template <class Sums>
KSetsRun ksets_engine(Sums sums, int n, int k, const Partition& init, int max_passes) {
  std::vector<int> assignment = init.assignment();
  const double tol = sums.move_tolerance();

  KSetsRun run;
  run.r_trace.push_back(sums.normalized_modularity());

  for (int pass = 1; pass <= max_passes; ++pass) {
    run.passes = pass;
    bool changed = false;
    for (int x = 0; x < n; ++x) {
      const int cur = assignment[x];
      int best = 0;
      double best_delta = sums.delta(x, 0);
      for (int c = 1; c < k; ++c) {
        const double dc = sums.delta(x, c);
        if (dc < best_delta) {
          best = c;
          best_delta = dc;
        }
      }
      if (best == cur) continue;
      const double cur_delta = sums.delta(x, cur);
      if (!(best_delta < cur_delta - tol)) continue;
      if (sums.set_size(cur) == 1) {
        run.history.push_back({pass, x, cur, best, cur_delta, best_delta, false});
        continue;
      }
      sums.move(x, cur, best);
      assignment[x] = best;
      run.history.push_back({pass, x, cur, best, cur_delta, best_delta, true});
      run.r_trace.push_back(sums.normalized_modularity());
      changed = true;
    }
    if (!changed) {
      run.converged = true;
      break;
    }
  }

  run.final = partition_with_ids(assignment, k);
  return run;
}

}  // namespace detail

/// Uniform random assignment of n points to k sets, redrawn until every
/// set is nonempty.
inline Partition random_partition(int n, int k, uint64_t seed) {
  if (k < 1 || k > n) throw domain_error("K must be in [1, n]");
  Xoshiro256ss rng(seed);
  std::vector<int> labels(n);
  while (true) {
    std::vector<int> count(k, 0);
    for (int i = 0; i < n; ++i) {
      labels[i] = rng.below(k);
      count[labels[i]]++;
    }
    bool ok = true;
    for (int c : count) ok = ok && c > 0;
    if (ok) return partition_with_ids(labels, k);
  }
}

/// K-sets: iteratively reassign each point to the set with the smallest
/// triangular distance. The normalized modularity strictly increases with
/// every applied move.
inline KSetsRun k_sets(const DistanceMatrix& d, int k, const Partition& init,
                       int max_passes = 100) {
  detail::check_ksets_args(d.size(), k, init);
  return detail::ksets_engine(detail::DistanceSums(d, init), d.size(), k, init, max_passes);
}

inline KSetsRun k_sets(const DistanceMatrix& d, int k, uint64_t seed, int max_passes = 100) {
  return k_sets(d, k, random_partition(d.size(), k, seed), max_passes);
}

/// Dual K-sets: the same control flow driven by a cohesion matrix. On the
/// dual cohesion measure of d it reproduces k_sets(d, ...) move for move.
inline KSetsRun dual_k_sets(const CohesionMatrix& g, int k, const Partition& init,
                            int max_passes = 100) {
  detail::check_ksets_args(g.size(), k, init);
  return detail::ksets_engine(detail::CohesionSums(g, init), g.size(), k, init, max_passes);
}

inline KSetsRun dual_k_sets(const CohesionMatrix& g, int k, uint64_t seed, int max_passes = 100) {
  return dual_k_sets(g, k, random_partition(g.size(), k, seed), max_passes);
}

/// Both routes to the squared feature-space distance between the image of
/// x and the centroid of S under the kernel sigma*I + G: once expanded
/// purely from Gram entries, once from the shifted triangular distance.
/// The two agree for every sigma.
struct KernelIdentity {
  double gram_route = 0.0;
  double triangular_route = 0.0;
};

inline KernelIdentity kernel_identity(const CohesionMatrix& g, double sigma, int x,
                                      const PointSet& s) {
  detail::require_nonempty(s, "S");
  const double sz = s.size();
  auto gram = [&](int i, int j) { return (i == j ? sigma : 0.0) + g(i, j); };

  double cross = 0.0;
  for (int y : s) cross += gram(x, y);
  double within = 0.0;
  for (int y1 : s)
    for (int y2 : s) within += gram(y1, y2);

  KernelIdentity id;
  id.gram_route = gram(x, x) - 2.0 * cross / sz + within / (sz * sz);
  id.triangular_route =
      (1.0 - (s.contains(x) ? 2.0 / sz : 0.0) + 1.0 / sz) * sigma + triangular_distance(g, x, s);
  return id;
}

}  // namespace kset

#endif  // KSET_KSETS_HPP
