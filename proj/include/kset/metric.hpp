#ifndef KSET_METRIC_HPP
#define KSET_METRIC_HPP

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "kset/errors.hpp"
#include "kset/matrix.hpp"
#include "kset/validation.hpp"

namespace kset {

/// Ordered set of point indices. Kept sorted and unique so that every
/// iteration over a set is deterministic.
class PointSet {
 public:
  PointSet() = default;

  PointSet(std::initializer_list<int> xs) : members_(xs) { normalize(); }

  explicit PointSet(std::vector<int> xs) : members_(std::move(xs)) { normalize(); }

  /// The whole space {0, 1, ..., n-1}.
  static PointSet full(int n) {
    PointSet s;
    s.members_.resize(n);
    std::iota(s.members_.begin(), s.members_.end(), 0);
    return s;
  }

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(int x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  PointSet complement(int n) const {
    PointSet c;
    c.members_.reserve(n - size());
    size_t k = 0;
    for (int x = 0; x < n; ++x) {
      if (k < members_.size() && members_[k] == x) {
        ++k;
      } else {
        c.members_.push_back(x);
      }
    }
    return c;
  }

  const std::vector<int>& members() const { return members_; }
  std::vector<int>::const_iterator begin() const { return members_.begin(); }
  std::vector<int>::const_iterator end() const { return members_.end(); }
  int operator[](int i) const { return members_[i]; }

  bool operator==(const PointSet& o) const { return members_ == o.members_; }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 0)
      throw domain_error("point index must be nonnegative");
  }

  std::vector<int> members_;
};

/// How much of the metric contract to enforce at construction.
/// D1-D3 are O(n^2) and always checked by from(); the triangle
/// inequality D4 is O(n^3) and opt-in.
enum class MetricCheck { basic, full };

ValidationReport validate_metric(const SquareMatrix& m);

/// Symmetric nonnegative matrix with zero diagonal. Immutable once built;
/// row sums and the grand total are cached for the averaging primitives.
class DistanceMatrix {
 public:
  static DistanceMatrix from(SquareMatrix m, MetricCheck check = MetricCheck::basic) {
    ValidationReport r = validate_metric(m);
    const bool basic_ok = !r.find("D1") && !r.find("D2") && !r.find("D3");
    if (!basic_ok || (check == MetricCheck::full && !r.passed())) {
      throw axiom_error("not a valid distance matrix: " + r.summary());
    }
    return DistanceMatrix(std::move(m), check == MetricCheck::full);
  }

  /// For constructors that are metrics by construction (graph distances).
  static DistanceMatrix trusted(SquareMatrix m, bool metric_checked) {
    return DistanceMatrix(std::move(m), metric_checked);
  }

  int size() const { return d_.size(); }
  double operator()(int x, int y) const { return d_(x, y); }
  const SquareMatrix& values() const { return d_; }
  bool metric_checked() const { return metric_checked_; }

  /// Runs the full validation; the copy carries metric_checked on success.
  DistanceMatrix validated() const { return from(d_, MetricCheck::full); }

  double row_sum(int x) const { return row_sums_[x]; }
  double row_mean(int x) const { return row_sums_[x] / size(); }
  double total() const { return total_; }
  double grand_mean() const { return total_ / (static_cast<double>(size()) * size()); }
  double max_abs() const { return max_abs_; }
  double tolerance() const { return scaled_tol(max_abs_); }

 private:
  DistanceMatrix(SquareMatrix m, bool checked)
      : d_(std::move(m)),
        metric_checked_(checked),
        row_sums_(d_.row_sums()),
        total_(std::accumulate(row_sums_.begin(), row_sums_.end(), 0.0)),
        max_abs_(d_.max_abs()) {}

  SquareMatrix d_;
  bool metric_checked_ = false;
  std::vector<double> row_sums_;
  double total_ = 0.0;
  double max_abs_ = 0.0;
};

/// Checks D1 (nonnegativity), D2 (zero diagonal), D3 (symmetry) and
/// D4 (triangle inequality) with a witness for each failed axiom.
/// All comparisons use 1e-9 scaled by the largest entry.
inline ValidationReport validate_metric(const SquareMatrix& m) {
  ValidationReport report;
  const int n = m.size();
  const double tol = scaled_tol(m.max_abs());
  for (int x = 0; x < n; ++x) {
    if (std::abs(m(x, x)) > tol) detail::record(report, "D2", {x}, m(x, x));
    for (int y = 0; y < n; ++y) {
      if (m(x, y) < -tol) detail::record(report, "D1", {x, y}, m(x, y));
      if (y > x && std::abs(m(x, y) - m(y, x)) > tol)
        detail::record(report, "D3", {x, y}, m(x, y) - m(y, x));
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (m(x, y) > m(x, z) + m(z, y) + tol)
          detail::record(report, "D4", {x, z, y}, m(x, y) - m(x, z) - m(z, y));
  return report;
}

namespace detail {
inline void require_nonempty(const PointSet& s, const char* arg) {
  if (s.empty()) throw domain_error(std::string(arg) + " must be a nonempty set");
}
}  // namespace detail

/// Mean distance between a point of S1 and a point of S2 (ordered pairs).
inline double avg_distance(const DistanceMatrix& d, const PointSet& s1, const PointSet& s2) {
  detail::require_nonempty(s1, "S1");
  detail::require_nonempty(s2, "S2");
  double acc = 0.0;
  for (int x : s1)
    for (int y : s2) acc += d(x, y);
  return acc / (static_cast<double>(s1.size()) * s2.size());
}

/// Distance from x to y recentered by x's mean distance to the space.
/// May be negative and is not symmetric in its arguments.
inline double relative_distance(const DistanceMatrix& d, int x, int y) {
  return d(x, y) - d.row_mean(x);
}

/// Mean relative distance from a random point to y.
inline double mean_relative_distance(const DistanceMatrix& d, int y) {
  return d.row_sum(y) / d.size() - d.grand_mean();
}

/// Relative distance from set S1 to set S2: mean distance between the two
/// sets recentered by S1's mean distance to the space.
inline double relative_distance(const DistanceMatrix& d, const PointSet& s1, const PointSet& s2) {
  detail::require_nonempty(s1, "S1");
  detail::require_nonempty(s2, "S2");
  double to_omega = 0.0;
  for (int x : s1) to_omega += d.row_mean(x);
  to_omega /= s1.size();
  return avg_distance(d, s1, s2) - to_omega;
}

}  // namespace kset

#endif  // KSET_METRIC_HPP
