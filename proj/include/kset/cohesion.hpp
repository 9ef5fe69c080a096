#ifndef KSET_COHESION_HPP
#define KSET_COHESION_HPP

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kset/errors.hpp"
#include "kset/matrix.hpp"
#include "kset/metric.hpp"
#include "kset/validation.hpp"

namespace kset {

enum class CohesionCheck { basic, full };

ValidationReport validate_cohesion(const SquareMatrix& g);

/// Symmetric matrix with zero row sums; positive entries bind points
/// together, negative entries push them apart. C1 (symmetry) and C2
/// (zero row sums) are enforced on construction, the C3 triple
/// inequality is O(n^3) and opt-in.
class CohesionMatrix {
 public:
  static CohesionMatrix from(SquareMatrix m, CohesionCheck check = CohesionCheck::basic) {
    ValidationReport r = validate_cohesion_partial(m, check == CohesionCheck::full);
    if (!r.passed()) throw axiom_error("not a valid cohesion matrix: " + r.summary());
    return CohesionMatrix(std::move(m));
  }

  /// For matrices that satisfy C1-C3 by construction.
  static CohesionMatrix trusted(SquareMatrix m) { return CohesionMatrix(std::move(m)); }

  int size() const { return g_.size(); }
  double operator()(int x, int y) const { return g_(x, y); }
  const SquareMatrix& values() const { return g_; }
  double max_abs() const { return max_abs_; }
  double tolerance() const { return scaled_tol(max_abs_); }

 private:
  static ValidationReport validate_cohesion_partial(const SquareMatrix& m, bool with_triangle);

  explicit CohesionMatrix(SquareMatrix m) : g_(std::move(m)), max_abs_(g_.max_abs()) {}

  SquareMatrix g_;
  double max_abs_ = 0.0;
};

namespace detail {

inline void check_c1_c2(const SquareMatrix& m, ValidationReport& report) {
  const int n = m.size();
  const double tol = scaled_tol(m.max_abs());
  for (int x = 0; x < n; ++x) {
    double row = 0.0;
    for (int y = 0; y < n; ++y) {
      row += m(x, y);
      if (y > x && std::abs(m(x, y) - m(y, x)) > tol)
        record(report, "C1", {x, y}, m(x, y) - m(y, x));
    }
    if (std::abs(row) > tol) record(report, "C2", {x}, row);
  }
}

inline void check_c3(const SquareMatrix& m, ValidationReport& report) {
  const int n = m.size();
  const double tol = scaled_tol(m.max_abs());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const double q = m(x, x) + m(y, z) - m(x, z) - m(x, y);
        if (q < -tol) record(report, "C3", {x, y, z}, q);
      }
}

}  // namespace detail

/// Checks C1 (symmetry), C2 (zero row sums) and C3 (triple inequality)
/// with a witness for each failed axiom.
inline ValidationReport validate_cohesion(const SquareMatrix& g) {
  ValidationReport report;
  detail::check_c1_c2(g, report);
  detail::check_c3(g, report);
  return report;
}

inline ValidationReport CohesionMatrix::validate_cohesion_partial(const SquareMatrix& m,
                                                                  bool with_triangle) {
  ValidationReport report;
  detail::check_c1_c2(m, report);
  if (with_triangle) detail::check_c3(m, report);
  return report;
}

/// Cohesion between two points: positive when x and y are closer to each
/// other than random reference points suggest.
inline double cohesion(const DistanceMatrix& d, int x, int y) {
  return d.row_mean(x) + d.row_mean(y) - d.grand_mean() - d(x, y);
}

/// The dual cohesion measure of a distance matrix (double-centering with
/// a sign flip). Satisfies C1-C3 whenever d satisfies D1-D4.
inline CohesionMatrix cohesion_matrix(const DistanceMatrix& d) {
  const int n = d.size();
  SquareMatrix g(n);
  const double gm = d.grand_mean();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g(x, y) = d.row_mean(x) + d.row_mean(y) - gm - d(x, y);
  return CohesionMatrix::trusted(std::move(g));
}

/// The dual distance measure of a cohesion matrix. Inverts cohesion_matrix
/// exactly (up to rounding). With check = full the cohesion axioms are
/// verified first and an axiom_error names the violated one.
inline DistanceMatrix dual_distance(const CohesionMatrix& g,
                                    CohesionCheck check = CohesionCheck::basic) {
  if (check == CohesionCheck::full) {
    ValidationReport r = validate_cohesion(g.values());
    if (!r.passed()) throw axiom_error("not a valid cohesion matrix: " + r.summary());
  }
  const int n = g.size();
  SquareMatrix d(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) d(x, y) = (g(x, x) + g(y, y)) / 2.0 - g(x, y);
  return DistanceMatrix::from(std::move(d));
}

/// Cohesion between two sets: sum over all ordered pairs.
inline double cohesion(const CohesionMatrix& g, const PointSet& s1, const PointSet& s2) {
  detail::require_nonempty(s1, "S1");
  detail::require_nonempty(s2, "S2");
  double acc = 0.0;
  for (int x : s1)
    for (int y : s2) acc += g(x, y);
  return acc;
}

/// A set is a cluster when it is cohesive to itself.
inline bool is_cluster(const CohesionMatrix& g, const PointSet& s) {
  return cohesion(g, s, s) >= -g.tolerance();
}

/// The ten equivalent characterizations of a cluster, evaluated
/// independently. For a symmetric distance matrix the booleans always
/// agree; values within +-tolerance of zero count as satisfying.
struct ClusterReport {
  // Quantities, in order:
  //   0: coh(S,S)                   >= 0
  //   1: coh(Sc,Sc)                 >= 0
  //   2: coh(S,Sc)                  <= 0
  //   3: coh(S,S) - coh(S,Sc)       >= 0
  //   4: 2 db(S,O) - db(O,O) - db(S,S)     >= 0
  //   5: rc(O||S) - rc(S||S)        >= 0
  //   6: rc(Sc||S) - rc(S||S)       >= 0
  //   7: 2 db(S,Sc) - db(S,S) - db(Sc,Sc)  >= 0
  //   8: rc(S||Sc) - rc(O||Sc)      >= 0
  //   9: rc(Sc||S) - rc(O||S)       >= 0
  std::array<double, 10> values{};
  std::array<bool, 10> satisfied{};
  bool is_cluster = false;

  bool unanimous() const {
    for (bool b : satisfied)
      if (b != satisfied[0]) return false;
    return true;
  }
};

inline ClusterReport cluster_report(const DistanceMatrix& d, const PointSet& s) {
  detail::require_nonempty(s, "S");
  const int n = d.size();
  if (s.size() == n) throw domain_error("S must be a proper subset (complement is empty)");
  const PointSet sc = s.complement(n);
  const PointSet omega = PointSet::full(n);

  const double db_ss = avg_distance(d, s, s);
  const double db_scsc = avg_distance(d, sc, sc);
  const double db_ssc = avg_distance(d, s, sc);
  const double db_so = avg_distance(d, s, omega);
  const double db_sco = avg_distance(d, sc, omega);
  const double db_oo = d.grand_mean();

  const double sz_s = s.size(), sz_sc = sc.size();
  // coh(S1,S2) = |S1||S2| (db(O,S2) + db(S1,O) - db(O,O) - db(S1,S2))
  const double coh_ss = sz_s * sz_s * (2.0 * db_so - db_oo - db_ss);
  const double coh_scsc = sz_sc * sz_sc * (2.0 * db_sco - db_oo - db_scsc);
  const double coh_ssc = sz_s * sz_sc * (db_sco + db_so - db_oo - db_ssc);

  ClusterReport r;
  r.values[0] = coh_ss;
  r.values[1] = coh_scsc;
  r.values[2] = coh_ssc;
  r.values[3] = coh_ss - coh_ssc;
  r.values[4] = 2.0 * db_so - db_oo - db_ss;
  r.values[5] = (db_so - db_oo) - (db_ss - db_so);                    // rc(O||S) - rc(S||S)
  r.values[6] = (db_ssc - db_sco) - (db_ss - db_so);                  // rc(Sc||S) - rc(S||S)
  r.values[7] = 2.0 * db_ssc - db_ss - db_scsc;
  r.values[8] = (db_ssc - db_so) - (db_sco - db_oo);  // rc(S||Sc) - rc(O||Sc)
  r.values[9] = (db_ssc - db_sco) - (db_so - db_oo);  // rc(Sc||S) - rc(O||S)

  const double tol = d.tolerance();
  for (int i = 0; i < 10; ++i) {
    const bool upper_bounded = (i == 2);  // statement 2 asserts <= 0
    r.satisfied[i] = upper_bounded ? r.values[i] <= tol : r.values[i] >= -tol;
  }
  r.is_cluster = r.satisfied[0];
  return r;
}

/// How the unspecified diagonal of a similarity matrix is filled before
/// double-centering it into a cohesion matrix.
enum class SimilarityDiagonal {
  explicit_values,  // caller supplies the diagonal; the triple bound is verified
  spread_default,   // 2 max - min of the off-diagonal entries, one constant
  row_minimal       // per row, the smallest value satisfying the triple bound
};

namespace detail {

/// Smallest admissible diagonal entry for row x:
/// max over distinct y, z (both != x) of b(x,z) + b(x,y) - b(y,z).
inline double row_minimal_diagonal(const SquareMatrix& b, int x) {
  const int n = b.size();
  if (n == 1) return 0.0;
  if (n == 2) return b(x, 1 - x);
  double best = -std::numeric_limits<double>::infinity();
  for (int y = 0; y < n; ++y) {
    if (y == x) continue;
    for (int z = y + 1; z < n; ++z) {
      if (z == x) continue;
      best = std::max(best, b(x, z) + b(x, y) - b(y, z));
    }
  }
  return best;
}

}  // namespace detail

/// Builds a cohesion matrix from a symmetric similarity matrix whose
/// diagonal is meaningless: fill the diagonal per the policy, verify the
/// triple bound, then double-center. Throws domain_error when an explicit
/// diagonal breaks the bound.
inline CohesionMatrix cohesion_from_similarity(const SquareMatrix& b0, SimilarityDiagonal policy,
                                               const std::vector<double>* explicit_diag = nullptr) {
  const int n = b0.size();
  const double tol = scaled_tol(b0.max_abs());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (std::abs(b0(x, y) - b0(y, x)) > tol)
        throw domain_error("similarity matrix must be symmetric off the diagonal");

  SquareMatrix b1 = b0;
  switch (policy) {
    case SimilarityDiagonal::explicit_values: {
      if (!explicit_diag || static_cast<int>(explicit_diag->size()) != n)
        throw domain_error("explicit diagonal must supply one value per point");
      for (int x = 0; x < n; ++x) b1(x, x) = (*explicit_diag)[x];
      break;
    }
    case SimilarityDiagonal::spread_default: {
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          if (first || b1(x, y) > hi) hi = b1(x, y);
          if (first || b1(x, y) < lo) lo = b1(x, y);
          first = false;
        }
      const double diag = first ? 0.0 : 2.0 * hi - lo;
      for (int x = 0; x < n; ++x) b1(x, x) = diag;
      break;
    }
    case SimilarityDiagonal::row_minimal: {
      for (int x = 0; x < n; ++x) b1(x, x) = detail::row_minimal_diagonal(b1, x);
      break;
    }
  }

  for (int x = 0; x < n; ++x) {
    const double need = detail::row_minimal_diagonal(b1, x);
    if (b1(x, x) < need - tol)
      throw domain_error("diagonal entry " + std::to_string(x) + " (" + std::to_string(b1(x, x)) +
                         ") is below the triple bound " + std::to_string(need));
  }

  const std::vector<double> rows = b1.row_sums();
  const double gm = b1.total() / (static_cast<double>(n) * n);
  SquareMatrix g(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g(x, y) = b1(x, y) - rows[y] / n - rows[x] / n + gm;
  return CohesionMatrix::trusted(std::move(g));
}

/// Cohesion measure of a simple undirected graph from its 0/1 adjacency
/// matrix: the similarity construction with diagonal constant 2.
inline CohesionMatrix graph_cohesion(const SquareMatrix& adjacency) {
  const int n = adjacency.size();
  long long two_m = 0;
  std::vector<double> degree(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0.0) throw domain_error("adjacency has a self-loop at node " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      const double a = adjacency(i, j);
      if (a != 0.0 && a != 1.0)
        throw domain_error("adjacency entries must be 0 or 1");
      if (adjacency(i, j) != adjacency(j, i))
        throw domain_error("adjacency must be symmetric");
      degree[i] += a;
      two_m += a != 0.0 ? 1 : 0;
    }
  }
  const double m = two_m / 2.0;
  SquareMatrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      g(i, j) = 2.0 * delta + adjacency(i, j) - (2.0 + degree[i]) / n - (2.0 + degree[j]) / n +
                (2.0 * m + 2.0 * n) / (static_cast<double>(n) * n);
    }
  return CohesionMatrix::trusted(std::move(g));
}

}  // namespace kset

#endif  // KSET_COHESION_HPP
