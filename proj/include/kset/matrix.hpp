#ifndef KSET_MATRIX_HPP
#define KSET_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kset/errors.hpp"

namespace kset {

/// Dense row-major square matrix of doubles. Plain storage; the distance
/// and cohesion wrappers add their axioms on top.
class SquareMatrix {
 public:
  SquareMatrix() = default;

  explicit SquareMatrix(int n, double fill = 0.0) : n_(n), v_(static_cast<size_t>(n) * n, fill) {
    if (n < 0) throw shape_error("matrix size must be nonnegative");
  }

  /// Builds from rows; throws shape_error unless all rows have length n.
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) {
        throw shape_error("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                          " entries, expected " + std::to_string(n));
      }
      for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int size() const { return n_; }

  double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * n_ + j]; }

  double max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

  double total() const {
    double s = 0.0;
    for (double x : v_) s += x;
    return s;
  }

  std::vector<double> row_sums() const {
    std::vector<double> s(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n_; ++j) acc += (*this)(i, j);
      s[i] = acc;
    }
    return s;
  }

  bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && v_ == o.v_; }

 private:
  int n_ = 0;
  std::vector<double> v_;
};

/// Comparison tolerance scaled by the magnitude of the data. Keeps the
/// absolute 1e-9 floor for unit-scale matrices.
inline double scaled_tol(double max_abs, double eps = 1e-9) {
  return eps * std::max(1.0, max_abs);
}

inline double max_abs_difference(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) throw shape_error("matrix size mismatch");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace kset

#endif  // KSET_MATRIX_HPP
