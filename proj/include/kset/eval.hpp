#ifndef KSET_EVAL_HPP
#define KSET_EVAL_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "kset/errors.hpp"

namespace kset {

/// Joint label counts between two labelings of the same points.
struct ContingencyTable {
  long long n = 0;
  std::vector<std::vector<long long>> counts;  // rows: labels of a, cols: labels of b
  std::vector<long long> row_marginals;
  std::vector<long long> col_marginals;

  static ContingencyTable build(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
      throw domain_error("labelings differ in length: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    std::map<int, int> ra, rb;  // label -> compact row/col index
    for (int x : a) ra.emplace(x, 0);
    for (int x : b) rb.emplace(x, 0);
    int next = 0;
    for (auto& [label, id] : ra) id = next++;
    next = 0;
    for (auto& [label, id] : rb) id = next++;

    ContingencyTable t;
    t.n = static_cast<long long>(a.size());
    t.counts.assign(ra.size(), std::vector<long long>(rb.size(), 0));
    t.row_marginals.assign(ra.size(), 0);
    t.col_marginals.assign(rb.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      const int r = ra[a[i]], c = rb[b[i]];
      t.counts[r][c]++;
      t.row_marginals[r]++;
      t.col_marginals[c]++;
    }
    return t;
  }

  double entropy_rows() const { return entropy(row_marginals); }
  double entropy_cols() const { return entropy(col_marginals); }

  double mutual_information() const {
    double mi = 0.0;
    for (size_t r = 0; r < counts.size(); ++r)
      for (size_t c = 0; c < counts[r].size(); ++c) {
        const long long joint = counts[r][c];
        if (joint == 0) continue;
        const double p = static_cast<double>(joint) / n;
        mi += p * std::log(static_cast<double>(joint) * n /
                           (static_cast<double>(row_marginals[r]) * col_marginals[c]));
      }
    return mi;
  }

 private:
  double entropy(const std::vector<long long>& marginals) const {
    double h = 0.0;
    for (long long m : marginals) {
      if (m == 0) continue;
      const double p = static_cast<double>(m) / n;
      h -= p * std::log(p);
    }
    return h;
  }
};

namespace detail {

/// Labels mapped to first-appearance order, so two labelings describe the
/// same partition iff their canonical forms match.
inline std::vector<int> canonical_labels(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  std::map<int, int> seen;
  int next = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    auto [it, fresh] = seen.emplace(a[i], next);
    if (fresh) ++next;
    out[i] = it->second;
  }
  return out;
}

}  // namespace detail

/// Normalized mutual information with sqrt normalization and natural-log
/// entropies. Identical partitions (under any relabeling, including the
/// single-cluster pair) score exactly 1; otherwise a zero entropy on
/// either side scores 0.
inline double nmi(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size())
    throw domain_error("labelings differ in length: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  if (detail::canonical_labels(a) == detail::canonical_labels(b)) return 1.0;
  const ContingencyTable t = ContingencyTable::build(a, b);
  const double ha = t.entropy_rows(), hb = t.entropy_cols();
  if (ha == 0.0 || hb == 0.0) return 0.0;
  return t.mutual_information() / std::sqrt(ha * hb);
}

}  // namespace kset

#endif  // KSET_EVAL_HPP
