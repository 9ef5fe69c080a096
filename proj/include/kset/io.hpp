#ifndef KSET_IO_HPP
#define KSET_IO_HPP

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kset/errors.hpp"
#include "kset/graph.hpp"
#include "kset/hierarchical.hpp"
#include "kset/matrix.hpp"

namespace kset {
namespace io {

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error(path + ": cannot open for reading");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error(path + ": cannot open for writing");
  return out;
}

inline double parse_double(const std::string& tok, const std::string& path, int line) {
  try {
    size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw data_error(path + ":" + std::to_string(line) + ": not a number: '" + tok + "'");
  }
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Reads an n x n matrix: n lines of n comma-separated numbers, no header.
inline SquareMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in = detail::open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto toks = detail::split_csv(line);
    std::vector<double> row;
    row.reserve(toks.size());
    for (const auto& t : toks) row.push_back(detail::parse_double(t, path, lineno));
    if (!rows.empty() && row.size() != rows.front().size())
      throw data_error(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(rows.front().size()) + " columns, got " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw data_error(path + ": empty matrix file");
  if (rows.size() != rows.front().size())
    throw data_error(path + ": " + std::to_string(rows.size()) + " rows but " +
                     std::to_string(rows.front().size()) + " columns");
  return SquareMatrix::from_rows(rows);
}

inline void write_matrix_csv(const SquareMatrix& m, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) out << ',';
      out << detail::format_double(m(i, j));
    }
    out << '\n';
  }
}

/// One integer label per line, line i belongs to point i.
inline std::vector<int> read_labels(const std::string& path) {
  std::ifstream in = detail::open_input(path);
  std::vector<int> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      size_t used = 0;
      labels.push_back(std::stoi(line, &used));
      while (used < line.size() && std::isspace(static_cast<unsigned char>(line[used]))) ++used;
      if (used != line.size()) throw std::invalid_argument(line);
    } catch (const std::exception&) {
      throw data_error(path + ":" + std::to_string(lineno) + ": not an integer label: '" + line +
                       "'");
    }
  }
  return labels;
}

inline void write_labels(const std::vector<int>& labels, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  for (int l : labels) out << l << '\n';
}

/// Point rows as CSV. With expect_label the last column is a ground-truth
/// integer label, the rest are coordinates.
inline std::vector<std::vector<double>> read_points_csv(const std::string& path, bool expect_label,
                                                        std::vector<int>* labels = nullptr) {
  std::ifstream in = detail::open_input(path);
  std::vector<std::vector<double>> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto toks = detail::split_csv(line);
    const size_t coords = expect_label ? toks.size() - 1 : toks.size();
    if (coords < 1)
      throw data_error(path + ":" + std::to_string(lineno) + ": no coordinates in row");
    std::vector<double> row;
    for (size_t c = 0; c < coords; ++c) row.push_back(detail::parse_double(toks[c], path, lineno));
    if (!pts.empty() && row.size() != pts.front().size())
      throw data_error(path + ":" + std::to_string(lineno) + ": ragged point dimensions");
    pts.push_back(std::move(row));
    if (expect_label && labels)
      labels->push_back(static_cast<int>(detail::parse_double(toks.back(), path, lineno)));
  }
  return pts;
}

inline void write_points_csv(const std::vector<std::vector<double>>& pts,
                             const std::vector<int>& labels, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t c = 0; c < pts[i].size(); ++c) {
      if (c) out << ',';
      out << detail::format_double(pts[i][c]);
    }
    if (!labels.empty()) out << ',' << labels[i];
    out << '\n';
  }
}

/// Whitespace-separated "u v" pairs, one per line; '#' starts a comment
/// line. Node count is max id + 1 unless a larger count is forced.
/// Duplicate edges collapse with a warning; self-loops are an error.
inline Graph read_edge_list(const std::string& path, std::ostream* warnings = nullptr,
                            int min_nodes = 0) {
  std::ifstream in = detail::open_input(path);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v))
      throw data_error(path + ":" + std::to_string(lineno) + ": expected 'u v' pair");
    std::string trailing;
    if (ls >> trailing)
      throw data_error(path + ":" + std::to_string(lineno) + ": trailing token '" + trailing + "'");
    if (u < 0 || v < 0)
      throw data_error(path + ":" + std::to_string(lineno) + ": negative node id");
    if (u == v)
      throw data_error(path + ":" + std::to_string(lineno) + ": self-loop at node " +
                       std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
  }
  const int n = std::max(max_id + 1, min_nodes);
  Graph g(n, edges);
  if (warnings && g.edge_count() < static_cast<int>(edges.size()))
    *warnings << path << ": collapsed " << edges.size() - g.edge_count()
              << " duplicate edge(s)\n";
  return g;
}

inline void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Text dendrogram: one line per merge, then the surviving sets.
inline void write_dendrogram(const MergeTree& tree, std::ostream& out) {
  for (const auto& e : tree.events) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", e.gamma);
    out << "merge " << e.left << ' ' << e.right << " -> " << e.merged << " gamma=" << buf << '\n';
  }
  for (size_t i = 0; i < tree.final_sets.size(); ++i) {
    out << "final " << tree.final_ids[i] << ':';
    for (int x : tree.final_sets[i]) out << ' ' << x;
    out << '\n';
  }
}

}  // namespace io
}  // namespace kset

#endif  // KSET_IO_HPP
