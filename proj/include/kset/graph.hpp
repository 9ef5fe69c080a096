#ifndef KSET_GRAPH_HPP
#define KSET_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "kset/cohesion.hpp"
#include "kset/errors.hpp"
#include "kset/matrix.hpp"
#include "kset/metric.hpp"

namespace kset {

/// Undirected simple graph. Edges are stored normalized (u < v, sorted,
/// deduplicated); self-loops are rejected.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(n) {
    if (n < 0) throw domain_error("node count must be nonnegative");
    for (auto& [u, v] : edges) {
      if (u == v) throw domain_error("self-loop at node " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for " + std::to_string(n) + " nodes");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }

  int size() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Component id per node, ids numbered by the smallest contained node.
inline std::vector<int> connected_components(const Graph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (comp[v] == -1) {
          comp[v] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return comp;
}

/// The largest connected component as its own graph. index_map, when
/// given, receives the original node id of every new node.
inline Graph largest_component(const Graph& g, std::vector<int>* index_map = nullptr) {
  const std::vector<int> comp = connected_components(g);
  const int k = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<int> count(k, 0);
  for (int c : comp) count[c]++;
  int best = 0;
  for (int c = 1; c < k; ++c)
    if (count[c] > count[best]) best = c;

  std::vector<int> new_id(g.size(), -1);
  std::vector<int> old_id;
  for (int v = 0; v < g.size(); ++v)
    if (comp[v] == best) {
      new_id[v] = static_cast<int>(old_id.size());
      old_id.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (comp[u] == best) edges.emplace_back(new_id[u], new_id[v]);
  if (index_map) *index_map = old_id;
  return Graph(static_cast<int>(old_id.size()), std::move(edges));
}

enum class Unreachable {
  fail,  // disconnected input is an error
  cap    // unreachable pairs get distance n, which keeps the hop metric
};

/// All-pairs hop distance by BFS from every node. On a disconnected graph
/// the default policy throws, naming one node from each of two components;
/// no finite value is invented unless cap is requested explicitly.
inline DistanceMatrix geodesic_distance(const Graph& g,
                                        Unreachable policy = Unreachable::fail) {
  const int n = g.size();
  SquareMatrix d(n);
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    for (int t = 0; t < n; ++t) {
      if (dist[t] == -1) {
        if (policy == Unreachable::fail)
          throw domain_error("graph is disconnected: no path between node " + std::to_string(s) +
                             " and node " + std::to_string(t));
        d(s, t) = n;  // farther than any path (paths use at most n-1 hops)
      } else {
        d(s, t) = dist[t];
      }
    }
  }
  return DistanceMatrix::trusted(std::move(d), true);
}

namespace detail {

/// Inverts a dense matrix in place by Gauss-Jordan elimination with
/// partial pivoting. Sufficient here: the shifted Laplacian below is
/// symmetric positive definite and small.
inline SquareMatrix invert(SquareMatrix a) {
  const int n = a.size();
  SquareMatrix inv(n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0.0) throw domain_error("singular matrix");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const double inv_p = 1.0 / a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) *= inv_p;
      inv(col, c) *= inv_p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Effective resistance between nodes with every edge a unit resistor.
/// Computed from the Moore-Penrose pseudo-inverse of the graph Laplacian
/// via pinv(L) = (L + J/n)^{-1} - J/n, then
/// r(i,j) = pinv(i,i) + pinv(j,j) - pinv(i,j) - pinv(j,i).
inline DistanceMatrix resistance_distance(const Graph& g) {
  const int n = g.size();
  if (n == 0) return DistanceMatrix::trusted(SquareMatrix(0), true);
  {
    const std::vector<int> comp = connected_components(g);
    for (int v = 0; v < n; ++v)
      if (comp[v] != comp[0])
        throw domain_error("graph is disconnected: no path between node 0 and node " +
                           std::to_string(v));
  }
  SquareMatrix a(n, 1.0 / n);  // J/n, Laplacian added on top
  for (int v = 0; v < n; ++v) a(v, v) += g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) -= 1.0;
    a(v, u) -= 1.0;
  }
  const SquareMatrix pinv = detail::invert(std::move(a));  // pinv(L) + J/n; J/n cancels below
  SquareMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r(i, j) = i == j ? 0.0 : pinv(i, i) + pinv(j, j) - pinv(i, j) - pinv(j, i);
  return DistanceMatrix::trusted(std::move(r), true);
}

/// Neighborhood graph: an edge wherever the Euclidean distance is
/// strictly below eps.
inline Graph epsilon_graph(const std::vector<std::vector<double>>& points, double eps) {
  if (eps <= 0.0) throw domain_error("eps must be positive");
  const int n = static_cast<int>(points.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (points[i].size() != points[0].size())
      throw domain_error("points must share one dimension");
    for (int j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (size_t c = 0; c < points[i].size(); ++c) {
        const double diff = points[i][c] - points[j][c];
        sq += diff * diff;
      }
      if (std::sqrt(sq) < eps) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

inline DistanceMatrix euclidean_distance(const std::vector<std::vector<double>>& points) {
  const int n = static_cast<int>(points.size());
  SquareMatrix d(n);
  for (int i = 0; i < n; ++i) {
    if (points[i].size() != points[0].size())
      throw domain_error("points must share one dimension");
    for (int j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (size_t c = 0; c < points[i].size(); ++c) {
        const double diff = points[i][c] - points[j][c];
        sq += diff * diff;
      }
      d(i, j) = d(j, i) = std::sqrt(sq);
    }
  }
  return DistanceMatrix::trusted(std::move(d), true);
}

inline SquareMatrix adjacency_matrix(const Graph& g) {
  SquareMatrix a(g.size());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

inline CohesionMatrix graph_cohesion(const Graph& g) { return graph_cohesion(adjacency_matrix(g)); }

}  // namespace kset

#endif  // KSET_GRAPH_HPP
