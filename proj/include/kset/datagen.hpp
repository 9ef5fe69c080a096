#ifndef KSET_DATAGEN_HPP
#define KSET_DATAGEN_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "kset/errors.hpp"
#include "kset/graph.hpp"
#include "kset/rng.hpp"

namespace kset {

struct RingParams {
  int n_outer = 300;
  int n_inner = 200;
  double r_outer_lo = 20.0, r_outer_hi = 22.0;
  double r_inner_lo = 10.0, r_inner_hi = 12.0;
};

struct RingSample {
  std::vector<std::vector<double>> points;  // 2-D coordinates
  std::vector<int> labels;                  // 0 = outer, 1 = inner
  uint64_t seed = 0;
};

/// Two concentric rings: radius uniform in the ring's interval, angle
/// uniform in [0, 2 pi). Outer points come first. Per point the radius is
/// drawn before the angle, which pins the stream layout for reproduction.
inline RingSample two_rings(const RingParams& p, uint64_t seed) {
  if (p.n_outer <= 0 || p.n_inner <= 0) throw domain_error("ring point counts must be positive");
  if (p.r_outer_lo > p.r_outer_hi || p.r_inner_lo > p.r_inner_hi ||
      p.r_outer_lo <= 0.0 || p.r_inner_lo <= 0.0)
    throw domain_error("radius intervals must be positive and ordered");

  Xoshiro256ss rng(seed);
  RingSample out;
  out.seed = seed;
  auto emit = [&](int count, double lo, double hi, int label) {
    for (int i = 0; i < count; ++i) {
      const double r = rng.uniform(lo, hi);
      const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
      out.points.push_back({r * std::cos(phi), r * std::sin(phi)});
      out.labels.push_back(label);
    }
  };
  emit(p.n_outer, p.r_outer_lo, p.r_outer_hi, 0);
  emit(p.n_inner, p.r_inner_lo, p.r_inner_hi, 1);
  return out;
}

struct SbmParams {
  int n = 1000;
  int q = 2;
  double c_in = 0.0;   // n * within-block edge probability
  double c_out = 0.0;  // n * cross-block edge probability
};

struct SbmSample {
  Graph graph;
  std::vector<int> labels;        // block per surviving node
  std::vector<int> original_ids;  // pre-removal node id per surviving node
  uint64_t seed = 0;
};

/// Solves c_in and c_out from the detectability gap c_in - c_out and the
/// wanted mean degree: c_in + (q-1) c_out = q * mean_degree.
inline SbmParams sbm_params_from_gap(int n, int q, double mean_degree, double gap) {
  SbmParams p;
  p.n = n;
  p.q = q;
  p.c_in = mean_degree + (q - 1) * gap / q;
  p.c_out = mean_degree - gap / q;
  return p;
}

/// Detectability threshold: blocks are recoverable (asymptotically) when
/// |c_in - c_out| exceeds q * sqrt(mean degree).
inline double sbm_detectability_threshold(int q, double mean_degree) {
  if (mean_degree < 0.0) throw domain_error("mean degree must be nonnegative");
  return q * std::sqrt(mean_degree);
}

/// Planted-partition random graph: n nodes split evenly into q blocks,
/// each within-block pair an edge with probability c_in/n, each
/// cross-block pair with c_out/n, all independent. Nodes left isolated are
/// removed and the survivors renumbered in order.
inline SbmSample sbm(const SbmParams& p, uint64_t seed) {
  if (p.n <= 0 || p.q <= 0 || p.n % p.q != 0)
    throw domain_error("q must divide n");
  if (p.c_out > p.c_in || p.c_out < 0.0)
    throw domain_error("need 0 <= c_out <= c_in");
  const double p_in = p.c_in / p.n;
  const double p_out = p.c_out / p.n;
  if (p_in > 1.0) throw domain_error("c_in/n must be a probability");

  const int block = p.n / p.q;
  Xoshiro256ss rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (rng.bernoulli(i / block == j / block ? p_in : p_out)) edges.emplace_back(i, j);

  std::vector<bool> touched(p.n, false);
  for (const auto& [u, v] : edges) touched[u] = touched[v] = true;
  std::vector<int> new_id(p.n, -1);
  SbmSample out;
  out.seed = seed;
  for (int v = 0; v < p.n; ++v)
    if (touched[v]) {
      new_id[v] = static_cast<int>(out.original_ids.size());
      out.original_ids.push_back(v);
      out.labels.push_back(v / block);
    }
  for (auto& [u, v] : edges) {
    u = new_id[u];
    v = new_id[v];
  }
  out.graph = Graph(static_cast<int>(out.original_ids.size()), std::move(edges));
  return out;
}

}  // namespace kset

#endif  // KSET_DATAGEN_HPP
