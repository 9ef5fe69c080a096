// kset: deterministic command-line front end for the clustering toolkit.
// Subcommands cover data generation, distance construction, clustering,
// verification, and scoring; stages communicate through files so that a
// pipeline can be replayed step by step.
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 verification failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kset/kset.hpp"

using json = nlohmann::ordered_json;
using namespace kset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerification = 3;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_report(const std::string& path, json report, const Timer& timer) {
  if (path.empty()) return;
  report["timing"] = {{"seconds", timer.seconds()}};
  std::ofstream out(path);
  if (!out) throw data_error(path + ": cannot open for writing");
  out << report.dump(2) << '\n';
}

int usage_error(const std::string& msg) {
  std::cerr << "usage error: " << msg << '\n';
  return kExitUsage;
}

DistanceMatrix load_distance(const std::string& path) {
  try {
    return DistanceMatrix::from(io::read_matrix_csv(path));
  } catch (const axiom_error& e) {
    throw data_error(path + ": " + e.what());
  }
}

CohesionMatrix load_cohesion(const std::string& path) {
  try {
    return CohesionMatrix::from(io::read_matrix_csv(path));
  } catch (const axiom_error& e) {
    throw data_error(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- gen ----

struct GenRingsArgs {
  uint64_t seed = 0;
  RingParams params;
  std::vector<double> r_outer{20.0, 22.0};
  std::vector<double> r_inner{10.0, 12.0};
  std::string out;
  std::string labels_out;
  std::string report;
};

int run_gen_rings(const GenRingsArgs& a) {
  Timer timer;
  RingParams p = a.params;
  p.r_outer_lo = a.r_outer[0];
  p.r_outer_hi = a.r_outer[1];
  p.r_inner_lo = a.r_inner[0];
  p.r_inner_hi = a.r_inner[1];
  const RingSample sample = two_rings(p, a.seed);
  io::write_points_csv(sample.points, sample.labels, a.out);
  if (!a.labels_out.empty()) io::write_labels(sample.labels, a.labels_out);
  json report = {{"command", "gen rings"},
                 {"config",
                  {{"seed", a.seed},
                   {"n_outer", p.n_outer},
                   {"n_inner", p.n_inner},
                   {"r_outer", {p.r_outer_lo, p.r_outer_hi}},
                   {"r_inner", {p.r_inner_lo, p.r_inner_hi}},
                   {"out", a.out}}},
                 {"results", {{"points", sample.points.size()}}}};
  write_report(a.report, std::move(report), timer);
  return kExitOk;
}

struct GenSbmArgs {
  uint64_t seed = 0;
  int n = 1000;
  int q = 2;
  double c_in = -1.0;
  double c_out = -1.0;
  double mean_degree = -1.0;
  double gap = -1.0;
  std::string out;
  std::string labels_out;
  std::string report;
};

int run_gen_sbm(const GenSbmArgs& a) {
  Timer timer;
  SbmParams p;
  if (a.mean_degree >= 0.0 || a.gap >= 0.0) {
    if (a.gap < 0.0) return usage_error("--mean-degree needs --gap");
    if (a.c_in >= 0.0 || a.c_out >= 0.0)
      return usage_error("give either --c-in/--c-out or --mean-degree/--gap, not both");
    p = sbm_params_from_gap(a.n, a.q, a.mean_degree >= 0.0 ? a.mean_degree : 3.0, a.gap);
  } else {
    if (a.c_in < 0.0 || a.c_out < 0.0)
      return usage_error("need --c-in and --c-out (or --mean-degree with --gap)");
    p.n = a.n;
    p.q = a.q;
    p.c_in = a.c_in;
    p.c_out = a.c_out;
  }
  const SbmSample sample = sbm(p, a.seed);
  io::write_edge_list(sample.graph, a.out);
  if (!a.labels_out.empty()) io::write_labels(sample.labels, a.labels_out);
  json report = {{"command", "gen sbm"},
                 {"config",
                  {{"seed", a.seed},
                   {"n", p.n},
                   {"q", p.q},
                   {"c_in", p.c_in},
                   {"c_out", p.c_out},
                   {"out", a.out}}},
                 {"results",
                  {{"nodes", sample.graph.size()},
                   {"edges", sample.graph.edge_count()},
                   {"removed_isolated", p.n - sample.graph.size()},
                   {"detectability_threshold", sbm_detectability_threshold(p.q, (p.c_in + (p.q - 1) * p.c_out) / p.q)}}}};
  write_report(a.report, std::move(report), timer);
  return kExitOk;
}

// --------------------------------------------------------------- dist ----

struct DistArgs {
  std::string points;
  std::string graph;
  std::string out;
  double eps = 5.0;
  bool labeled = false;
  std::string unreachable = "fail";
  bool largest_comp = false;
  std::string report;
};

int run_dist(const std::string& kind, const DistArgs& a) {
  Timer timer;
  std::optional<DistanceMatrix> d;
  int dropped_nodes = 0;
  if (kind == "euclidean") {
    if (a.points.empty()) return usage_error("dist euclidean needs --points");
    d = euclidean_distance(io::read_points_csv(a.points, a.labeled));
  } else {
    Graph g;
    if (!a.points.empty()) {
      if (kind == "resistance") return usage_error("dist resistance works on --graph input");
      g = epsilon_graph(io::read_points_csv(a.points, a.labeled), a.eps);
    } else if (!a.graph.empty()) {
      g = io::read_edge_list(a.graph, &std::cerr);
    } else {
      return usage_error("dist " + kind + " needs --points or --graph");
    }
    if (a.largest_comp) {
      const int before = g.size();
      g = largest_component(g);
      dropped_nodes = before - g.size();
      if (dropped_nodes > 0)
        std::cerr << "note: kept the largest component (" << g.size() << " of " << before
                  << " nodes)\n";
    }
    if (kind == "geodesic") {
      d = geodesic_distance(g, a.unreachable == "cap" ? Unreachable::cap : Unreachable::fail);
    } else {
      d = resistance_distance(g);
    }
  }
  io::write_matrix_csv(d->values(), a.out);
  json report = {{"command", "dist " + kind},
                 {"config",
                  {{"points", a.points},
                   {"graph", a.graph},
                   {"eps", a.eps},
                   {"unreachable", a.unreachable},
                   {"largest_component", a.largest_comp},
                   {"out", a.out}}},
                 {"results", {{"n", d->size()}, {"dropped_nodes", dropped_nodes}}}};
  write_report(a.report, std::move(report), timer);
  return kExitOk;
}

// ------------------------------------------------------------ cluster ----

struct ClusterArgs {
  std::string dist;
  std::string cohesion;
  std::string out;
  std::string report;
  std::string truth;
  std::string policy = "greedy";
  std::string dendrogram;
  std::string init;
  int k = 2;
  uint64_t seed = 0;
  int max_passes = 100;
  int restarts = 1;
};

void maybe_score(json& results, const ClusterArgs& a, const std::vector<int>& labels) {
  if (a.truth.empty()) return;
  results["nmi"] = nmi(labels, io::read_labels(a.truth));
}

int run_cluster_hier(const ClusterArgs& a) {
  Timer timer;
  const DistanceMatrix d = load_distance(a.dist);
  const CohesionMatrix g = cohesion_matrix(d);
  const MergePolicy policy =
      a.policy == "first" ? MergePolicy::first_found : MergePolicy::greedy_max;
  const MergeTree tree = hierarchical_cluster(g, policy);
  const Partition p = tree.final_partition();
  io::write_labels(p.assignment(), a.out);
  if (!a.dendrogram.empty()) {
    std::ofstream out(a.dendrogram);
    if (!out) throw data_error(a.dendrogram + ": cannot open for writing");
    io::write_dendrogram(tree, out);
  }
  json results = {{"k", p.k()}, {"merges", tree.events.size()}, {"q", modularity(g, p)},
                  {"r", normalized_modularity(g, p)}};
  maybe_score(results, a, p.assignment());
  json report = {{"command", "cluster hier"},
                 {"config",
                  {{"dist", a.dist}, {"policy", a.policy}, {"out", a.out}}},
                 {"results", results}};
  write_report(a.report, std::move(report), timer);
  return kExitOk;
}

template <class Matrix, class Runner>
int run_cluster_ksets_impl(const std::string& command, const ClusterArgs& a, const Matrix& m,
                           const CohesionMatrix& scoring, Runner runner) {
  Timer timer;
  if (a.k < 2 || a.k > m.size())
    return usage_error("--k must be in [2, n]; n is " + std::to_string(m.size()));
  if (a.restarts < 1) return usage_error("--restarts must be >= 1");

  std::optional<KSetsRun> best;
  uint64_t used_seed = a.seed;
  if (!a.init.empty()) {
    const std::vector<int> labels = io::read_labels(a.init);
    best = runner(partition_with_ids(labels, a.k));
  } else {
    for (int t = 0; t < a.restarts; ++t) {
      KSetsRun run = runner(random_partition(m.size(), a.k, a.seed + t));
      if (!best || run.r_trace.back() > best->r_trace.back()) {
        best = std::move(run);
        used_seed = a.seed + t;
      }
    }
  }
  io::write_labels(best->final.assignment(), a.out);
  json results = {{"k", a.k},
                  {"moves", best->moves()},
                  {"passes", best->passes},
                  {"converged", best->converged},
                  {"q", modularity(scoring, best->final)},
                  {"r", normalized_modularity(scoring, best->final)},
                  {"seed_used", used_seed}};
  maybe_score(results, a, best->final.assignment());
  json report = {{"command", command},
                 {"config",
                  {{"k", a.k},
                   {"seed", a.seed},
                   {"init", a.init},
                   {"max_passes", a.max_passes},
                   {"restarts", a.restarts},
                   {"out", a.out}}},
                 {"results", results}};
  write_report(a.report, std::move(report), timer);
  return kExitOk;
}

int run_cluster_ksets(const ClusterArgs& a) {
  const DistanceMatrix d = load_distance(a.dist);
  const CohesionMatrix g = cohesion_matrix(d);
  return run_cluster_ksets_impl("cluster ksets", a, d, g, [&](const Partition& init) {
    return k_sets(d, a.k, init, a.max_passes);
  });
}

int run_cluster_dual_ksets(const ClusterArgs& a) {
  const CohesionMatrix g = load_cohesion(a.cohesion);
  return run_cluster_ksets_impl("cluster dual-ksets", a, g, g, [&](const Partition& init) {
    return dual_k_sets(g, a.k, init, a.max_passes);
  });
}

// ------------------------------------------------------------- verify ----

struct VerifyArgs {
  std::string in;
  double tol = 1e-9;
  std::string set_spec;
  bool all_subsets = false;
  std::string report;
};

int run_verify(const std::string& kind, const VerifyArgs& a) {
  Timer timer;
  json results;
  bool ok = true;

  if (kind == "metric" || kind == "cohesion") {
    const SquareMatrix m = io::read_matrix_csv(a.in);
    const ValidationReport r = kind == "metric" ? validate_metric(m) : validate_cohesion(m);
    ok = r.passed();
    results["passed"] = ok;
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(v.describe());
    results["violations"] = violations;
    std::cout << (ok ? "ok: " : "FAIL: ") << r.summary() << '\n';
  } else if (kind == "duality") {
    const DistanceMatrix d = load_distance(a.in);
    const CohesionMatrix beta = cohesion_matrix(d);
    const DistanceMatrix d2 = dual_distance(beta);
    const CohesionMatrix beta2 = cohesion_matrix(d2);
    const double derr = max_abs_difference(d.values(), d2.values());
    const double berr = max_abs_difference(beta.values(), beta2.values());
    ok = derr < a.tol && berr < a.tol;
    results["distance_roundtrip_error"] = derr;
    results["cohesion_roundtrip_error"] = berr;
    results["tolerance"] = a.tol;
    results["passed"] = ok;
    std::cout << (ok ? "ok" : "FAIL") << ": max round-trip error distance=" << derr
              << " cohesion=" << berr << " (tolerance " << a.tol << ")\n";
  } else {  // theorem1
    const DistanceMatrix d = load_distance(a.in);
    const int n = d.size();
    std::vector<PointSet> subsets;
    if (a.all_subsets) {
      if (n > 16) return usage_error("--all-subsets is limited to n <= 16");
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> xs;
        for (int b = 0; b < n; ++b)
          if (mask & (1u << b)) xs.push_back(b);
        subsets.emplace_back(xs);
      }
    } else if (!a.set_spec.empty()) {
      std::vector<int> xs;
      std::istringstream ss(a.set_spec);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          xs.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          return usage_error("--set expects comma-separated integers, got '" + tok + "'");
        }
        if (xs.back() < 0 || xs.back() >= n)
          return usage_error("--set index " + std::to_string(xs.back()) +
                             " out of range for n=" + std::to_string(n));
      }
      subsets.emplace_back(xs);
    } else {
      return usage_error("verify theorem1 needs --set or --all-subsets");
    }
    int clusters = 0;
    int disagreements = 0;
    for (const PointSet& s : subsets) {
      const ClusterReport r = cluster_report(d, s);
      clusters += r.is_cluster ? 1 : 0;
      disagreements += r.unanimous() ? 0 : 1;
    }
    ok = disagreements == 0;
    results["subsets"] = subsets.size();
    results["clusters"] = clusters;
    results["disagreements"] = disagreements;
    results["passed"] = ok;
    std::cout << (ok ? "ok" : "FAIL") << ": " << subsets.size() << " subset(s), " << clusters
              << " cluster(s), " << disagreements << " statement disagreement(s)\n";
    if (subsets.size() == 1) {
      const ClusterReport r = cluster_report(d, subsets[0]);
      json vals = json::array();
      for (double v : r.values) vals.push_back(v);
      results["values"] = vals;
      results["is_cluster"] = r.is_cluster;
    }
  }

  json report = {{"command", "verify " + kind},
                 {"config", {{"in", a.in}, {"tol", a.tol}}},
                 {"results", results}};
  write_report(a.report, std::move(report), timer);
  return ok ? kExitOk : kExitVerification;
}

// -------------------------------------------------------------- score ----

struct ScoreArgs {
  std::string pred;
  std::string truth;
  std::string dist;
  std::string cohesion;
  std::string labels;
  std::string report;
};

int run_score_nmi(const ScoreArgs& a) {
  Timer timer;
  const double value = nmi(io::read_labels(a.pred), io::read_labels(a.truth));
  std::cout << value << '\n';
  json report = {{"command", "score nmi"},
                 {"config", {{"pred", a.pred}, {"truth", a.truth}}},
                 {"results", {{"nmi", value}}}};
  write_report(a.report, std::move(report), timer);
  return kExitOk;
}

int run_score_modularity(const ScoreArgs& a) {
  Timer timer;
  if (a.dist.empty() == a.cohesion.empty())
    return usage_error("score modularity needs exactly one of --dist or --cohesion");
  const CohesionMatrix g = a.dist.empty() ? load_cohesion(a.cohesion)
                                          : cohesion_matrix(load_distance(a.dist));
  const std::vector<int> labels = io::read_labels(a.labels);
  if (static_cast<int>(labels.size()) != g.size())
    throw data_error(a.labels + ": " + std::to_string(labels.size()) + " labels for " +
                     std::to_string(g.size()) + " points");
  const Partition p = Partition::from_assignment(labels);
  const double q = modularity(g, p);
  const double r = normalized_modularity(g, p);
  std::cout << "Q=" << q << " R=" << r << '\n';
  json report = {{"command", "score modularity"},
                 {"config", {{"dist", a.dist}, {"cohesion", a.cohesion}, {"labels", a.labels}}},
                 {"results", {{"q", q}, {"r", r}, {"k", p.k()}}}};
  write_report(a.report, std::move(report), timer);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohesion-based clustering toolkit for finite metric spaces"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate synthetic datasets");
  gen->require_subcommand(1);
  GenRingsArgs rings;
  auto* gen_rings = gen->add_subcommand("rings", "two concentric rings with labels");
  gen_rings->add_option("--seed", rings.seed, "RNG seed")->capture_default_str();
  gen_rings->add_option("--n-outer", rings.params.n_outer)->capture_default_str();
  gen_rings->add_option("--n-inner", rings.params.n_inner)->capture_default_str();
  gen_rings->add_option("--r-outer", rings.r_outer, "outer radius interval lo hi")
      ->expected(2)
      ->capture_default_str();
  gen_rings->add_option("--r-inner", rings.r_inner, "inner radius interval lo hi")
      ->expected(2)
      ->capture_default_str();
  gen_rings->add_option("--out", rings.out, "points CSV (x,y,label)")->required();
  gen_rings->add_option("--labels", rings.labels_out, "label file (one per line)");
  gen_rings->add_option("--report", rings.report, "run report JSON");

  GenSbmArgs sbmargs;
  auto* gen_sbm = gen->add_subcommand("sbm", "stochastic block model graph");
  gen_sbm->add_option("--seed", sbmargs.seed)->capture_default_str();
  gen_sbm->add_option("--n", sbmargs.n)->capture_default_str();
  gen_sbm->add_option("--q", sbmargs.q, "number of blocks")->capture_default_str();
  gen_sbm->add_option("--c-in", sbmargs.c_in, "n * within-block edge probability");
  gen_sbm->add_option("--c-out", sbmargs.c_out, "n * cross-block edge probability");
  gen_sbm->add_option("--mean-degree", sbmargs.mean_degree,
                      "solve c_in/c_out from mean degree (3 when only --gap is given)");
  gen_sbm->add_option("--gap", sbmargs.gap, "c_in - c_out to pair with --mean-degree");
  gen_sbm->add_option("--out", sbmargs.out, "edge list file")->required();
  gen_sbm->add_option("--labels", sbmargs.labels_out, "block label file");
  gen_sbm->add_option("--report", sbmargs.report);

  // dist
  auto* dist = app.add_subcommand("dist", "build a distance matrix");
  dist->require_subcommand(1);
  DistArgs dist_args[3];
  const char* dist_kinds[3] = {"geodesic", "resistance", "euclidean"};
  const char* dist_help[3] = {"hop distance on a graph (or eps-graph of points)",
                              "effective resistance distance on a graph",
                              "euclidean distance between points"};
  CLI::App* dist_subs[3];
  for (int i = 0; i < 3; ++i) {
    auto* sc = dist->add_subcommand(dist_kinds[i], dist_help[i]);
    DistArgs& da = dist_args[i];
    sc->add_option("--points", da.points, "points CSV");
    sc->add_option("--graph", da.graph, "edge list file");
    sc->add_option("--eps", da.eps, "eps-graph threshold for --points")->capture_default_str();
    sc->add_flag("--labeled", da.labeled, "points CSV carries a trailing label column");
    sc->add_option("--out", da.out, "distance matrix CSV")->required();
    sc->add_option("--report", da.report);
    if (std::string(dist_kinds[i]) == "geodesic")
      sc->add_option("--unreachable", da.unreachable, "fail|cap: disconnected-pair policy")
          ->check(CLI::IsMember({"fail", "cap"}))
          ->capture_default_str();
    if (std::string(dist_kinds[i]) != "euclidean")
      sc->add_flag("--largest-component", da.largest_comp,
                   "keep only the largest connected component");
    dist_subs[i] = sc;
  }

  // cluster
  auto* cluster = app.add_subcommand("cluster", "cluster a distance or cohesion matrix");
  cluster->require_subcommand(1);
  ClusterArgs hier_args;
  auto* cluster_hier = cluster->add_subcommand("hier", "agglomerative merging of cohesive sets");
  cluster_hier->add_option("--dist", hier_args.dist, "distance matrix CSV")->required();
  cluster_hier->add_option("--policy", hier_args.policy, "greedy|first")
      ->check(CLI::IsMember({"greedy", "first"}))
      ->capture_default_str();
  cluster_hier->add_option("--out", hier_args.out, "cluster labels out")->required();
  cluster_hier->add_option("--dendrogram", hier_args.dendrogram, "merge trace out");
  cluster_hier->add_option("--truth", hier_args.truth, "ground-truth labels for NMI");
  cluster_hier->add_option("--report", hier_args.report);

  ClusterArgs ksets_args;
  auto* cluster_ksets = cluster->add_subcommand("ksets", "K-sets on a distance matrix");
  cluster_ksets->add_option("--dist", ksets_args.dist)->required();
  cluster_ksets->add_option("--k", ksets_args.k, "number of sets")->required();
  cluster_ksets->add_option("--seed", ksets_args.seed)->capture_default_str();
  cluster_ksets->add_option("--init", ksets_args.init, "initial labels (overrides --seed)");
  cluster_ksets->add_option("--max-passes", ksets_args.max_passes)->capture_default_str();
  cluster_ksets->add_option("--restarts", ksets_args.restarts, "random restarts, best R wins")
      ->capture_default_str();
  cluster_ksets->add_option("--out", ksets_args.out)->required();
  cluster_ksets->add_option("--truth", ksets_args.truth, "ground-truth labels for NMI");
  cluster_ksets->add_option("--report", ksets_args.report);

  ClusterArgs dual_args;
  auto* cluster_dual = cluster->add_subcommand("dual-ksets", "K-sets on a cohesion matrix");
  cluster_dual->add_option("--cohesion", dual_args.cohesion)->required();
  cluster_dual->add_option("--k", dual_args.k)->required();
  cluster_dual->add_option("--seed", dual_args.seed)->capture_default_str();
  cluster_dual->add_option("--init", dual_args.init);
  cluster_dual->add_option("--max-passes", dual_args.max_passes)->capture_default_str();
  cluster_dual->add_option("--restarts", dual_args.restarts)->capture_default_str();
  cluster_dual->add_option("--out", dual_args.out)->required();
  cluster_dual->add_option("--truth", dual_args.truth);
  cluster_dual->add_option("--report", dual_args.report);

  // verify
  auto* verify = app.add_subcommand("verify", "check axioms and identities");
  verify->require_subcommand(1);
  VerifyArgs verify_args[4];
  const char* verify_kinds[4] = {"metric", "cohesion", "duality", "theorem1"};
  const char* verify_help[4] = {"distance axioms D1-D4 with witnesses",
                                "cohesion axioms C1-C3 with witnesses",
                                "distance<->cohesion round trip error",
                                "the ten equivalent cluster statements"};
  CLI::App* verify_subs[4];
  for (int i = 0; i < 4; ++i) {
    auto* sc = verify->add_subcommand(verify_kinds[i], verify_help[i]);
    VerifyArgs& va = verify_args[i];
    sc->add_option("--in", va.in, "matrix CSV")->required();
    sc->add_option("--tol", va.tol)->capture_default_str();
    sc->add_option("--report", va.report);
    if (std::string(verify_kinds[i]) == "theorem1") {
      sc->add_option("--set", va.set_spec, "comma-separated point indices");
      sc->add_flag("--all-subsets", va.all_subsets, "check every proper nonempty subset");
    }
    verify_subs[i] = sc;
  }

  // score
  auto* score = app.add_subcommand("score", "evaluate a clustering");
  score->require_subcommand(1);
  ScoreArgs nmi_args;
  auto* score_nmi = score->add_subcommand("nmi", "normalized mutual information");
  score_nmi->add_option("--pred", nmi_args.pred)->required();
  score_nmi->add_option("--truth", nmi_args.truth)->required();
  score_nmi->add_option("--report", nmi_args.report);
  ScoreArgs mod_args;
  auto* score_mod = score->add_subcommand("modularity", "modularity Q and normalized R");
  score_mod->add_option("--dist", mod_args.dist);
  score_mod->add_option("--cohesion", mod_args.cohesion);
  score_mod->add_option("--labels", mod_args.labels)->required();
  score_mod->add_option("--report", mod_args.report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_rings->parsed()) return run_gen_rings(rings);
    if (gen_sbm->parsed()) return run_gen_sbm(sbmargs);
    for (int i = 0; i < 3; ++i)
      if (dist_subs[i]->parsed()) return run_dist(dist_kinds[i], dist_args[i]);
    if (cluster_hier->parsed()) return run_cluster_hier(hier_args);
    if (cluster_ksets->parsed()) return run_cluster_ksets(ksets_args);
    if (cluster_dual->parsed()) return run_cluster_dual_ksets(dual_args);
    for (int i = 0; i < 4; ++i)
      if (verify_subs[i]->parsed()) return run_verify(verify_kinds[i], verify_args[i]);
    if (score_nmi->parsed()) return run_score_nmi(nmi_args);
    if (score_mod->parsed()) return run_score_modularity(mod_args);
  } catch (const data_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const axiom_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
