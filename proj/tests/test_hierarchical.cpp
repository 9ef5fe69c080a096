#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "test_support.hpp"

using namespace kset;
using support::l4;
using Catch::Matchers::WithinAbs;

TEST_CASE("golden run on the line fixture", "[hierarchical]") {
  const CohesionMatrix g = cohesion_matrix(l4());
  const MergeTree tree = hierarchical_cluster(g, MergePolicy::greedy_max);

  REQUIRE(tree.events.size() == 1);
  CHECK(tree.events[0].left == 0);
  CHECK(tree.events[0].right == 1);
  CHECK(tree.events[0].merged == 4);
  CHECK_THAT(tree.events[0].gamma, WithinAbs(0.375, 1e-12));

  REQUIRE(tree.final_sets.size() == 3);
  CHECK(tree.final_sets[0] == PointSet{2});
  CHECK(tree.final_sets[1] == PointSet{3});
  CHECK(tree.final_sets[2] == PointSet{0, 1});

  CHECK_THAT(modularity(g, tree.final_partition()), WithinAbs(7.25, 1e-9));
}

TEST_CASE("first_found reaches the same stop state on the line fixture", "[hierarchical]") {
  const CohesionMatrix g = cohesion_matrix(l4());
  const MergeTree tree = hierarchical_cluster(g, MergePolicy::first_found);
  REQUIRE(tree.events.size() == 1);
  CHECK_THAT(modularity(g, tree.final_partition()), WithinAbs(7.25, 1e-9));
}

TEST_CASE("uniform metric never merges", "[hierarchical]") {
  SquareMatrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = i == j ? 0.0 : 1.0;
  const CohesionMatrix g = cohesion_matrix(DistanceMatrix::from(m, MetricCheck::full));
  const MergeTree tree = hierarchical_cluster(g);
  CHECK(tree.events.empty());
  CHECK(tree.final_sets.size() == 3);
}

TEST_CASE("modularity of line fixture partitions", "[hierarchical]") {
  const CohesionMatrix g = cohesion_matrix(l4());
  CHECK_THAT(modularity(g, partition_with_ids({0, 0, 1, 2}, 3)), WithinAbs(7.25, 1e-12));
  CHECK_THAT(modularity(g, partition_with_ids({0, 0, 1, 1}, 2)), WithinAbs(7.0, 1e-12));
  CHECK_THAT(modularity(g, partition_with_ids({0, 0, 0, 0}, 1)), WithinAbs(0.0, 1e-9));
  CHECK_THROWS_AS(modularity(g, partition_with_ids({0, 1}, 2)), domain_error);
}

TEST_CASE("modularity matches the brute force oracle", "[hierarchical][property]") {
  for (uint64_t seed : {2, 4, 6}) {
    const int n = 6;
    const DistanceMatrix d = support::random_metric(n, seed);
    const CohesionMatrix g = cohesion_matrix(d);
    const std::vector<int> labels = support::random_labels(n, 3, seed);
    CHECK_THAT(modularity(g, partition_with_ids(labels, 3)),
               WithinAbs(support::oracle::modularity(d.values(), labels), 1e-9));
  }
}

TEST_CASE("every final set is a cluster and merges only raise Q", "[hierarchical][property]") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);
    const DistanceMatrix d = support::random_metric(n, 40 + seed);
    const CohesionMatrix g = cohesion_matrix(d);
    for (MergePolicy policy : {MergePolicy::greedy_max, MergePolicy::first_found}) {
      const MergeTree tree = hierarchical_cluster(g, policy);
      for (const PointSet& s : tree.final_sets) REQUIRE(is_cluster(g, s));
      for (const MergeEvent& e : tree.events) REQUIRE(e.gamma > 0.0);
      // Q starts at the diagonal sum (all singletons) and grows by exactly
      // 2 gamma at each merge.
      double q = 0.0;
      for (int x = 0; x < n; ++x) q += g(x, x);
      for (const MergeEvent& e : tree.events) {
        const double next = q + 2.0 * e.gamma;
        REQUIRE(next >= q);
        q = next;
      }
      REQUIRE_THAT(modularity(g, tree.final_partition()), WithinAbs(q, 1e-9));
    }
  }
}

TEST_CASE("incremental pair cohesions match recomputation", "[hierarchical][property]") {
  // Replay the merge sequence and recompute every recorded gamma from the
  // point-level matrix.
  for (uint64_t seed : {11, 29}) {
    const int n = 30 + static_cast<int>(seed % 21);
    const DistanceMatrix d = support::random_metric(n, seed);
    const CohesionMatrix g = cohesion_matrix(d);
    const MergeTree tree = hierarchical_cluster(g);
    std::vector<PointSet> by_id(n);
    for (int i = 0; i < n; ++i) by_id[i] = PointSet{i};
    for (const MergeEvent& e : tree.events) {
      const double direct = cohesion(g, by_id[e.left], by_id[e.right]);
      REQUIRE_THAT(e.gamma, WithinAbs(direct, 1e-9));
      std::vector<int> merged(by_id[e.left].members());
      merged.insert(merged.end(), by_id[e.right].members().begin(),
                    by_id[e.right].members().end());
      by_id.emplace_back(merged);
    }
  }
}

TEST_CASE("dendrogram text format", "[hierarchical]") {
  const CohesionMatrix g = cohesion_matrix(l4());
  const MergeTree tree = hierarchical_cluster(g);
  std::ostringstream out;
  io::write_dendrogram(tree, out);
  CHECK(out.str() ==
        "merge 0 1 -> 4 gamma=0.375\n"
        "final 2: 2\n"
        "final 3: 3\n"
        "final 4: 0 1\n");
}

TEST_CASE("karate club stops at three sets with the late joiner alone", "[hierarchical]") {
  const Graph g = io::read_edge_list(std::string(KSET_DATA_DIR) + "/karate.edges");
  REQUIRE(g.size() == 34);
  REQUIRE(g.edge_count() == 78);
  const CohesionMatrix coh = cohesion_matrix(geodesic_distance(g));
  const MergeTree tree = hierarchical_cluster(coh, MergePolicy::greedy_max);

  REQUIRE(tree.final_sets.size() == 3);
  int singleton = -1, with_instructor = -1, with_admin = -1;
  for (int i = 0; i < 3; ++i) {
    if (tree.final_sets[i].size() == 1) singleton = i;
    if (tree.final_sets[i].contains(0)) with_instructor = i;
    if (tree.final_sets[i].contains(33)) with_admin = i;
  }
  REQUIRE(singleton >= 0);
  CHECK(tree.final_sets[singleton] == PointSet{8});
  REQUIRE(with_instructor >= 0);
  REQUIRE(with_admin >= 0);
  CHECK(with_instructor != with_admin);

  // One forced extra merge (most cohesive remaining pair) joins the late
  // joiner to the instructor's set.
  double best = -1e300;
  int bi = -1, bj = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double c = cohesion(coh, tree.final_sets[i], tree.final_sets[j]);
      if (c > best) {
        best = c;
        bi = i;
        bj = j;
      }
    }
  CHECK(best <= 0.0);  // the stop state is incohesive
  CHECK(((bi == singleton && bj == with_instructor) || (bi == with_instructor && bj == singleton)));
}
