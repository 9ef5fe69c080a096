#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace kset;
using support::l4;
using Catch::Matchers::WithinAbs;

TEST_CASE("validate_metric accepts the line fixture", "[metric]") {
  const ValidationReport r = validate_metric(l4().values());
  CHECK(r.passed());
}

TEST_CASE("validate_metric accepts a single point", "[metric]") {
  CHECK(validate_metric(SquareMatrix(1)).passed());
}

TEST_CASE("validate_metric reports asymmetry with a witness", "[metric]") {
  SquareMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 2.0;
  const ValidationReport r = validate_metric(m);
  REQUIRE_FALSE(r.passed());
  const AxiomViolation* v = r.find("D3");
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<int>{0, 1});
}

TEST_CASE("validate_metric reports each violated axiom", "[metric]") {
  SquareMatrix m(3);
  m(0, 0) = 0.5;                // D2
  m(0, 1) = m(1, 0) = -1.0;     // D1
  m(0, 2) = m(2, 0) = 10.0;     // D4 (10 > 1 + (-1) is irrelevant; use direct triple)
  m(1, 2) = m(2, 1) = 1.0;
  const ValidationReport r = validate_metric(m);
  CHECK(r.find("D1") != nullptr);
  CHECK(r.find("D2") != nullptr);
  CHECK(r.find("D4") != nullptr);
}

TEST_CASE("distance matrix construction rejects basic violations", "[metric]") {
  SquareMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 2.0;
  CHECK_THROWS_AS(DistanceMatrix::from(m), axiom_error);
}

TEST_CASE("metric_checked is set only by the full check", "[metric]") {
  const double c[4] = {0.0, 1.0, 2.0, 4.0};
  SquareMatrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = std::abs(c[i] - c[j]);
  CHECK_FALSE(DistanceMatrix::from(m).metric_checked());
  CHECK(DistanceMatrix::from(m, MetricCheck::full).metric_checked());
  CHECK(DistanceMatrix::from(m).validated().metric_checked());
}

TEST_CASE("avg_distance on the line fixture", "[metric]") {
  const DistanceMatrix d = l4();
  const PointSet omega = PointSet::full(4);
  CHECK_THAT(avg_distance(d, omega, omega), WithinAbs(1.625, 1e-12));
  CHECK_THAT(avg_distance(d, {0, 1}, {2, 3}), WithinAbs(2.5, 1e-12));
  CHECK_THAT(avg_distance(d, {2}, {2}), WithinAbs(0.0, 1e-12));
  CHECK_THROWS_AS(avg_distance(d, PointSet{}, omega), domain_error);
}

TEST_CASE("avg_distance matches the brute force oracle", "[metric]") {
  const DistanceMatrix d = support::random_metric(7, 11);
  for (const auto& s1 : support::proper_subsets(7))
    for (const auto& s2 : {std::vector<int>{0, 3}, std::vector<int>{1, 2, 4, 6}}) {
      CHECK_THAT(avg_distance(d, PointSet(s1), PointSet(s2)),
                 WithinAbs(support::oracle::avg_distance(d.values(), s1, s2), 1e-12));
    }
}

TEST_CASE("relative distance between points", "[metric]") {
  const DistanceMatrix d = l4();
  CHECK_THAT(relative_distance(d, 0, 1), WithinAbs(-0.75, 1e-12));
  CHECK_THAT(relative_distance(d, 0, 3), WithinAbs(2.25, 1e-12));
  // From any point to itself the value is minus its mean distance.
  for (int x = 0; x < 4; ++x) {
    CHECK_THAT(relative_distance(d, x, x), WithinAbs(-d.row_mean(x), 1e-12));
    CHECK(relative_distance(d, x, x) <= 0.0);
  }
}

TEST_CASE("mean relative distance to a point", "[metric]") {
  const DistanceMatrix d = l4();
  CHECK_THAT(mean_relative_distance(d, 1), WithinAbs(-0.375, 1e-12));
  CHECK_THAT(mean_relative_distance(d, 3), WithinAbs(0.625, 1e-12));
}

TEST_CASE("mean relative distance is constant on a uniform metric", "[metric]") {
  SquareMatrix m(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = i == j ? 0.0 : 3.0;
  const DistanceMatrix d = DistanceMatrix::from(m, MetricCheck::full);
  for (int y = 1; y < 5; ++y)
    CHECK_THAT(mean_relative_distance(d, y), WithinAbs(mean_relative_distance(d, 0), 1e-12));
}

TEST_CASE("relative distance between sets", "[metric]") {
  const DistanceMatrix d = l4();
  const PointSet omega = PointSet::full(4);
  CHECK_THAT(relative_distance(d, {0}, {1}), WithinAbs(-0.75, 1e-12));
  CHECK_THAT(relative_distance(d, omega, {0, 1}), WithinAbs(-0.125, 1e-12));
  // To the whole space it is always zero.
  for (const auto& s : support::proper_subsets(4))
    CHECK_THAT(relative_distance(d, PointSet(s), omega), WithinAbs(0.0, 1e-12));
  CHECK_THROWS_AS(relative_distance(d, PointSet{}, omega), domain_error);
}

TEST_CASE("weighted average over a disjoint union", "[metric][property]") {
  for (uint64_t seed : {1, 2, 3, 4, 5}) {
    const int n = 6;
    const DistanceMatrix d = support::random_metric(n, seed);
    const PointSet s1{0, 4};
    const PointSet s2{1, 2};
    const PointSet s3{3, 5};
    const PointSet s23{1, 2, 3, 5};
    const double lhs = avg_distance(d, s1, s23);
    const double rhs = (s2.size() * avg_distance(d, s1, s2) + s3.size() * avg_distance(d, s1, s3)) /
                       (s2.size() + s3.size());
    CHECK_THAT(lhs, WithinAbs(rhs, 1e-9));
  }
}

TEST_CASE("relative distance union rules", "[metric][property]") {
  const DistanceMatrix d = support::random_metric(7, 21);
  const PointSet s1{0, 5};
  const PointSet s2{1, 2};
  const PointSet s3{3, 6};
  const PointSet s23{1, 2, 3, 6};
  const double w2 = s2.size(), w3 = s3.size();
  CHECK_THAT(relative_distance(d, s1, s23),
             WithinAbs((w2 * relative_distance(d, s1, s2) + w3 * relative_distance(d, s1, s3)) /
                           (w2 + w3),
                       1e-9));
  CHECK_THAT(relative_distance(d, s23, s1),
             WithinAbs((w2 * relative_distance(d, s2, s1) + w3 * relative_distance(d, s3, s1)) /
                           (w2 + w3),
                       1e-9));
}

TEST_CASE("relative distance reciprocity, exhaustive", "[metric][property]") {
  for (int n : {5, 6}) {
    const DistanceMatrix d = support::random_metric(n, 31 + n);
    const PointSet omega = PointSet::full(n);
    const auto subsets = support::proper_subsets(n);
    for (const auto& a : subsets)
      for (const auto& b : subsets) {
        const PointSet s1(a), s2(b);
        const double lhs = relative_distance(d, omega, s2) - relative_distance(d, s1, s2);
        const double rhs = relative_distance(d, omega, s1) - relative_distance(d, s2, s1);
        REQUIRE_THAT(lhs, WithinAbs(rhs, 1e-9));
      }
  }
}

TEST_CASE("avg_distance is symmetric in its set arguments", "[metric][property]") {
  const DistanceMatrix d = support::random_metric(8, 77);
  for (const auto& a : support::proper_subsets(5)) {
    const PointSet s1(a);
    const PointSet s2{5, 6, 7};
    CHECK_THAT(avg_distance(d, s1, s2), WithinAbs(avg_distance(d, s2, s1), 1e-12));
  }
}

TEST_CASE("points at zero distance break nothing", "[metric][edge]") {
  // Duplicate points: d(0,1) = 0 on a 3-point metric.
  SquareMatrix m(3);
  m(0, 2) = m(2, 0) = 2.0;
  m(1, 2) = m(2, 1) = 2.0;
  const DistanceMatrix d = DistanceMatrix::from(m, MetricCheck::full);
  CHECK(d.metric_checked());
  const CohesionMatrix g = cohesion_matrix(d);
  CHECK(is_cluster(g, {0, 1}));
  const MergeTree tree = hierarchical_cluster(g);
  CHECK(tree.final_sets.size() >= 1);
  const KSetsRun run = k_sets(d, 2, partition_with_ids({0, 1, 1}, 2));
  CHECK(run.converged);
}
