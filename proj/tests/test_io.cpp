#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace kset;

using support::TempDir;

namespace {

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

}  // namespace

TEST_CASE("matrix csv round trip", "[io]") {
  TempDir dir;
  const DistanceMatrix d = support::random_metric(9, 17);
  const std::string path = dir.file("d.csv");
  io::write_matrix_csv(d.values(), path);
  const SquareMatrix back = io::read_matrix_csv(path);
  CHECK(max_abs_difference(d.values(), back) == 0.0);  // %.17g is lossless
}

TEST_CASE("matrix csv diagnostics carry line numbers", "[io]") {
  TempDir dir;
  const std::string path = dir.file("bad.csv");
  write_file(path, "0,1\n1,zebra\n");
  try {
    io::read_matrix_csv(path);
    FAIL("expected a data_error");
  } catch (const data_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find(":2:") != std::string::npos);
    CHECK(msg.find("zebra") != std::string::npos);
  }
}

TEST_CASE("matrix csv shape errors", "[io]") {
  TempDir dir;
  const std::string ragged = dir.file("ragged.csv");
  write_file(ragged, "0,1\n1\n");
  CHECK_THROWS_AS(io::read_matrix_csv(ragged), data_error);

  const std::string rect = dir.file("rect.csv");
  write_file(rect, "0,1,2\n1,0,1\n");
  CHECK_THROWS_AS(io::read_matrix_csv(rect), data_error);

  const std::string empty = dir.file("empty.csv");
  write_file(empty, "");
  CHECK_THROWS_AS(io::read_matrix_csv(empty), data_error);
}

TEST_CASE("distance loading rejects asymmetry beyond tolerance", "[io]") {
  TempDir dir;
  const std::string path = dir.file("asym.csv");
  write_file(path, "0,1.0\n1.1,0\n");
  const SquareMatrix m = io::read_matrix_csv(path);  // parses fine
  CHECK_THROWS_AS(DistanceMatrix::from(m), axiom_error);
}

TEST_CASE("label file round trip and diagnostics", "[io]") {
  TempDir dir;
  const std::string path = dir.file("l.labels");
  io::write_labels({0, 2, 1, 1}, path);
  CHECK(io::read_labels(path) == std::vector<int>{0, 2, 1, 1});

  const std::string bad = dir.file("bad.labels");
  write_file(bad, "0\nx\n");
  try {
    io::read_labels(bad);
    FAIL("expected a data_error");
  } catch (const data_error& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("points csv with a label column", "[io]") {
  TempDir dir;
  const std::string path = dir.file("pts.csv");
  io::write_points_csv({{1.5, 2.0}, {3.0, -1.0}}, {0, 1}, path);
  std::vector<int> labels;
  const auto pts = io::read_points_csv(path, true, &labels);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].size() == 2);
  CHECK(labels == std::vector<int>{0, 1});
  // Without the label flag the trailing column is a coordinate.
  const auto raw = io::read_points_csv(path, false);
  CHECK(raw[0].size() == 3);
}

TEST_CASE("edge list parsing", "[io]") {
  TempDir dir;
  const std::string path = dir.file("g.edges");
  write_file(path, "# comment\n0 1\n1 2\n0 1\n");
  std::ostringstream warn;
  const Graph g = io::read_edge_list(path, &warn);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);  // duplicate collapsed
  CHECK(warn.str().find("duplicate") != std::string::npos);

  const std::string loop = dir.file("loop.edges");
  write_file(loop, "0 0\n");
  CHECK_THROWS_AS(io::read_edge_list(loop), data_error);

  const std::string junk = dir.file("junk.edges");
  write_file(junk, "0 1 extra\n");
  CHECK_THROWS_AS(io::read_edge_list(junk), data_error);

  const std::string missing = dir.file("missing.edges");
  CHECK_THROWS_AS(io::read_edge_list(missing), data_error);
}

TEST_CASE("edge list round trip", "[io]") {
  TempDir dir;
  const Graph g = support::random_connected_graph(10, 0.3, 3);
  const std::string path = dir.file("g.edges");
  io::write_edge_list(g, path);
  const Graph back = io::read_edge_list(path);
  CHECK(back.edges() == g.edges());
}
