#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "rlab/errors.hpp"
#include "rlab/generators.hpp"
#include "rlab/graph.hpp"
#include "rlab/metric_space.hpp"
#include "rlab/rng.hpp"
#include "support.hpp"

using namespace rlab;

namespace {

// ambient word metric of reduced words: |u| + |v| - 2 * |common prefix|
std::int64_t tree_word_distance(const std::string& u, const std::string& v) {
  std::size_t common = 0;
  while (common < u.size() && common < v.size() && u[common] == v[common]) ++common;
  return static_cast<std::int64_t>(u.size() + v.size() - 2 * common);
}

}  // namespace

TEST_CASE("zn_ball rank 1 gives a path") {
  auto ball = zn_ball(1, 2);
  CHECK(ball.space.size() == 5);
  CHECK(testsupport::exact_equal(ball.space.dist, path_graph(5).space.dist));
}

TEST_CASE("zn_ball rank 2 radius 1 is the 5-point star") {
  auto ball = zn_ball(2, 1);
  CHECK(ball.space.size() == 5);
  auto find = [&](const std::string& l) {
    for (int i = 0; i < ball.space.size(); ++i)
      if (ball.space.labels[i] == l) return i;
    FAIL("missing label ", l);
    return -1;
  };
  int e1 = find("(1,0)");
  int e2 = find("(0,1)");
  int center = find("(0,0)");
  CHECK((*ball.space.int_dist)(e1, e2) == 2);
  CHECK((*ball.space.int_dist)(center, e1) == 1);
}

TEST_CASE("zn_ball rank 2 radius 2 has 13 vertices including the unit square") {
  auto ball = zn_ball(2, 2);
  CHECK(ball.space.size() == 13);
  int found = 0;
  for (const auto& label : ball.space.labels)
    if (label == "(0,0)" || label == "(1,0)" || label == "(0,1)" || label == "(1,1)")
      ++found;
  CHECK(found == 4);
}

TEST_CASE("zn_ball metric equals the closed-form l1 distance") {
  // construction asserts BFS == l1 internally; spot-check the assertion fires
  // nowhere across a few shapes by just constructing them
  CHECK_NOTHROW(zn_ball(1, 4));
  CHECK_NOTHROW(zn_ball(2, 4));
  CHECK_NOTHROW(zn_ball(3, 2));
}

TEST_CASE("zn_ball size cap raises SizeCapError") {
  CHECK_THROWS_AS(zn_ball(2, 300), SizeCapError);
  CHECK_THROWS_AS(zn_ball(6, 12), SizeCapError);
}

TEST_CASE("free_group_ball has the regular-tree vertex counts") {
  CHECK(free_group_ball(2, 1).space.size() == 5);
  CHECK(free_group_ball(2, 2).space.size() == 17);
  CHECK(free_group_ball(2, 4).space.size() == 161);
  CHECK(free_group_ball(3, 2).space.size() == 1 + 6 + 30);
}

TEST_CASE("free_group_ball graphs are trees") {
  for (int radius : {1, 2, 3}) {
    auto ball = free_group_ball(2, radius);
    CHECK(ball.graph.edge_count() == static_cast<std::size_t>(ball.graph.vertex_count() - 1));
  }
}

TEST_CASE("free_group_ball metric equals the ambient word metric") {
  auto ball = free_group_ball(2, 3);
  for (int i = 0; i < ball.space.size(); ++i)
    for (int j = 0; j < ball.space.size(); ++j) {
      std::string u = ball.space.labels[i] == "e" ? "" : ball.space.labels[i];
      std::string v = ball.space.labels[j] == "e" ? "" : ball.space.labels[j];
      CHECK((*ball.space.int_dist)(i, j) == tree_word_distance(u, v));
    }
}

TEST_CASE("free_group_ball validates rank and caps size") {
  CHECK_THROWS_AS(free_group_ball(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(free_group_ball(2, 12), SizeCapError);
}

TEST_CASE("hypercube shapes") {
  CHECK(hypercube(1).space.size() == 2);
  CHECK((*hypercube(1).space.int_dist)(0, 1) == 1);
  // the square skeleton is C4 up to the vertex order (00, 01, 11, 10)
  auto square = restrict_space(hypercube(2).space, {0, 1, 3, 2});
  CHECK(testsupport::exact_equal(square.dist, cycle_graph(4).space.dist));
  auto cube = hypercube(3);
  CHECK(cube.space.size() == 8);
  CHECK(cube.space.dist.maxCoeff() == 3.0);
  CHECK_THROWS_AS(hypercube(0), SizeCapError);
  CHECK_THROWS_AS(hypercube(13), SizeCapError);
}

TEST_CASE("grid shapes") {
  auto square22 = restrict_space(grid({2, 2}).space, {0, 1, 3, 2});
  CHECK(testsupport::exact_equal(square22.dist, cycle_graph(4).space.dist));
  auto g33 = grid({3, 3});
  CHECK(g33.space.size() == 9);
  CHECK(g33.space.dist.maxCoeff() == 4.0);
  CHECK(testsupport::exact_equal(grid({2, 2, 2}).space.dist, hypercube(3).space.dist));
}

TEST_CASE("cycles and paths") {
  auto c6 = cycle_graph(6);
  CHECK(c6.space.size() == 6);
  CHECK(c6.space.dist.maxCoeff() == 3.0);
  CHECK((*c6.space.int_dist)(0, 3) == 3);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(1), std::invalid_argument);
}

TEST_CASE("generated metrics validate exactly") {
  CHECK(validate_metric(zn_ball(2, 3).space.dist).valid);
  CHECK(validate_metric(free_group_ball(2, 3).space.dist).valid);
  CHECK(validate_metric(hypercube(4).space.dist).valid);
  CHECK(validate_metric(grid({3, 4}).space.dist).valid);
  CHECK(validate_metric(cycle_graph(7).space.dist).valid);
  CHECK(validate_metric(lp_sample(3, 7, 1.5, 42).dist).valid);
}

TEST_CASE("lp_sample is reproducible and prefix-consistent") {
  auto a = lp_sample(3, 8, 1.5, 7);
  auto b = lp_sample(3, 8, 1.5, 7);
  CHECK(testsupport::exact_equal(a.dist, b.dist));

  // the first 4 points of a count-8 draw are the count-4 draw
  auto small = lp_sample(3, 4, 1.5, 7);
  auto sub = restrict_space(a, {0, 1, 2, 3});
  CHECK(testsupport::exact_equal(small.dist, sub.dist));

  auto other = lp_sample(3, 8, 1.5, 8);
  CHECK_FALSE(testsupport::exact_equal(a.dist, other.dist));
}

TEST_CASE("lp_sample validates its domain") {
  CHECK_THROWS_AS(lp_sample(3, 1, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(lp_sample(3, 5, 0.9, 0), std::invalid_argument);
  CHECK_THROWS_AS(lp_sample(3, 5, 2.1, 0), std::invalid_argument);
  CHECK_NOTHROW(lp_sample(1, 2, 1.0, 0));
}

TEST_CASE("load_edge_list builds BFS metrics") {
  std::string path = "test_edges_tmp.txt";
  {
    std::ofstream out(path);
    out << "0 1\n1 2\n2 3\n3 0\n";
  }
  auto graph = load_edge_list(path);
  auto space = metric_from_graph(graph);
  CHECK(testsupport::exact_equal(space.dist, cycle_graph(4).space.dist));
  std::remove(path.c_str());
}

TEST_CASE("load_edge_list on a star gives leaf distance 2") {
  std::string path = "test_star_tmp.txt";
  {
    std::ofstream out(path);
    out << "0 1\n0 2\n0 3\n";
  }
  auto space = metric_from_graph(load_edge_list(path));
  CHECK(space.size() == 4);
  CHECK((*space.int_dist)(1, 2) == 2);
  CHECK((*space.int_dist)(0, 3) == 1);
  std::remove(path.c_str());
}

TEST_CASE("disconnected edge lists name a separated pair") {
  std::string path = "test_disc_tmp.txt";
  {
    std::ofstream out(path);
    out << "0 1\n2 3\n";
  }
  CHECK_THROWS_WITH_AS(load_edge_list(path),
                       doctest::Contains("disconnected"), ValidationError);
  std::remove(path.c_str());
}

TEST_CASE("two-point edge list") {
  std::string path = "test_pair_tmp.txt";
  {
    std::ofstream out(path);
    out << "0 1\n";
  }
  auto space = metric_from_graph(load_edge_list(path));
  CHECK(space.size() == 2);
  CHECK(space.dist(0, 1) == 1.0);
  std::remove(path.c_str());
}
