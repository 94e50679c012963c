#include "hassepaths/younglat.hpp"

#include "hassepaths/closedforms.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

using namespace hassepaths;

namespace {

std::vector<Partition> partitions_of_at_most(int total) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    out.emplace_back(parts);
    for (int v = std::min(remaining, bound); v >= 1; --v) {
      parts.push_back(v);
      self(self, remaining - v, v);
      parts.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

BigInt count_ideals(const Partition& lambda) {
  BigInt n = 0;
  for_each_ideal(lambda, [&n](const Partition&) { ++n; });
  return n;
}

}  // namespace

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("2,1").parts() == std::vector<int>{2, 1});
  CHECK(Partition::parse(" 12, 10 ,10,8,6,6,6,2,1 ").rows() == 9);
  CHECK(Partition::parse("0").empty());
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("5").cells() == 5);
  CHECK(Partition::parse("3,3,1").str() == "3,3,1");
  CHECK(Partition().str() == "0");
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,-1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2x"), std::invalid_argument);
}

TEST_CASE("containment order on shapes") {
  const Partition big = Partition::parse("4,2,1");
  CHECK(big.contains(Partition::parse("4,2,1")));
  CHECK(big.contains(Partition::parse("2,2")));
  CHECK(big.contains(Partition()));
  CHECK_FALSE(big.contains(Partition::parse("5")));
  CHECK_FALSE(big.contains(Partition::parse("4,3")));
  CHECK_FALSE(big.contains(Partition::parse("1,1,1,1")));
}

TEST_CASE("cell shapes of a staircase-like diagram") {
  // One shape, one cell, all four attached shapes pinned down by hand.
  const Partition lambda = Partition::parse("12,10,10,8,6,6,6,2,1");
  CHECK(ne_of(lambda, 3, 5) == Partition::parse("7,5"));
  CHECK(sw_of(lambda, 3, 5) == Partition::parse("4,4,4,4,2,1"));
  CHECK(se_of(lambda, 3, 5) == Partition::parse("12,10,5,4,4,4,4,2,1"));
  CHECK(nw_of(lambda, 3, 5) == Partition::parse("5,5,5"));

  CHECK(corner_cells(lambda) ==
        std::vector<std::pair<int, int>>{{1, 12}, {3, 10}, {4, 8}, {7, 6}, {8, 2}, {9, 1}});

  CHECK_THROWS_AS(ne_of(lambda, 10, 1), std::out_of_range);
  CHECK_THROWS_AS(sw_of(lambda, 2, 11), std::out_of_range);
}

TEST_CASE("ideal sizes by sweep and by enumeration") {
  CHECK(ideal_size(Partition()) == 1);
  CHECK(ideal_size(Partition::parse("2,1")) == 5);
  CHECK(ideal_size(Partition::parse("2,2")) == 6);
  for (const Partition& lambda : partitions_of_at_most(8)) {
    CAPTURE(lambda.str());
    CHECK(ideal_size(lambda) == count_ideals(lambda));
  }
}

TEST_CASE("edge counts: corner-cell products against brute force") {
  CHECK(young_edges(Partition()) == 0);
  CHECK(young_edges(Partition::parse("2,1")) == 5);
  CHECK(young_edges(Partition::parse("2,2")) == 6);
  CHECK(young_edges_bruteforce(Partition::parse("2,1")) == 5);
  for (const Partition& lambda : partitions_of_at_most(8)) {
    CAPTURE(lambda.str());
    CHECK(young_edges(lambda) == young_edges_bruteforce(lambda));
  }
}

TEST_CASE("every corner of an ideal lies in its cell interval") {
  const Partition lambda = Partition::parse("4,3,1");
  for (int i = 1; i <= lambda.rows(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const Partition lo = nw_of(lambda, i, j);
      const Partition hi = se_of(lambda, i, j);
      BigInt with_corner = 0;
      for_each_ideal(lambda, [&](const Partition& mu) {
        const auto corners = corner_cells(mu);
        const bool corner_here =
            std::find(corners.begin(), corners.end(), std::make_pair(i, j)) != corners.end();
        const bool in_interval = mu.contains(lo) && hi.contains(mu);
        CHECK(corner_here == in_interval);
        if (corner_here) ++with_corner;
      });
      CHECK(with_corner == ideal_size(sw_of(lambda, i, j)) * ideal_size(ne_of(lambda, i, j)));
    }
  }
}

TEST_CASE("rectangles in closed form") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(m, n);
      CHECK(ideal_size(rectangle(m, n)) == rect_ideal_size(m, n));
      CHECK(young_edges(rectangle(m, n)) == rect_edges(m, n));
      CHECK(rect_edges(m, n) == rect_edges(n, m));  // transposition symmetry
      CHECK(rect_ideal_size(m, n) == rect_ideal_size(n, m));
    }
  }
  CHECK(rect_edges(8, 8) == young_edges(rectangle(8, 8)));
}

TEST_CASE("staircases and squares meet the path lattices") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(ideal_size(staircase(n - 1)) == catalan(n));
    CHECK(young_edges(staircase(n - 1)) == edge_count_formula(PathClass::Dyck, n));
  }
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(ideal_size(rectangle(n, n)) == vertex_count(PathClass::GrandDyck, n));
    CHECK(young_edges(rectangle(n, n)) == edge_count_formula(PathClass::GrandDyck, n));
  }
}

TEST_CASE("brute force respects the ideal cap") {
  CHECK_THROWS_AS(young_edges_bruteforce(rectangle(12, 12)), CapExceeded);
  CHECK(setenv("HASSE_PATHS_MAX_CELLS", "10", 1) == 0);
  CHECK_THROWS_AS(young_edges_bruteforce(Partition::parse("3,3,3")), CapExceeded);
  CHECK(unsetenv("HASSE_PATHS_MAX_CELLS") == 0);
  CHECK(young_edges_bruteforce(Partition::parse("3,3,3")) == young_edges(Partition::parse("3,3,3")));
}
