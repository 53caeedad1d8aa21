#include <doctest.h>

#include <random>

#include "compat/geometry.hpp"
#include "support.hpp"

using namespace compat;
using compat::testing::points;

TEST_CASE("orientation of small triangles") {
  CHECK(orientation(Point{0, 0}, Point{1, 0}, Point{0, 1}) == Orientation::CounterClockwise);
  CHECK(orientation(Point{0, 0}, Point{1, 1}, Point{2, 2}) == Orientation::Collinear);
  CHECK(orientation(Point{0, 0}, Point{0, 1}, Point{1, 0}) == Orientation::Clockwise);
}

TEST_CASE("orientation at the coordinate bound") {
  const Coord m = kMaxCoordinate;
  CHECK(orientation(Point{-m, -m}, Point{m, m}, Point{m - 1, m}) == Orientation::CounterClockwise);
  CHECK(orientation(Point{-m, -m}, Point{m, m}, Point{0, 0}) == Orientation::Collinear);
  CHECK_THROWS_AS(orientation(Point{0, 0}, Point{m + 1, 0}, Point{0, 1}), InputError);
  CHECK_THROWS_AS(points({{0, 0}, {-m - 1, 3}}), InputError);
}

TEST_CASE("orientation is antisymmetric under swapping two arguments") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coord> u(-50, 50);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    CHECK(static_cast<int>(orientation(a, b, c)) == -static_cast<int>(orientation(a, c, b)));
  }
}

TEST_CASE("segments_properly_cross") {
  CHECK(segments_properly_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_properly_cross({0, 0}, {1, 0}, {1, 0}, {2, 0}));
  CHECK_FALSE(segments_properly_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  // T-junction: an endpoint on the other segment is not a crossing.
  CHECK_FALSE(segments_properly_cross({0, 0}, {2, 0}, {1, 0}, {1, 1}));
  // Collinear overlap is.
  CHECK(segments_properly_cross({0, 0}, {2, 0}, {1, 0}, {3, 0}));
  CHECK(segments_properly_cross({0, 0}, {0, 4}, {0, 1}, {0, 2}));
}

TEST_CASE("segments_properly_cross is symmetric") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<Coord> u(-4, 4);
  for (int trial = 0; trial < 5000; ++trial) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)}, d{u(rng), u(rng)};
    if (a == b || c == d) continue;
    const bool x = segments_properly_cross(a, b, c, d);
    CHECK(x == segments_properly_cross(c, d, a, b));
    CHECK(x == segments_properly_cross(b, a, d, c));
  }
}

TEST_CASE("LabelledPointSet validation") {
  CHECK_THROWS_AS(LabelledPointSet({{1, {0, 0}}, {1, {1, 0}}}), InputError);
  CHECK_THROWS_AS(LabelledPointSet({{1, {0, 0}}, {3, {1, 0}}}), InputError);
  CHECK_THROWS_AS(LabelledPointSet({{1, {0, 0}}, {2, {0, 0}}}), InputError);
  const LabelledPointSet s({{2, {5, 6}}, {1, {7, 8}}});
  CHECK(s[1] == Point{7, 8});
  CHECK(s.input_order() == LabelSequence{2, 1});
}

TEST_CASE("is_noncrossing_spanning_path") {
  const auto square = points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(is_noncrossing_spanning_path(square, LabelSequence{1, 2, 3, 4}));
  CHECK_FALSE(is_noncrossing_spanning_path(square, LabelSequence{1, 3, 2, 4}));
  CHECK(is_noncrossing_spanning_path(points({{3, 3}}), LabelSequence{1}));
  CHECK_THROWS_AS(is_noncrossing_spanning_path(square, LabelSequence{1, 2, 2, 4}), InvalidWitnessError);
  CHECK_THROWS_AS(is_noncrossing_spanning_path(square, LabelSequence{1, 2, 3}), InvalidWitnessError);

  // A vertex on the open interior of a non-incident edge invalidates the path.
  const auto line = points({{0, 0}, {1, 0}, {2, 0}});
  CHECK(is_noncrossing_spanning_path(line, LabelSequence{1, 2, 3}));
  CHECK_FALSE(is_noncrossing_spanning_path(line, LabelSequence{1, 3, 2}));
  CHECK_FALSE(is_noncrossing_spanning_path(line, LabelSequence{2, 1, 3}));
}

TEST_CASE("contiguous hull-order sequences are noncrossing paths") {
  const auto hex = points({{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}});
  for (Label start = 1; start <= 6; ++start) {
    LabelSequence ccw, cw;
    for (int k = 0; k < 6; ++k) {
      ccw.push_back((start - 1 + k) % 6 + 1);
      cw.push_back((start - 1 - k + 12) % 6 + 1);
    }
    CHECK(is_noncrossing_spanning_path(hex, ccw));
    CHECK(is_noncrossing_spanning_path(hex, cw));
  }
}

TEST_CASE("convex_hull_cyclic_order") {
  CHECK(convex_hull_cyclic_order(points({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == LabelSequence{1, 2, 3, 4});
  CHECK(convex_hull_cyclic_order(points({{0, 1}, {1, 1}, {1, 0}, {0, 0}})) == LabelSequence{1, 4, 3, 2});
  CHECK_THROWS_AS(convex_hull_cyclic_order(points({{0, 0}, {4, 0}, {0, 4}, {1, 1}})), NotConvexError);
  CHECK_THROWS_AS(convex_hull_cyclic_order(points({{0, 0}, {1, 1}, {2, 2}})), NotConvexError);
  // A point in the middle of a hull edge.
  CHECK_THROWS_AS(convex_hull_cyclic_order(points({{0, 0}, {2, 0}, {2, 2}, {1, 0}})), NotConvexError);
  CHECK(convex_hull_cyclic_order(points({{5, 5}})) == LabelSequence{1});
  CHECK(convex_hull_cyclic_order(points({{5, 5}, {0, 0}})) == LabelSequence{1, 2});
}

TEST_CASE("are_compatible") {
  const auto square = points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(are_compatible(square, square, LabelSequence{1, 2, 3, 4}));
  CHECK_THROWS_AS(are_compatible(square, square, LabelSequence{1, 1, 3, 4}), InvalidWitnessError);
  CHECK_THROWS_AS(are_compatible(square, points({{0, 0}}), LabelSequence{1}), InputError);
  CHECK(are_compatible(points({{0, 0}}), points({{9, 9}}), LabelSequence{1}));
  CHECK(are_compatible(points({{0, 0}, {1, 0}}), points({{9, 9}, {0, 3}}), LabelSequence{1, 2}));
}

TEST_CASE("the five-point convex pair admits no compatible path") {
  const std::vector<Point> pentagon{{0, 10}, {-10, 3}, {-6, -8}, {6, -8}, {10, 3}};
  const auto p = compat::testing::labelled(pentagon, {1, 2, 3, 4, 5});
  const auto q = compat::testing::labelled(pentagon, {1, 3, 5, 2, 4});
  LabelSequence seq{1, 2, 3, 4, 5};
  int checked = 0;
  do {
    CHECK_FALSE(are_compatible(p, q, seq));
    ++checked;
  } while (std::next_permutation(seq.begin(), seq.end()));
  CHECK(checked == 120);
}
