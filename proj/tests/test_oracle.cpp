#include <doctest.h>

#include <set>

#include "compat/convex_paths.hpp"
#include "compat/oracle.hpp"
#include "compat/random_instances.hpp"
#include "support.hpp"

using namespace compat;
using compat::testing::points;

TEST_CASE("triangle admits all six sequences") {
  const auto tri = points({{0, 0}, {3, 0}, {0, 3}});
  const auto all = brute_force_compatible(tri, tri);
  CHECK(all.size() == 6);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("negative pair has no path and no tree") {
  const auto [p5, q5] = generate_negative_instance(5);
  CHECK(brute_force_compatible(p5, q5).empty());
  CHECK_FALSE(brute_force_has_compatible_tree(p5, q5));
  const auto [p6, q6] = generate_negative_instance(6);
  CHECK_FALSE(brute_force_has_compatible_tree(p6, q6));
}

TEST_CASE("identical convex sets admit a tree") {
  const auto [p, q] = generate_negative_instance(5);
  CHECK(brute_force_has_compatible_tree(p, p));
  CHECK(brute_force_has_compatible_tree(q, q));
}

TEST_CASE("oracle caps") {
  const auto [p, q] = generate_negative_instance(10);
  CHECK_THROWS_AS(brute_force_compatible(p, q), OracleCapError);
  const auto [p8, q8] = generate_negative_instance(8);
  CHECK_THROWS_AS(brute_force_has_compatible_tree(p8, q8), OracleCapError);
}

TEST_CASE("polygon constraint must match the point sets") {
  const auto tri = points({{0, 0}, {3, 0}, {0, 3}});
  const auto other = points({{0, 0}, {5, 0}, {0, 3}});
  const InsidePolygons c{LabelledPolygon(other), LabelledPolygon(other)};
  CHECK_THROWS_AS(brute_force_compatible(tri, tri, c), InputError);
}

TEST_CASE("oracle output is permutation-equivariant and closed under reversal") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto p = random_general_position_set(n, rng, 30);
    const auto q = random_general_position_set(n, rng, 30);
    const auto all = brute_force_compatible(p, q);
    const std::set<LabelSequence> found(all.begin(), all.end());
    for (const auto& s : all) {
      LabelSequence r(s.rbegin(), s.rend());
      CHECK(found.count(r) == 1);
    }

    const LabelSequence mapping = random_permutation(n, rng);
    const auto mapped = brute_force_compatible(relabel(p, mapping), relabel(q, mapping));
    std::set<LabelSequence> expected;
    for (const auto& s : all) {
      LabelSequence m;
      for (Label l : s) m.push_back(mapping[l - 1]);
      expected.insert(m);
    }
    CHECK(std::set<LabelSequence>(mapped.begin(), mapped.end()) == expected);
  }
}

TEST_CASE("satisfies applies the constraint") {
  const auto square = points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(satisfies(square, square, FreeConstraint{}, LabelSequence{1, 2, 3, 4}));
  CHECK_FALSE(satisfies(square, square, MonotoneConstraint{}, LabelSequence{1, 2, 3, 4}));
  CHECK(satisfies(square, square, MonotoneConstraint{}, LabelSequence{1, 2, 4, 3}));
  const LabelledPolygon poly(square);
  CHECK(satisfies(square, square, InsidePolygons{poly, poly}, LabelSequence{1, 2, 3, 4}));
}
