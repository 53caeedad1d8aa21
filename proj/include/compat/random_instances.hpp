#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "compat/geometry.hpp"
#include "compat/polygon_paths.hpp"

namespace compat {

using Rng = std::mt19937_64;

LabelSequence random_permutation(std::size_t n, Rng& rng);

// Same points, label l replaced by mapping[l - 1].
LabelledPointSet relabel(const LabelledPointSet& set, std::span<const Label> mapping);

// Vertices of a random strictly convex n-gon (n >= 3) in counterclockwise
// order: angularly sorted distinct primitive edge vectors that sum to zero.
std::vector<Point> random_convex_polygon(std::size_t n, Rng& rng);

// Random convex position set with an independent uniformly random labelling.
LabelledPointSet random_convex_set(std::size_t n, Rng& rng);

// Two random convex sets that admit compatible paths: a random label sequence
// is grown as a hull interval on both.
std::pair<LabelledPointSet, LabelledPointSet> random_compatible_convex(std::size_t n, Rng& rng);

// Uniform points in [-span, span]^2 rejected until no three are collinear
// and no two connecting lines are parallel.
LabelledPointSet random_general_position_set(std::size_t n, Rng& rng, Coord span = 1'000'000);

// Random points without collinear triples, joined in random order and
// untangled by 2-opt moves until the boundary is simple. Labels are random.
LabelledPolygon random_simple_polygon(std::size_t n, Rng& rng, Coord span = 100);

}  // namespace compat
