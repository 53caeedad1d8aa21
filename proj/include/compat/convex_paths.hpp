#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "compat/geometry.hpp"

namespace compat {

// Counterclockwise hull order of a convex labelled set with its inverse.
struct HullCycle {
  LabelSequence order;
  std::vector<std::size_t> position;  // position[label - 1] = index in order

  static HullCycle from_order(LabelSequence order);
  static HullCycle of(const LabelledPointSet& set) { return from_order(convex_hull_cyclic_order(set)); }

  std::size_t size() const { return order.size(); }
};

// Maximal greedy sequence started at x: repeatedly extends by the labels that
// are boundary neighbours of the current interval on both hulls. When both
// neighbour pairs coincide the smaller label is appended first.
LabelSequence greedy_sigma(const HullCycle& p_hull, const HullCycle& q_hull, Label x);

struct ConvexDecision {
  std::optional<LabelSequence> witness;
  std::size_t greedy_runs = 0;
  // Labels appended after the start label, summed over all greedy runs.
  std::size_t greedy_appends = 0;
  std::size_t reductions = 0;
};

ConvexDecision decide_convex(const HullCycle& p_hull, const HullCycle& q_hull);

// Linear-time decision on two sets in strictly convex position. Throws
// NotConvexError otherwise.
ConvexDecision decide_convex(const LabelledPointSet& p, const LabelledPointSet& q);

std::optional<LabelSequence> compatible_paths_convex(const LabelledPointSet& p, const LabelledPointSet& q);

// For points in convex position, `seq` is a noncrossing spanning path iff each
// prefix is a hull interval ending at one of its endpoints. O(n).
bool is_interval_growing(const HullCycle& hull, std::span<const Label> seq);

// P_n on a regular n-gon labelled 1..n counterclockwise; Q_n on the same
// n-gon labelled by N1, N3, N0, N2, N4 where Ni lists labels = i (mod 5).
std::pair<LabelledPointSet, LabelledPointSet> generate_negative_instance(int n);

// Counterclockwise label order used for Q_n.
LabelSequence negative_instance_order(int n);

}  // namespace compat
