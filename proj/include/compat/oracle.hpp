#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "compat/geometry.hpp"
#include "compat/polygon_paths.hpp"

namespace compat {

struct FreeConstraint {};
struct MonotoneConstraint {};
struct InsidePolygons {
  LabelledPolygon p;
  LabelledPolygon q;
};

// Extra condition on top of "noncrossing spanning path in both sets".
using Constraint = std::variant<FreeConstraint, InsidePolygons, MonotoneConstraint>;

inline constexpr std::size_t kDefaultPathCap = 9;
inline constexpr std::size_t kDefaultTreeCap = 7;

// Every label sequence that is a noncrossing spanning path in both P and Q and
// satisfies the constraint, in lexicographic order. Refuses n > cap with
// OracleCapError.
std::vector<LabelSequence> brute_force_compatible(const LabelledPointSet& p, const LabelledPointSet& q,
                                                  const Constraint& constraint = FreeConstraint{},
                                                  std::size_t cap = kDefaultPathCap);

// Definitional check of a single sequence against the same criteria.
bool satisfies(const LabelledPointSet& p, const LabelledPointSet& q, const Constraint& constraint,
               std::span<const Label> seq);

// Whether some labelled spanning tree is noncrossing in both sets with the
// same clockwise neighbour order around every vertex. Enumerates all n^(n-2)
// trees by Pruefer code; refuses n > cap.
bool brute_force_has_compatible_tree(const LabelledPointSet& p, const LabelledPointSet& q,
                                     std::size_t cap = kDefaultTreeCap);

}  // namespace compat
