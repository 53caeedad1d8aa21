#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "compat/geometry.hpp"

namespace compat {

// Direction of the projection line; any nonzero integer vector.
struct Direction {
  Wide x = 1;
  Wide y = 0;
};

// Unordered pair {u, v} whose projection order flips when the rotating
// direction becomes orthogonal to the segment uv. `normal` is that
// orthogonal direction, taken within the half-turn counterclockwise from the
// start direction.
struct SwapEvent {
  Label u = 0;
  Label v = 0;
  Vec normal;
};

// One half-period of the circular sequence: C(n,2) events sorted by
// counterclockwise angle from the start direction. Replaying them from
// `initial` swaps adjacent entries only and ends at the reversal of
// `initial`; the second half-period replays the same events again.
struct SwapSequence {
  Direction start;
  LabelSequence initial;
  std::vector<SwapEvent> events;
};

// A direction orthogonal to no line through two points of `set`: the sum of
// two angularly consecutive critical normals.
Direction choose_start_direction(const LabelledPointSet& set);

// Labels sorted by projection on `dir`. Throws DegenerateInputError if two
// points project to the same value.
LabelSequence projection_order(const LabelledPointSet& set, Direction dir);

// Requires general position: no three points collinear and all connecting
// lines pairwise non-parallel. Violations raise DegenerateInputError naming
// the offending pairs.
SwapSequence build_swap_sequence(const LabelledPointSet& set, Direction start);
SwapSequence build_swap_sequence(const LabelledPointSet& set);

// Number of pairs ordered oppositely in `seq` and `reference`, by merge
// counting in O(n log n).
std::uint64_t inversion_number(std::span<const Label> seq, std::span<const Label> reference);

// True iff some direction d has d . (s[k+1] - s[k]) > 0 along the whole
// sequence, i.e. `seq` is a projection order of `set`.
bool check_order_monotone(const LabelledPointSet& set, std::span<const Label> seq);

// Scan state exposed to an observer after each step of the rotation over Q.
// Sequences are in P-rank space (P's initial projection order is 0..n-1).
struct ScanSnapshot {
  std::size_t step = 0;              // j
  std::uint64_t inversions = 0;      // I_j
  std::size_t hamming = 0;           // H_j
  std::span<const int> q_order;      // L^Q_j
  std::span<const int> p_order;      // L^P_{I_j}
};

using ScanObserver = std::function<void(const ScanSnapshot&)>;

struct MonotoneDecision {
  std::optional<LabelSequence> witness;
  std::size_t steps = 0;
};

MonotoneDecision decide_monotone(const LabelledPointSet& p, const LabelledPointSet& q,
                                 const ScanObserver& observer = {});

std::optional<LabelSequence> compatible_monotone_paths(const LabelledPointSet& p, const LabelledPointSet& q);

// Enumerates every monotone ordering of P by replaying its swap sequence over
// the full period and tests each against Q.
std::optional<LabelSequence> naive_compatible_monotone(const LabelledPointSet& p, const LabelledPointSet& q);

}  // namespace compat
