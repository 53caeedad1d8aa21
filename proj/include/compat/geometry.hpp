#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "compat/errors.hpp"

namespace compat {

using Label = int;
using Coord = std::int64_t;
using Wide = __int128;

// |x|, |y| <= kMaxCoordinate. Differences then fit in 32 bits and every
// determinant, dot product and doubled-midpoint test below is evaluated
// exactly in 128-bit arithmetic.
inline constexpr Coord kMaxCoordinate = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Vec {
  Wide x = 0;
  Wide y = 0;
};

inline Vec operator-(const Point& a, const Point& b) { return {Wide{a.x} - b.x, Wide{a.y} - b.y}; }
inline Wide cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
inline Wide dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }

struct LabelledPoint {
  Label label = 0;
  Point p;
};

// A label sequence; as a spanning witness it is a permutation of 1..n.
using LabelSequence = std::vector<Label>;

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

// Immutable set of n points carrying labels 1..n.
//
// Construction validates the label set, the coordinate bound and that no two
// points coincide. Points are retrievable by label, and the input order is
// preserved (polygon boundaries are given as input order).
class LabelledPointSet {
 public:
  LabelledPointSet() = default;
  explicit LabelledPointSet(std::vector<LabelledPoint> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const Point& at(Label label) const;
  const Point& operator[](Label label) const { return by_label_[static_cast<std::size_t>(label - 1)]; }

  const std::vector<LabelledPoint>& points() const { return points_; }
  LabelSequence input_order() const;

  friend bool operator==(const LabelledPointSet& a, const LabelledPointSet& b) {
    return a.by_label_ == b.by_label_ && a.input_order() == b.input_order();
  }

 private:
  std::vector<LabelledPoint> points_;
  std::vector<Point> by_label_;
};

void check_coordinate(const Point& p);

Orientation orientation(const Point& a, const Point& b, const Point& c);
inline Orientation orientation(const LabelledPoint& a, const LabelledPoint& b, const LabelledPoint& c) {
  return orientation(a.p, b.p, c.p);
}

// c lies on the open segment ab.
bool on_open_segment(const Point& a, const Point& b, const Point& c);

// True iff the open segments ab and cd share a point. Touching at an endpoint
// of either segment does not count; collinear overlap does.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// Throws InvalidWitnessError unless `seq` is a permutation of 1..n.
void require_permutation(std::span<const Label> seq, std::size_t n);

// Edges of consecutive labels pairwise do not cross, and no point of the
// prefix lies on the open interior of a path edge it is not incident to.
bool is_noncrossing_prefix(const LabelledPointSet& set, std::span<const Label> prefix);

bool is_noncrossing_spanning_path(const LabelledPointSet& set, std::span<const Label> seq);

// Counterclockwise hull order starting from the lowest label. Throws
// NotConvexError unless every point is a strict hull vertex.
LabelSequence convex_hull_cyclic_order(const LabelledPointSet& set);

bool are_compatible(const LabelledPointSet& p, const LabelledPointSet& q, std::span<const Label> seq);

// Throws InputError unless both sets have the same size (and so the same
// label universe 1..n).
void require_same_labels(const LabelledPointSet& p, const LabelledPointSet& q);

}  // namespace compat
