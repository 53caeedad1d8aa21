#include "compat/geometry.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace compat {

namespace {

int sign(Wide v) { return (v > 0) - (v < 0); }

}  // namespace

void check_coordinate(const Point& p) {
  if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
    throw InputError("coordinate (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                     ") exceeds the supported bound of " + std::to_string(kMaxCoordinate));
  }
}

LabelledPointSet::LabelledPointSet(std::vector<LabelledPoint> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  by_label_.assign(n, Point{});
  std::vector<bool> seen(n, false);
  for (const auto& lp : points_) {
    if (lp.label < 1 || static_cast<std::size_t>(lp.label) > n) {
      throw InputError("label " + std::to_string(lp.label) + " outside 1.." + std::to_string(n));
    }
    if (seen[lp.label - 1]) {
      throw InputError("label " + std::to_string(lp.label) + " repeated");
    }
    seen[lp.label - 1] = true;
    check_coordinate(lp.p);
    by_label_[lp.label - 1] = lp.p;
  }
  std::vector<Point> sorted = by_label_;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw InputError("coincident points at (" + std::to_string(it->x) + ", " + std::to_string(it->y) + ")");
  }
}

const Point& LabelledPointSet::at(Label label) const {
  if (label < 1 || static_cast<std::size_t>(label) > by_label_.size()) {
    throw InvalidWitnessError("label " + std::to_string(label) + " not in point set");
  }
  return by_label_[label - 1];
}

LabelSequence LabelledPointSet::input_order() const {
  LabelSequence out;
  out.reserve(points_.size());
  for (const auto& lp : points_) out.push_back(lp.label);
  return out;
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  check_coordinate(a);
  check_coordinate(b);
  check_coordinate(c);
  return static_cast<Orientation>(sign(cross(b - a, c - a)));
}

bool on_open_segment(const Point& a, const Point& b, const Point& c) {
  if (c == a || c == b) return false;
  if (cross(b - a, c - a) != 0) return false;
  return dot(c - a, b - a) > 0 && dot(c - b, a - b) > 0;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = static_cast<int>(orientation(a, b, c));
  const int o2 = static_cast<int>(orientation(a, b, d));
  const int o3 = static_cast<int>(orientation(c, d, a));
  const int o4 = static_cast<int>(orientation(c, d, b));
  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis and compare open intervals.
    const bool use_x = a.x != b.x || c.x != d.x;
    auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    const Coord lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    const Coord lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  }
  // Any other zero puts the only possible common point at an endpoint.
  return o1 * o2 < 0 && o3 * o4 < 0;
}

void require_permutation(std::span<const Label> seq, std::size_t n) {
  if (seq.size() != n) {
    throw InvalidWitnessError("sequence has length " + std::to_string(seq.size()) + ", expected " +
                              std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Label l : seq) {
    if (l < 1 || static_cast<std::size_t>(l) > n) {
      throw InvalidWitnessError("label " + std::to_string(l) + " outside 1.." + std::to_string(n));
    }
    if (seen[l - 1]) throw InvalidWitnessError("label " + std::to_string(l) + " repeated");
    seen[l - 1] = true;
  }
}

bool is_noncrossing_prefix(const LabelledPointSet& set, std::span<const Label> prefix) {
  const std::size_t m = prefix.size();
  for (std::size_t e = 0; e + 1 < m; ++e) {
    const Point& a = set.at(prefix[e]);
    const Point& b = set.at(prefix[e + 1]);
    for (std::size_t f = e + 1; f + 1 < m; ++f) {
      if (segments_properly_cross(a, b, set[prefix[f]], set[prefix[f + 1]])) return false;
    }
    for (std::size_t v = 0; v < m; ++v) {
      if (v == e || v == e + 1) continue;
      if (on_open_segment(a, b, set[prefix[v]])) return false;
    }
  }
  return true;
}

bool is_noncrossing_spanning_path(const LabelledPointSet& set, std::span<const Label> seq) {
  require_permutation(seq, set.size());
  return is_noncrossing_prefix(set, seq);
}

LabelSequence convex_hull_cyclic_order(const LabelledPointSet& set) {
  const std::size_t n = set.size();
  LabelSequence order = set.input_order();
  if (n <= 2) {
    std::sort(order.begin(), order.end());
    return order;
  }
  // Sort points together with their labels so the scan reads contiguously.
  std::vector<std::pair<Point, Label>> sorted;
  sorted.reserve(n);
  for (const auto& lp : set.points()) sorted.emplace_back(lp.p, lp.label);
  std::sort(sorted.begin(), sorted.end());

  // Monotone chain keeping only strict left turns; any point that is not a
  // strict hull vertex is dropped and detected by the size check.
  std::vector<std::pair<Point, Label>> hull(2 * n);
  std::size_t k = 0;
  auto left_turn = [&](std::size_t i) {
    return orientation(hull[k - 2].first, hull[k - 1].first, sorted[i].first) == Orientation::CounterClockwise;
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && !left_turn(i)) --k;
    hull[k++] = sorted[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !left_turn(i)) --k;
    hull[k++] = sorted[i];
  }
  if (k - 1 != n) {
    throw NotConvexError("point set is not in strictly convex position (" + std::to_string(n - (k - 1)) +
                         " point(s) inside the hull or on a hull edge)");
  }
  for (std::size_t i = 0; i < n; ++i) order[i] = hull[i].second;
  std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
  return order;
}

void require_same_labels(const LabelledPointSet& p, const LabelledPointSet& q) {
  if (p.size() != q.size()) {
    throw InputError("point sets have different sizes (" + std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()) + ")");
  }
}

bool are_compatible(const LabelledPointSet& p, const LabelledPointSet& q, std::span<const Label> seq) {
  require_same_labels(p, q);
  return is_noncrossing_spanning_path(p, seq) && is_noncrossing_spanning_path(q, seq);
}

}  // namespace compat
