#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// algorithm modules it is used to check.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "compat/geometry.hpp"

namespace compat::testing {

// Points labelled 1..n in the listed order.
inline LabelledPointSet points(std::initializer_list<std::pair<Coord, Coord>> xy) {
  std::vector<LabelledPoint> pts;
  Label l = 1;
  for (auto [x, y] : xy) pts.push_back({l++, {x, y}});
  return LabelledPointSet(std::move(pts));
}

// Points at the given coordinates with labels taken from `labels` in order.
inline LabelledPointSet labelled(const std::vector<Point>& xy, const LabelSequence& labels) {
  std::vector<LabelledPoint> pts;
  for (std::size_t k = 0; k < xy.size(); ++k) pts.push_back({labels[k], xy[k]});
  return LabelledPointSet(std::move(pts));
}

// Vertices of a (non-regular) strictly convex polygon, counterclockwise,
// with no parallel connecting lines for n <= 12.
inline std::vector<Point> skewed_convex(std::size_t n) {
  std::vector<Point> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * M_PI * (static_cast<double>(k) + 0.13 * std::sin(1.7 * k + 0.4)) / n;
    out.push_back({std::llround(100000 * std::cos(a)), std::llround(73000 * std::sin(a))});
  }
  return out;
}

// Projection orders of `set` over `samples` equally spaced directions, in
// floating point; directions that produce a tie are skipped.
inline std::set<LabelSequence> sampled_projection_orders(const LabelledPointSet& set, int samples) {
  std::set<LabelSequence> out;
  const std::size_t n = set.size();
  for (int s = 0; s < samples; ++s) {
    const double a = 2.0 * M_PI * (s + 0.5) / samples;
    std::vector<std::pair<double, Label>> keyed;
    for (Label l = 1; static_cast<std::size_t>(l) <= n; ++l) {
      keyed.emplace_back(std::cos(a) * static_cast<double>(set[l].x) + std::sin(a) * static_cast<double>(set[l].y), l);
    }
    std::sort(keyed.begin(), keyed.end());
    bool tie = false;
    for (std::size_t k = 0; k + 1 < n; ++k) tie |= keyed[k].first == keyed[k + 1].first;
    if (tie) continue;
    LabelSequence order;
    for (auto& [key, l] : keyed) order.push_back(l);
    out.insert(order);
  }
  return out;
}

// Sampling oracle for monotonicity of a fixed order.
inline bool sampled_monotone(const LabelledPointSet& set, const LabelSequence& seq, int samples) {
  for (int s = 0; s < samples; ++s) {
    const double a = 2.0 * M_PI * (s + 0.5) / samples;
    bool ok = true;
    for (std::size_t k = 0; ok && k + 1 < seq.size(); ++k) {
      const double dx = static_cast<double>(set[seq[k + 1]].x - set[seq[k]].x);
      const double dy = static_cast<double>(set[seq[k + 1]].y - set[seq[k]].y);
      ok = std::cos(a) * dx + std::sin(a) * dy > 0;
    }
    if (ok) return true;
  }
  return false;
}

// Quadratic inversion count of `seq` against `reference`.
inline std::size_t naive_inversions(const LabelSequence& seq, const LabelSequence& reference) {
  std::vector<std::size_t> rank(reference.size() + 1);
  for (std::size_t k = 0; k < reference.size(); ++k) rank[reference[k]] = k;
  std::size_t inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += rank[seq[i]] > rank[seq[j]];
  }
  return inv;
}

// Labels of `seq` form a contiguous arc of the cyclic `order`.
inline bool is_cyclic_interval(const LabelSequence& order, const std::set<Label>& labels) {
  const std::size_t n = order.size();
  if (labels.empty() || labels.size() == n) return true;
  std::size_t starts = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const bool in = labels.count(order[k]) > 0;
    const bool prev_in = labels.count(order[(k + n - 1) % n]) > 0;
    starts += in && !prev_in;
  }
  return starts == 1;
}

// Check of a witness against a cyclic boundary order: every
// proper prefix is an interval and ends at one of its endpoints.
inline bool prefixes_are_intervals(const LabelSequence& boundary, const LabelSequence& seq) {
  const std::size_t n = boundary.size();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t k = 0; k < n; ++k) pos[boundary[k]] = k;
  std::set<Label> prefix;
  for (std::size_t m = 0; m + 1 < seq.size(); ++m) {
    prefix.insert(seq[m]);
    if (!is_cyclic_interval(boundary, prefix)) return false;
    const Label last = seq[m];
    const bool before_in = prefix.count(boundary[(pos[last] + n - 1) % n]) > 0;
    const bool after_in = prefix.count(boundary[(pos[last] + 1) % n]) > 0;
    if (prefix.size() > 1 && before_in && after_in) return false;
  }
  return true;
}

}  // namespace compat::testing
