#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "compat/geometry.hpp"

namespace compat {

enum class Winding { Clockwise, CounterClockwise };

// Simple polygon whose vertices carry labels 1..n; the input order of the
// point set is the boundary order. Construction rejects non-simple
// boundaries with InputError.
class LabelledPolygon {
 public:
  explicit LabelledPolygon(LabelledPointSet vertices);

  const LabelledPointSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Winding winding() const { return winding_; }

  // Boundary labels in clockwise order, starting where the input starts.
  const LabelSequence& clockwise_order() const { return clockwise_; }

  // Closed-polygon membership with exact arithmetic; `doubled` points are in
  // twice the vertex coordinates so segment midpoints stay integral.
  enum class Location { Inside, Boundary, Outside };
  Location locate_doubled(const Point& doubled) const;

 private:
  LabelledPointSet vertices_;
  LabelSequence clockwise_;
  Winding winding_;
};

// Pairwise visibility inside the closed polygon.
//
// sees(i, j): the closed segment between vertices i and j lies in the closed
// polygon. Touching the boundary at a vertex, or running along a boundary
// edge, keeps a segment visible.
// clear(i, j): sees(i, j) and no other vertex lies on the open segment. A
// spanning path visits every vertex, so only clear pairs can be path edges.
class VisibilityGraph {
 public:
  VisibilityGraph() = default;
  explicit VisibilityGraph(std::size_t n) : n_(n), sees_(n * n, 0), clear_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool sees(Label i, Label j) const { return sees_[index(i, j)] != 0; }
  bool clear(Label i, Label j) const { return clear_[index(i, j)] != 0; }

  void set(Label i, Label j, bool sees, bool clear) {
    sees_[index(i, j)] = sees_[index(j, i)] = sees;
    clear_[index(i, j)] = clear_[index(j, i)] = clear;
  }

 private:
  std::size_t index(Label i, Label j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> sees_, clear_;
};

// Direct construction: each pair is tested against every boundary edge, O(n^3).
VisibilityGraph build_visibility_graph(const LabelledPolygon& polygon);

bool path_inside_polygon(const LabelledPolygon& polygon, const VisibilityGraph& vis, std::span<const Label> seq);
bool path_inside_polygon(const LabelledPolygon& polygon, std::span<const Label> seq);

enum class Dir : std::uint8_t { Cw = 0, Ccw = 1 };

// Which pair of sub-intervals produced a true cell: bit 0 set when the P side
// drops to the far endpoint of its interval (a chord), bit 1 likewise for Q.
// Case ids 0..3 correspond to the four expansion cases.
enum class DpCase : std::uint8_t { AdjacentBoth = 0, FarP = 1, FarQ = 2, FarBoth = 3, None = 0xff };

// A(i, t, dP, dQ) over labels in P-clockwise relabelling, with back-pointers.
class DpTable {
 public:
  DpTable() = default;
  explicit DpTable(std::size_t n) : n_(n), cells_(n * (n + 1) * 4, DpCase::None) {}

  std::size_t size() const { return n_; }
  // `i` is a 0-based P-clockwise index, t in 1..n.
  DpCase& at(std::size_t i, std::size_t t, Dir dp, Dir dq) {
    return cells_[((t * n_ + i) * 2 + static_cast<std::size_t>(dp)) * 2 + static_cast<std::size_t>(dq)];
  }
  DpCase at(std::size_t i, std::size_t t, Dir dp, Dir dq) const {
    return cells_[((t * n_ + i) * 2 + static_cast<std::size_t>(dp)) * 2 + static_cast<std::size_t>(dq)];
  }
  bool value(std::size_t i, std::size_t t, Dir dp, Dir dq) const { return at(i, t, dp, dq) != DpCase::None; }

 private:
  std::size_t n_ = 0;
  std::vector<DpCase> cells_;
};

struct PolygonDecision {
  std::optional<LabelSequence> witness;
  // true_cells[t] = number of true cells A(., t, ., .), t = 1..n.
  std::vector<std::size_t> true_cells;
  DpTable table;
  // P-clockwise index -> original label.
  LabelSequence relabel;
};

PolygonDecision decide_polygons(const LabelledPolygon& p, const LabelledPolygon& q);

std::optional<LabelSequence> compatible_paths_polygons(const LabelledPolygon& p, const LabelledPolygon& q);

}  // namespace compat
