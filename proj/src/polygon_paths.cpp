#include "compat/polygon_paths.hpp"

#include <algorithm>
#include <string>

namespace compat {

namespace {

// Unchecked orientation sign for the doubled coordinates used in
// point-location.
int orient_raw(const Point& a, const Point& b, const Point& c) {
  const Wide v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

bool on_closed_segment_raw(const Point& a, const Point& b, const Point& c) {
  return orient_raw(a, b, c) == 0 && dot(c - a, b - a) >= 0 && dot(c - b, a - b) >= 0;
}

Point doubled(const Point& p) { return {2 * p.x, 2 * p.y}; }

Dir reverse(Dir d) { return d == Dir::Cw ? Dir::Ccw : Dir::Cw; }

}  // namespace

LabelledPolygon::LabelledPolygon(LabelledPointSet vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw InputError("a polygon needs at least 3 vertices, got " + std::to_string(n));
  const LabelSequence order = vertices_.input_order();
  auto vtx = [&](std::size_t k) -> const Point& { return vertices_[order[k % n]]; };

  for (std::size_t e = 0; e < n; ++e) {
    const Point &a = vtx(e), &b = vtx(e + 1), &c = vtx(e + 2);
    // Consecutive edges may continue straight but must not fold back.
    if (on_open_segment(a, b, c) || on_open_segment(b, c, a)) {
      throw InputError("polygon boundary folds back at label " + std::to_string(order[(e + 1) % n]));
    }
    for (std::size_t f = e + 2; f < n; ++f) {
      if ((f + 1) % n == e) continue;  // adjacent through the wrap
      const Point &u = vtx(f), &w = vtx(f + 1);
      if (segments_properly_cross(a, b, u, w) || on_open_segment(a, b, u) || on_open_segment(a, b, w) ||
          on_open_segment(u, w, a) || on_open_segment(u, w, b)) {
        throw InputError("polygon boundary is not simple: edges (" + std::to_string(order[e]) + "," +
                         std::to_string(order[(e + 1) % n]) + ") and (" + std::to_string(order[f]) + "," +
                         std::to_string(order[(f + 1) % n]) + ") intersect");
      }
    }
  }

  Wide area2 = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Point &a = vtx(k), &b = vtx(k + 1);
    area2 += Wide{a.x} * b.y - Wide{b.x} * a.y;
  }
  winding_ = area2 < 0 ? Winding::Clockwise : Winding::CounterClockwise;
  clockwise_ = order;
  if (winding_ == Winding::CounterClockwise) std::reverse(clockwise_.begin() + 1, clockwise_.end());
}

LabelledPolygon::Location LabelledPolygon::locate_doubled(const Point& q) const {
  const LabelSequence& order = clockwise_;
  const std::size_t n = order.size();
  int winding = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Point a = doubled(vertices_[order[k]]);
    const Point b = doubled(vertices_[order[(k + 1) % n]]);
    if (on_closed_segment_raw(a, b, q)) return Location::Boundary;
    if (a.y <= q.y) {
      if (b.y > q.y && orient_raw(a, b, q) > 0) ++winding;
    } else if (b.y <= q.y && orient_raw(a, b, q) < 0) {
      --winding;
    }
  }
  return winding != 0 ? Location::Inside : Location::Outside;
}

VisibilityGraph build_visibility_graph(const LabelledPolygon& polygon) {
  const std::size_t n = polygon.size();
  const LabelledPointSet& pts = polygon.vertices();
  const LabelSequence& order = polygon.clockwise_order();
  VisibilityGraph vis(n);

  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k] - 1] = k;

  for (Label i = 1; static_cast<std::size_t>(i) <= n; ++i) {
    vis.set(i, i, true, true);
    for (Label j = i + 1; static_cast<std::size_t>(j) <= n; ++j) {
      const std::size_t gap = (pos[j - 1] + n - pos[i - 1]) % n;
      if (gap == 1 || gap == n - 1) {
        vis.set(i, j, true, true);
        continue;
      }
      const Point &a = pts[i], &b = pts[j];
      bool visible = true;
      std::vector<Point> stops{a, b};
      for (std::size_t k = 0; k < n && visible; ++k) {
        const Point &u = pts[order[k]], &w = pts[order[(k + 1) % n]];
        const int o1 = orient_raw(a, b, u), o2 = orient_raw(a, b, w);
        const int o3 = orient_raw(u, w, a), o4 = orient_raw(u, w, b);
        if (o1 * o2 < 0 && o3 * o4 < 0) visible = false;
        if (on_open_segment(a, b, u)) stops.push_back(u);
      }
      const bool through_vertex = stops.size() > 2;
      if (visible) {
        const Vec dir = b - a;
        std::sort(stops.begin(), stops.end(),
                  [&](const Point& s, const Point& t) { return dot(s - a, dir) < dot(t - a, dir); });
        // Between consecutive stops the open segment either runs along a
        // boundary edge or avoids the boundary, so one midpoint decides it.
        for (std::size_t s = 0; s + 1 < stops.size() && visible; ++s) {
          const Point mid{stops[s].x + stops[s + 1].x, stops[s].y + stops[s + 1].y};
          visible = polygon.locate_doubled(mid) != LabelledPolygon::Location::Outside;
        }
      }
      vis.set(i, j, visible, visible && !through_vertex);
    }
  }
  return vis;
}

bool path_inside_polygon(const LabelledPolygon& polygon, const VisibilityGraph& vis, std::span<const Label> seq) {
  require_permutation(seq, polygon.size());
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!vis.sees(seq[k], seq[k + 1])) return false;
  }
  return is_noncrossing_prefix(polygon.vertices(), seq);
}

bool path_inside_polygon(const LabelledPolygon& polygon, std::span<const Label> seq) {
  return path_inside_polygon(polygon, build_visibility_graph(polygon), seq);
}

namespace {

// Boundary walk of one polygon in the P-clockwise index space.
struct BoundaryIndex {
  std::vector<std::size_t> pos;  // index -> clockwise position
  std::vector<std::size_t> at;   // clockwise position -> index
  std::vector<std::uint8_t> clear;
  std::size_t n;

  std::size_t step(std::size_t i, std::size_t t, Dir d) const {
    const std::size_t p = pos[i];
    return at[d == Dir::Cw ? (p + t) % n : (p + n - t % n) % n];
  }
  bool chord_ok(std::size_t i, std::size_t j) const { return clear[i * n + j] != 0; }
};

BoundaryIndex index_polygon(const LabelledPolygon& poly, const std::vector<std::size_t>& index_of) {
  const std::size_t n = poly.size();
  BoundaryIndex b{std::vector<std::size_t>(n), std::vector<std::size_t>(n), std::vector<std::uint8_t>(n * n), n};
  const LabelSequence& cw = poly.clockwise_order();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t idx = index_of[cw[k] - 1];
    b.at[k] = idx;
    b.pos[idx] = k;
  }
  const VisibilityGraph vis = build_visibility_graph(poly);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      b.clear[index_of[cw[k] - 1] * n + index_of[cw[m] - 1]] = vis.clear(cw[k], cw[m]);
    }
  }
  return b;
}

}  // namespace

PolygonDecision decide_polygons(const LabelledPolygon& p, const LabelledPolygon& q) {
  require_same_labels(p.vertices(), q.vertices());
  const std::size_t n = p.size();

  // Relabel so that P reads 0, 1, ..., n-1 clockwise.
  PolygonDecision out;
  out.relabel = p.clockwise_order();
  std::vector<std::size_t> index_of(n);
  for (std::size_t k = 0; k < n; ++k) index_of[out.relabel[k] - 1] = k;

  const BoundaryIndex bp = index_polygon(p, index_of);
  const BoundaryIndex bq = index_polygon(q, index_of);

  DpTable table(n);
  out.true_cells.assign(n + 1, 0);
  constexpr Dir kDirs[] = {Dir::Cw, Dir::Ccw};
  for (std::size_t i = 0; i < n; ++i) {
    for (Dir dp : kDirs) {
      for (Dir dq : kDirs) table.at(i, 1, dp, dq) = DpCase::AdjacentBoth;
    }
  }
  out.true_cells[1] = 4 * n;

  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (Dir dp : kDirs) {
        for (Dir dq : kDirs) {
          // Deleting the last label i leaves either the interval starting at
          // i's boundary neighbour (same direction, boundary edge) or the one
          // starting at the far endpoint (reversed direction, chord to i).
          for (std::uint8_t c = 0; c < 4; ++c) {
            const bool far_p = (c & 1) != 0, far_q = (c & 2) != 0;
            const std::size_t jp = far_p ? bp.step(i, t, dp) : bp.step(i, 1, dp);
            const std::size_t jq = far_q ? bq.step(i, t, dq) : bq.step(i, 1, dq);
            if (jp != jq) continue;
            if (far_p && !bp.chord_ok(jp, i)) continue;
            if (far_q && !bq.chord_ok(jq, i)) continue;
            if (!table.value(jp, t, far_p ? reverse(dp) : dp, far_q ? reverse(dq) : dq)) continue;
            table.at(i, t + 1, dp, dq) = static_cast<DpCase>(c);
            ++out.true_cells[t + 1];
            break;
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < n && !out.witness; ++i) {
    for (Dir dp : kDirs) {
      for (Dir dq : kDirs) {
        if (out.witness || !table.value(i, n, dp, dq)) continue;
        // Walk back-pointers from the path's last vertex to its first.
        LabelSequence rev{out.relabel[i]};
        std::size_t cur = i;
        Dir cp = dp, cq = dq;
        for (std::size_t t = n; t > 1; --t) {
          const auto c = static_cast<std::uint8_t>(table.at(cur, t, cp, cq));
          const bool far_p = (c & 1) != 0, far_q = (c & 2) != 0;
          cur = far_p ? bp.step(cur, t - 1, cp) : bp.step(cur, 1, cp);
          if (far_p) cp = reverse(cp);
          if (far_q) cq = reverse(cq);
          rev.push_back(out.relabel[cur]);
        }
        out.witness = LabelSequence(rev.rbegin(), rev.rend());
      }
    }
  }
  out.table = std::move(table);

  if (out.witness && !(path_inside_polygon(p, *out.witness) && path_inside_polygon(q, *out.witness))) {
    throw Error("internal error: polygon witness failed re-validation");
  }
  return out;
}

std::optional<LabelSequence> compatible_paths_polygons(const LabelledPolygon& p, const LabelledPolygon& q) {
  return decide_polygons(p, q).witness;
}

}  // namespace compat
