#include "compat/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "compat/monotone_paths.hpp"

namespace compat {

namespace {

Coord uniform(Rng& rng, Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); }

bool upper(const Point& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

}  // namespace

LabelSequence random_permutation(std::size_t n, Rng& rng) {
  LabelSequence perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

LabelledPointSet relabel(const LabelledPointSet& set, std::span<const Label> mapping) {
  std::vector<LabelledPoint> pts;
  pts.reserve(set.size());
  for (const auto& lp : set.points()) pts.push_back({mapping[lp.label - 1], lp.p});
  return LabelledPointSet(std::move(pts));
}

std::vector<Point> random_convex_polygon(std::size_t n, Rng& rng) {
  if (n < 3) throw DomainError("a convex polygon needs at least 3 vertices");
  const std::size_t m = (n + 1) / 2;
  const Coord r = std::max<Coord>(12, static_cast<Coord>(2 * std::ceil(std::sqrt(static_cast<double>(m)))));
  std::set<Point> chosen;
  while (chosen.size() < m) {
    const Point v{uniform(rng, -r, r), uniform(rng, 0, r)};
    if (!upper(v) || std::gcd(v.x, v.y) != 1) continue;
    chosen.insert(v);
  }
  std::vector<Point> edges(chosen.begin(), chosen.end());
  for (const Point& v : chosen) edges.push_back({-v.x, -v.y});
  std::sort(edges.begin(), edges.end(), [](const Point& a, const Point& b) {
    if (upper(a) != upper(b)) return upper(a);
    return cross(Vec{a.x, a.y}, Vec{b.x, b.y}) > 0;
  });
  if (edges.size() > n) {
    // Merge two angularly adjacent edges; their sum points strictly between.
    const std::size_t k = uniform(rng, 0, static_cast<Coord>(edges.size()) - 2);
    edges[k] = {edges[k].x + edges[k + 1].x, edges[k].y + edges[k + 1].y};
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(k) + 1);
  }
  std::vector<Point> vertices;
  vertices.reserve(n);
  Point cur{0, 0};
  for (const Point& e : edges) {
    vertices.push_back(cur);
    cur = {cur.x + e.x, cur.y + e.y};
  }
  std::rotate(vertices.begin(), vertices.begin() + uniform(rng, 0, static_cast<Coord>(n) - 1), vertices.end());
  return vertices;
}

LabelledPointSet random_convex_set(std::size_t n, Rng& rng) {
  const std::vector<Point> vertices = random_convex_polygon(n, rng);
  const LabelSequence labels = random_permutation(n, rng);
  std::vector<LabelledPoint> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back({labels[k], vertices[k]});
  return LabelledPointSet(std::move(pts));
}

std::pair<LabelledPointSet, LabelledPointSet> random_compatible_convex(std::size_t n, Rng& rng) {
  const std::vector<Point> pv = random_convex_polygon(n, rng), qv = random_convex_polygon(n, rng);
  const LabelSequence p_labels = random_permutation(n, rng);

  // Grow an interval on P's hull at a random end each step.
  std::bernoulli_distribution coin(0.5);
  std::size_t lo = uniform(rng, 0, static_cast<Coord>(n) - 1), hi = lo;
  LabelSequence seq{p_labels[lo]};
  while (seq.size() < n) {
    if (coin(rng)) {
      lo = (lo + n - 1) % n;
      seq.push_back(p_labels[lo]);
    } else {
      hi = (hi + 1) % n;
      seq.push_back(p_labels[hi]);
    }
  }
  // The same sequence grows an interval on Q's hull.
  std::deque<Label> q_order{seq[0]};
  for (std::size_t k = 1; k < n; ++k) {
    if (coin(rng)) {
      q_order.push_front(seq[k]);
    } else {
      q_order.push_back(seq[k]);
    }
  }
  const std::size_t shift = uniform(rng, 0, static_cast<Coord>(n) - 1);
  std::vector<LabelledPoint> p, q;
  for (std::size_t k = 0; k < n; ++k) {
    p.push_back({p_labels[k], pv[k]});
    q.push_back({q_order[(k + shift) % n], qv[k]});
  }
  return {LabelledPointSet(std::move(p)), LabelledPointSet(std::move(q))};
}

LabelledPointSet random_general_position_set(std::size_t n, Rng& rng, Coord span) {
  while (true) {
    std::set<Point> pts;
    while (pts.size() < n) pts.insert({uniform(rng, -span, span), uniform(rng, -span, span)});
    std::vector<Point> shuffled(pts.begin(), pts.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<LabelledPoint> labelled;
    for (std::size_t k = 0; k < n; ++k) labelled.push_back({static_cast<Label>(k + 1), shuffled[k]});
    LabelledPointSet set(std::move(labelled));
    try {
      if (n >= 2) build_swap_sequence(set);
      return set;
    } catch (const DegenerateInputError&) {
    }
  }
}

LabelledPolygon random_simple_polygon(std::size_t n, Rng& rng, Coord span) {
  if (n < 3) throw DomainError("a polygon needs at least 3 vertices");
  std::vector<Point> pts;
  while (pts.size() < n) {
    const Point c{uniform(rng, -span, span), uniform(rng, -span, span)};
    bool ok = std::find(pts.begin(), pts.end(), c) == pts.end();
    for (std::size_t a = 0; ok && a < pts.size(); ++a) {
      for (std::size_t b = a + 1; ok && b < pts.size(); ++b) {
        ok = orientation(pts[a], pts[b], c) != Orientation::Collinear;
      }
    }
    if (ok) pts.push_back(c);
  }
  std::shuffle(pts.begin(), pts.end(), rng);

  // 2-opt: reversing the chain between two crossing edges strictly shortens
  // the tour, so this terminates with a simple polygon.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (segments_properly_cross(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
          std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1, pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          changed = true;
        }
      }
    }
  }
  const LabelSequence labels = random_permutation(n, rng);
  std::vector<LabelledPoint> labelled;
  for (std::size_t k = 0; k < n; ++k) labelled.push_back({labels[k], pts[k]});
  return LabelledPolygon(LabelledPointSet(std::move(labelled)));
}

}  // namespace compat
