#include "compat/oracle.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "compat/monotone_paths.hpp"

namespace compat {

namespace {

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw OracleCapError("exhaustive oracle refuses n = " + std::to_string(n) + " (cap " + std::to_string(cap) + ")");
  }
}

// The edge (prefix[m-2], prefix[m-1]) neither crosses nor touches earlier
// parts of the prefix in a way the full check would reject.
bool last_edge_ok(const LabelledPointSet& s, const LabelSequence& prefix) {
  const std::size_t m = prefix.size();
  if (m < 2) return true;
  const Point &a = s[prefix[m - 2]], &b = s[prefix[m - 1]];
  for (std::size_t f = 0; f + 2 < m; ++f) {
    if (segments_properly_cross(a, b, s[prefix[f]], s[prefix[f + 1]])) return false;
    if (on_open_segment(s[prefix[f]], s[prefix[f + 1]], b)) return false;
  }
  for (std::size_t v = 0; v + 2 < m; ++v) {
    if (on_open_segment(a, b, s[prefix[v]])) return false;
  }
  return true;
}

struct Search {
  const LabelledPointSet& p;
  const LabelledPointSet& q;
  const Constraint& constraint;
  const VisibilityGraph* vis_p = nullptr;
  const VisibilityGraph* vis_q = nullptr;
  std::vector<LabelSequence> found;
  LabelSequence prefix;
  std::vector<bool> used;

  void run() {
    const std::size_t n = p.size();
    if (prefix.size() == n) {
      if (satisfies(p, q, constraint, prefix)) found.push_back(prefix);
      return;
    }
    for (Label l = 1; static_cast<std::size_t>(l) <= n; ++l) {
      if (used[l - 1]) continue;
      prefix.push_back(l);
      if (admissible()) {
        used[l - 1] = true;
        run();
        used[l - 1] = false;
      }
      prefix.pop_back();
    }
  }

  bool admissible() const {
    const std::size_t m = prefix.size();
    if (m >= 2 && vis_p && !(vis_p->sees(prefix[m - 2], prefix[m - 1]) && vis_q->sees(prefix[m - 2], prefix[m - 1]))) {
      return false;
    }
    return last_edge_ok(p, prefix) && last_edge_ok(q, prefix);
  }
};

// Cyclic counterclockwise order of `nbrs` around `center`, rotated to start
// at its smallest label.
LabelSequence rotation_at(const LabelledPointSet& s, Label center, LabelSequence nbrs) {
  const Point& c = s[center];
  auto half = [](const Vec& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  std::sort(nbrs.begin(), nbrs.end(), [&](Label a, Label b) {
    const Vec va = s[a] - c, vb = s[b] - c;
    if (half(va) != half(vb)) return half(va) < half(vb);
    return cross(va, vb) > 0;
  });
  if (!nbrs.empty()) std::rotate(nbrs.begin(), std::min_element(nbrs.begin(), nbrs.end()), nbrs.end());
  return nbrs;
}

bool plane_tree(const LabelledPointSet& s, const std::vector<std::pair<Label, Label>>& edges) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Point &a = s[edges[e].first], &b = s[edges[e].second];
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      if (segments_properly_cross(a, b, s[edges[f].first], s[edges[f].second])) return false;
    }
    for (Label v = 1; static_cast<std::size_t>(v) <= s.size(); ++v) {
      if (on_open_segment(a, b, s[v])) return false;
    }
  }
  return true;
}

std::vector<std::pair<Label, Label>> decode_pruefer(const std::vector<Label>& code, std::size_t n) {
  std::vector<int> degree(n + 1, 1);
  for (Label l : code) ++degree[l];
  std::vector<std::pair<Label, Label>> edges;
  for (Label l : code) {
    Label leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, l);
    --degree[leaf];
    --degree[l];
  }
  Label u = 0, v = 0;
  for (Label l = 1; static_cast<std::size_t>(l) <= n; ++l) {
    if (degree[l] == 1) (u == 0 ? u : v) = l;
  }
  edges.emplace_back(u, v);
  return edges;
}

}  // namespace

bool satisfies(const LabelledPointSet& p, const LabelledPointSet& q, const Constraint& constraint,
               std::span<const Label> seq) {
  if (!are_compatible(p, q, seq)) return false;
  if (const auto* poly = std::get_if<InsidePolygons>(&constraint)) {
    return path_inside_polygon(poly->p, seq) && path_inside_polygon(poly->q, seq);
  }
  if (std::holds_alternative<MonotoneConstraint>(constraint)) {
    return check_order_monotone(p, seq) && check_order_monotone(q, seq);
  }
  return true;
}

std::vector<LabelSequence> brute_force_compatible(const LabelledPointSet& p, const LabelledPointSet& q,
                                                  const Constraint& constraint, std::size_t cap) {
  require_same_labels(p, q);
  require_cap(p.size(), cap);
  std::optional<VisibilityGraph> vp, vq;
  if (const auto* poly = std::get_if<InsidePolygons>(&constraint)) {
    if (!(poly->p.vertices() == p) || !(poly->q.vertices() == q)) {
      throw InputError("polygon constraint does not match the point sets");
    }
    vp = build_visibility_graph(poly->p);
    vq = build_visibility_graph(poly->q);
  }
  Search search{p, q, constraint, vp ? &*vp : nullptr, vq ? &*vq : nullptr, {}, {}, std::vector<bool>(p.size())};
  search.run();
  return std::move(search.found);
}

bool brute_force_has_compatible_tree(const LabelledPointSet& p, const LabelledPointSet& q, std::size_t cap) {
  require_same_labels(p, q);
  const std::size_t n = p.size();
  require_cap(n, cap);
  if (n <= 2) return true;

  std::vector<Label> code(n - 2, 1);
  while (true) {
    const auto edges = decode_pruefer(code, n);
    if (plane_tree(p, edges) && plane_tree(q, edges)) {
      std::vector<LabelSequence> nbrs(n + 1);
      for (auto [u, v] : edges) {
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
      }
      bool same = true;
      for (Label v = 1; same && static_cast<std::size_t>(v) <= n; ++v) {
        same = rotation_at(p, v, nbrs[v]) == rotation_at(q, v, nbrs[v]);
      }
      if (same) return true;
    }
    // Next code in odometer order.
    std::size_t k = 0;
    while (k < code.size() && code[k] == static_cast<Label>(n)) code[k++] = 1;
    if (k == code.size()) return false;
    ++code[k];
  }
}

}  // namespace compat
