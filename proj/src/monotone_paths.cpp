#include "compat/monotone_paths.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace compat {

namespace {

std::string pair_name(Label u, Label v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

Vec as_vec(const Direction& d) { return {d.x, d.y}; }

// Counts inversions of `a` (values compared with <) by merge sort.
std::uint64_t count_inversions(std::vector<int> a) {
  std::vector<int> buf(a.size());
  std::uint64_t inv = 0;
  for (std::size_t width = 1; width < a.size(); width *= 2) {
    for (std::size_t lo = 0; lo < a.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, a.size()), hi = std::min(lo + 2 * width, a.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          inv += mid - i;
          buf[k++] = a[j++];
        } else {
          buf[k++] = a[i++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
    }
    a.swap(buf);
  }
  return inv;
}

// Permutation of 0..n-1 with its inverse; swaps two entries that must be
// adjacent.
struct TrackedOrder {
  std::vector<int> at;
  std::vector<std::size_t> pos;

  explicit TrackedOrder(std::vector<int> order) : at(std::move(order)), pos(at.size()) {
    for (std::size_t k = 0; k < at.size(); ++k) pos[at[k]] = k;
  }

  // Returns the lower of the two positions swapped.
  std::size_t swap_adjacent(int a, int b) {
    const std::size_t ka = pos[a], kb = pos[b];
    const std::size_t k = std::min(ka, kb);
    if (std::max(ka, kb) != k + 1) throw Error("internal error: swap of non-adjacent elements");
    std::swap(at[k], at[k + 1]);
    pos[at[k]] = k;
    pos[at[k + 1]] = k + 1;
    return k;
  }
};

SwapSequence checked_swap_sequence(const LabelledPointSet& set, const char* which) {
  try {
    return build_swap_sequence(set);
  } catch (const DegenerateInputError& e) {
    throw DegenerateInputError(std::string(which) + ": " + e.what());
  }
}

}  // namespace

Direction choose_start_direction(const LabelledPointSet& set) {
  const std::size_t n = set.size();
  if (n < 2) return {};
  std::vector<Vec> normals;
  normals.reserve(n * (n - 1) / 2);
  for (Label u = 1; static_cast<std::size_t>(u) <= n; ++u) {
    for (Label v = u + 1; static_cast<std::size_t>(v) <= n; ++v) {
      const Vec w = set[v] - set[u];
      Vec c{-w.y, w.x};
      if (c.y < 0 || (c.y == 0 && c.x < 0)) c = {-c.x, -c.y};
      normals.push_back(c);
    }
  }
  // Normals lie in the half-turn [0, pi); cross > 0 orders them by angle.
  std::sort(normals.begin(), normals.end(), [](const Vec& a, const Vec& b) { return cross(a, b) > 0; });
  for (std::size_t k = 0; k + 1 < normals.size(); ++k) {
    if (cross(normals[k], normals[k + 1]) != 0) {
      return {normals[k].x + normals[k + 1].x, normals[k].y + normals[k + 1].y};
    }
  }
  // All connecting lines parallel: project along that line.
  return {normals[0].y, -normals[0].x};
}

LabelSequence projection_order(const LabelledPointSet& set, Direction dir) {
  const Vec d = as_vec(dir);
  auto key = [&](Label l) { return dot(d, Vec{set[l].x, set[l].y}); };
  LabelSequence order(set.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](Label a, Label b) { return key(a) < key(b); });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (key(order[k]) == key(order[k + 1])) {
      throw DegenerateInputError("direction is orthogonal to pair " + pair_name(order[k], order[k + 1]));
    }
  }
  return order;
}

SwapSequence build_swap_sequence(const LabelledPointSet& set, Direction start) {
  const std::size_t n = set.size();
  SwapSequence seq{start, projection_order(set, start), {}};
  const Vec d0 = as_vec(start);
  seq.events.reserve(n * (n - 1) / 2);
  for (Label u = 1; static_cast<std::size_t>(u) <= n; ++u) {
    for (Label v = u + 1; static_cast<std::size_t>(v) <= n; ++v) {
      const Vec w = set[v] - set[u];
      Vec e{-w.y, w.x};
      if (cross(d0, e) < 0) e = {-e.x, -e.y};
      seq.events.push_back({u, v, e});
    }
  }
  std::sort(seq.events.begin(), seq.events.end(),
            [](const SwapEvent& a, const SwapEvent& b) { return cross(a.normal, b.normal) > 0; });
  for (std::size_t k = 0; k + 1 < seq.events.size(); ++k) {
    const SwapEvent &a = seq.events[k], &b = seq.events[k + 1];
    if (cross(a.normal, b.normal) == 0) {
      throw DegenerateInputError("not in general position: lines through " + pair_name(a.u, a.v) + " and " +
                                 pair_name(b.u, b.v) + " are parallel or collinear");
    }
  }
  return seq;
}

SwapSequence build_swap_sequence(const LabelledPointSet& set) {
  return build_swap_sequence(set, choose_start_direction(set));
}

std::uint64_t inversion_number(std::span<const Label> seq, std::span<const Label> reference) {
  if (seq.size() != reference.size()) throw InputError("sequences have different lengths");
  std::unordered_map<Label, int> rank;
  rank.reserve(reference.size());
  for (std::size_t k = 0; k < reference.size(); ++k) {
    if (!rank.emplace(reference[k], static_cast<int>(k)).second) {
      throw InputError("reference repeats label " + std::to_string(reference[k]));
    }
  }
  std::vector<int> ranks;
  ranks.reserve(seq.size());
  std::vector<bool> seen(seq.size(), false);
  for (Label l : seq) {
    auto it = rank.find(l);
    if (it == rank.end() || seen[it->second]) {
      throw InputError("label " + std::to_string(l) + " does not match the reference label set");
    }
    seen[it->second] = true;
    ranks.push_back(it->second);
  }
  return count_inversions(std::move(ranks));
}

bool check_order_monotone(const LabelledPointSet& set, std::span<const Label> seq) {
  require_permutation(seq, set.size());
  if (seq.size() <= 2) return true;
  std::vector<Vec> dirs;
  dirs.reserve(seq.size() - 1);
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) dirs.push_back(set[seq[k + 1]] - set[seq[k]]);

  // A direction exists iff the edge vectors fit in an open half-plane, i.e.
  // some counterclockwise gap between angularly consecutive vectors exceeds pi.
  auto half = [](const Vec& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  std::sort(dirs.begin(), dirs.end(), [&](const Vec& a, const Vec& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
  });
  auto same_ray = [&](const Vec& a, const Vec& b) { return cross(a, b) == 0 && dot(a, b) > 0; };
  dirs.erase(std::unique(dirs.begin(), dirs.end(), same_ray), dirs.end());
  if (dirs.size() == 1) return true;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (cross(dirs[k], dirs[(k + 1) % dirs.size()]) < 0) return true;
  }
  return false;
}

MonotoneDecision decide_monotone(const LabelledPointSet& p, const LabelledPointSet& q, const ScanObserver& observer) {
  require_same_labels(p, q);
  const std::size_t n = p.size();
  MonotoneDecision out;
  if (n <= 2) {
    out.witness = LabelSequence(n);
    std::iota(out.witness->begin(), out.witness->end(), 1);
    return out;
  }
  const SwapSequence sp = checked_swap_sequence(p, "P");
  const SwapSequence sq = checked_swap_sequence(q, "Q");

  // Relabel by P's initial projection order so that L^P_0 is the identity.
  std::vector<int> rank(n + 1);
  for (std::size_t k = 0; k < n; ++k) rank[sp.initial[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> p_events;
  p_events.reserve(sp.events.size());
  for (const SwapEvent& e : sp.events) p_events.emplace_back(rank[e.u], rank[e.v]);

  std::vector<int> q0(n);
  for (std::size_t k = 0; k < n; ++k) q0[k] = rank[sq.initial[k]];
  const std::uint64_t half_period = n * (n - 1) / 2;
  std::uint64_t inv = count_inversions(q0);

  TrackedOrder lq(std::move(q0));
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  TrackedOrder lp(std::move(identity));
  for (std::uint64_t i = 0; i < inv; ++i) lp.swap_adjacent(p_events[i].first, p_events[i].second);

  std::size_t hamming = 0;
  for (std::size_t k = 0; k < n; ++k) hamming += lq.at[k] != lp.at[k];
  auto mismatches = [&](std::size_t k) { return (lq.at[k] != lp.at[k]) + (lq.at[k + 1] != lp.at[k + 1]); };

  const std::uint64_t period = 2 * half_period;
  for (std::uint64_t j = 0; j < period; ++j) {
    out.steps = j;
    if (observer) observer({j, inv, hamming, lq.at, lp.at});
    if (hamming == 0) {
      LabelSequence w(n);
      for (std::size_t k = 0; k < n; ++k) w[k] = sp.initial[lq.at[k]];
      if (!check_order_monotone(p, w) || !check_order_monotone(q, w)) {
        throw Error("internal error: monotone witness failed re-validation");
      }
      out.witness = std::move(w);
      return out;
    }
    if (j + 1 == period) break;

    const SwapEvent& e = sq.events[j % half_period];
    const int a = rank[e.u], b = rank[e.v];
    std::size_t k = std::min(lq.pos[a], lq.pos[b]);
    hamming -= mismatches(k);
    lq.swap_adjacent(a, b);
    hamming += mismatches(k);

    // The swap puts the larger rank first exactly when it adds an inversion.
    const bool up = lq.at[k] > lq.at[k + 1];
    const auto& pe = up ? p_events[inv] : p_events[inv - 1];
    inv = up ? inv + 1 : inv - 1;
    k = std::min(lp.pos[pe.first], lp.pos[pe.second]);
    hamming -= mismatches(k);
    lp.swap_adjacent(pe.first, pe.second);
    hamming += mismatches(k);
  }
  out.steps = period;
  return out;
}

std::optional<LabelSequence> compatible_monotone_paths(const LabelledPointSet& p, const LabelledPointSet& q) {
  return decide_monotone(p, q).witness;
}

std::optional<LabelSequence> naive_compatible_monotone(const LabelledPointSet& p, const LabelledPointSet& q) {
  require_same_labels(p, q);
  const std::size_t n = p.size();
  if (n <= 2) {
    LabelSequence w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
  }
  const SwapSequence sp = checked_swap_sequence(p, "P");
  checked_swap_sequence(q, "Q");

  LabelSequence order = sp.initial;
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
  const std::size_t period = 2 * sp.events.size();
  for (std::size_t i = 0; i < period; ++i) {
    if (check_order_monotone(q, order)) return order;
    const SwapEvent& e = sp.events[i % sp.events.size()];
    const std::size_t k = std::min(pos[e.u], pos[e.v]);
    std::swap(order[k], order[k + 1]);
    pos[order[k]] = k;
    pos[order[k + 1]] = k + 1;
  }
  return std::nullopt;
}

}  // namespace compat
