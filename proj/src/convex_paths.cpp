#include "compat/convex_paths.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

namespace compat {

HullCycle HullCycle::from_order(LabelSequence order) {
  require_permutation(order, order.size());
  HullCycle h;
  h.position.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) h.position[order[i] - 1] = i;
  h.order = std::move(order);
  return h;
}

namespace {

// Doubly linked cyclic list over labels supporting O(1) deletion. Slot 0 is
// unused so labels index directly.
struct CycleList {
  std::vector<Label> next, prev;

  explicit CycleList(const LabelSequence& order) : next(order.size() + 1), prev(order.size() + 1) {
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
      next[order[i]] = order[(i + 1) % n];
      prev[order[i]] = order[(i + n - 1) % n];
    }
  }

  void erase(Label l) {
    next[prev[l]] = next[l];
    prev[next[l]] = prev[l];
  }

  LabelSequence walk(Label from, Label to) const {
    LabelSequence out{from};
    for (Label l = from; l != to;) {
      l = next[l];
      out.push_back(l);
    }
    return out;
  }
};

// Interval lo..hi following `next` (counterclockwise).
struct Interval {
  Label lo, hi;

  void extend(const CycleList& list, Label l) {
    if (l == list.prev[lo]) {
      lo = l;
    } else {
      hi = l;
    }
  }
};

struct GreedyRun {
  LabelSequence seq;
  Interval p, q;
};

GreedyRun run_greedy(const CycleList& pl, const CycleList& ql, Label x, std::size_t live) {
  GreedyRun run{{x}, {x, x}, {x, x}};
  auto append = [&](Label l) {
    run.seq.push_back(l);
    run.p.extend(pl, l);
    run.q.extend(ql, l);
  };
  while (run.seq.size() < live) {
    const Label a = pl.prev[run.p.lo], b = pl.next[run.p.hi];
    const Label c = ql.prev[run.q.lo], d = ql.next[run.q.hi];
    if (run.seq.size() + 1 == live) {
      // One label left; it neighbours both intervals on both sides.
      append(a);
      break;
    }
    if ((a == c && b == d) || (a == d && b == c)) {
      append(std::min(a, b));
      append(std::max(a, b));
    } else if (a == c || a == d) {
      append(a);
    } else if (b == c || b == d) {
      append(b);
    } else {
      break;
    }
  }
  return run;
}

// Order-maintenance list used to re-insert reduced labels: tags increase
// along the sequence so relative order is an O(1) comparison.
class TaggedSequence {
 public:
  TaggedSequence(const LabelSequence& seq, std::size_t universe)
      : next_(universe + 1, 0), tag_(universe + 1, 0), head_(seq.empty() ? 0 : seq.front()), universe_(universe) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) next_[seq[i]] = seq[i + 1];
    retag(seq.size());
  }

  bool before(Label a, Label b) const { return tag_[a] < tag_[b]; }

  void insert_after(Label anchor, const LabelSequence& block) {
    const std::uint64_t k = block.size();
    auto gap = [&] {
      const std::uint64_t hi = next_[anchor] ? tag_[next_[anchor]] : kMax;
      return hi - tag_[anchor];
    };
    if (gap() <= k + 1) retag(universe_);
    const std::uint64_t step = gap() / (k + 1);
    Label prev = anchor;
    const Label tail = next_[anchor];
    for (std::uint64_t i = 0; i < k; ++i) {
      const Label l = block[i];
      tag_[l] = tag_[anchor] + step * (i + 1);
      next_[prev] = l;
      prev = l;
    }
    next_[prev] = tail;
  }

  LabelSequence flatten() const {
    LabelSequence out;
    for (Label l = head_; l != 0; l = next_[l]) out.push_back(l);
    return out;
  }

 private:
  static constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

  void retag(std::size_t capacity) {
    const std::uint64_t step = kMax / (capacity + 2);
    std::uint64_t t = step;
    for (Label l = head_; l != 0; l = next_[l], t += step) tag_[l] = t;
  }

  std::vector<Label> next_;
  std::vector<std::uint64_t> tag_;
  Label head_;
  std::size_t universe_;
};

struct Reduction {
  Label a, b;
  LabelSequence interior;  // in hull order from a towards b
};

}  // namespace

LabelSequence greedy_sigma(const HullCycle& p_hull, const HullCycle& q_hull, Label x) {
  if (p_hull.size() != q_hull.size()) throw InputError("hulls have different sizes");
  if (x < 1 || static_cast<std::size_t>(x) > p_hull.size()) {
    throw InputError("start label " + std::to_string(x) + " out of range");
  }
  const CycleList pl(p_hull.order), ql(q_hull.order);
  return run_greedy(pl, ql, x, p_hull.size()).seq;
}

ConvexDecision decide_convex(const HullCycle& p_hull, const HullCycle& q_hull) {
  const std::size_t n = p_hull.size();
  if (q_hull.size() != n) throw InputError("hulls have different sizes");
  ConvexDecision out;
  if (n == 0) {
    out.witness = LabelSequence{};
    return out;
  }

  CycleList pl(p_hull.order), ql(q_hull.order);
  std::vector<char> dead(n + 1, 0), deleted(n + 1, 0);
  std::size_t live = n;
  std::vector<Reduction> reductions;
  LabelSequence base;

  for (Label x = 1; static_cast<std::size_t>(x) <= n; ++x) {
    if (dead[x] || deleted[x]) continue;
    GreedyRun run = run_greedy(pl, ql, x, live);
    ++out.greedy_runs;
    out.greedy_appends += run.seq.size() - 1;
    if (run.seq.size() == live) {
      base = std::move(run.seq);
      break;
    }
    for (Label l : run.seq) dead[l] = 1;
    if (run.seq.size() < 3) continue;

    // The label set must occupy the same ordered interval on both hulls.
    LabelSequence on_p = pl.walk(run.p.lo, run.p.hi);
    LabelSequence on_q = ql.walk(run.q.lo, run.q.hi);
    if (on_p != on_q) {
      std::reverse(on_q.begin(), on_q.end());
      if (on_p != on_q) return out;
    }
    Reduction r{on_p.front(), on_p.back(), LabelSequence(on_p.begin() + 1, on_p.end() - 1)};
    for (Label l : r.interior) {
      pl.erase(l);
      ql.erase(l);
      deleted[l] = 1;
    }
    live -= r.interior.size();
    reductions.push_back(std::move(r));
    ++out.reductions;
  }
  if (base.empty()) return out;

  TaggedSequence seq(base, n);
  for (auto it = reductions.rbegin(); it != reductions.rend(); ++it) {
    if (seq.before(it->a, it->b)) {
      seq.insert_after(it->a, it->interior);
    } else {
      LabelSequence rev(it->interior.rbegin(), it->interior.rend());
      seq.insert_after(it->b, rev);
    }
  }
  out.witness = seq.flatten();
  return out;
}

ConvexDecision decide_convex(const LabelledPointSet& p, const LabelledPointSet& q) {
  require_same_labels(p, q);
  const HullCycle ph = HullCycle::of(p), qh = HullCycle::of(q);
  ConvexDecision d = decide_convex(ph, qh);
  if (d.witness && !(is_interval_growing(ph, *d.witness) && is_interval_growing(qh, *d.witness))) {
    throw Error("internal error: convex witness failed re-validation");
  }
  return d;
}

std::optional<LabelSequence> compatible_paths_convex(const LabelledPointSet& p, const LabelledPointSet& q) {
  return decide_convex(p, q).witness;
}

bool is_interval_growing(const HullCycle& hull, std::span<const Label> seq) {
  const std::size_t n = hull.size();
  require_permutation(seq, n);
  if (n <= 1) return true;
  std::size_t lo = hull.position[seq[0] - 1], hi = lo;
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t pos = hull.position[seq[k] - 1];
    if (pos == (lo + n - 1) % n) {
      lo = pos;
    } else if (pos == (hi + 1) % n) {
      hi = pos;
    } else {
      return false;
    }
  }
  return true;
}

LabelSequence negative_instance_order(int n) {
  if (n < 5) throw DomainError("negative instances need n >= 5, got " + std::to_string(n));
  LabelSequence order;
  for (int residue : {1, 3, 0, 2, 4}) {
    for (int l = residue == 0 ? 5 : residue; l <= n; l += 5) order.push_back(l);
  }
  return order;
}

std::pair<LabelledPointSet, LabelledPointSet> generate_negative_instance(int n) {
  const LabelSequence q_order = negative_instance_order(n);
  constexpr double kRadius = static_cast<double>(Coord{1} << 29);
  std::vector<LabelledPoint> p, q;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    const Point v{std::llround(kRadius * std::cos(angle)), std::llround(kRadius * std::sin(angle))};
    p.push_back({k + 1, v});
    q.push_back({q_order[k], v});
  }
  LabelledPointSet ps(std::move(p)), qs(std::move(q));
  try {
    convex_hull_cyclic_order(ps);
  } catch (const NotConvexError&) {
    throw DomainError("n = " + std::to_string(n) + " is too large for an exact regular polygon");
  }
  return {std::move(ps), std::move(qs)};
}

}  // namespace compat
