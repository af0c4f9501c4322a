#include "opmotif/forward_automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace opm {

namespace {

// Order classes of a new symbol relative to p[1..x]: class c holds the
// symbols with exactly c of p[1..x] below them, c in [0..x].
struct ClassFrame {
  std::vector<Position> by_rank;  // 0-based pattern positions sorted by rank
  std::optional<std::size_t> forward_class;
};

ClassFrame make_frame(const MpAutomaton& mp, std::size_t x) {
  auto ranks = mp.pattern().ranks();
  ClassFrame fr;
  fr.by_rank.resize(x);
  std::iota(fr.by_rank.begin(), fr.by_rank.end(), Position{0});
  std::sort(fr.by_rank.begin(), fr.by_rank.end(),
            [&](Position a, Position b) { return ranks[a] < ranks[b]; });
  if (x < mp.size()) {
    const auto next = ranks[x];
    fr.forward_class = static_cast<std::size_t>(
        std::count_if(ranks.begin(), ranks.begin() + x,
                      [&](std::size_t r) { return r < next; }));
  }
  return fr;
}

// Half-rank representative of class c, doubled so it stays integral.
std::size_t representative(std::span<const std::size_t> ranks,
                           const ClassFrame& fr, std::size_t c) {
  return c == 0 ? 1 : 2 * ranks[fr.by_rank[c - 1]] + 1;
}

// Builds the merged, jump-ordered transition list from per-class targets.
std::vector<IntervalTransition> to_intervals(const ClassFrame& fr,
                                             std::size_t x,
                                             std::span<const std::size_t> targets) {
  std::vector<IntervalTransition> out;
  std::size_t c = 0;
  while (c <= x) {
    if (fr.forward_class && c == *fr.forward_class) {
      ++c;
      continue;
    }
    std::size_t end = c;
    while (end + 1 <= x && targets[end + 1] == targets[c] &&
           !(fr.forward_class && end + 1 == *fr.forward_class))
      ++end;
    IntervalTransition t;
    if (c > 0) t.low = fr.by_rank[c - 1] + 1;
    if (end < x) t.high = fr.by_rank[end] + 1;
    t.target = targets[c];
    out.push_back(t);
    c = end + 1;
  }
  std::stable_sort(out.begin(), out.end(),
                   [x](const IntervalTransition& a, const IntervalTransition& b) {
                     return x - a.target < x - b.target;
                   });
  return out;
}

// Runs the MP automaton from fail(x) on the class representative, comparing
// ranks of the window p[1..x] only.
std::vector<std::size_t> simulate_targets(const MpAutomaton& mp, std::size_t x,
                                          const ClassFrame& fr) {
  auto ranks = mp.pattern().ranks();
  std::vector<std::size_t> targets(x + 1, 0);
  for (std::size_t c = 0; c <= x; ++c) {
    if (fr.forward_class && c == *fr.forward_class) {
      targets[c] = x + 1;
      continue;
    }
    const std::size_t alpha = representative(ranks, fr, c);
    std::size_t q = mp.fail(x);
    for (;;) {
      const RepPair& lbl = mp.forward_label(q);
      // window position k of state q is pattern position x - q + k
      auto doubled = [&](Position k) { return 2 * ranks[x - q + k - 1]; };
      bool ok = (!lbl.lower || doubled(*lbl.lower) < alpha) &&
                (!lbl.upper || alpha < doubled(*lbl.upper));
      if (ok) break;
      q = mp.fail(q);
    }
    targets[c] = q + 1;
  }
  return targets;
}

bool interval_accepts(const IntervalTransition& tr, std::span<const Value> text,
                      Position i, std::size_t state) {
  return forward_accepts(RepPair{tr.low, tr.high}, text, i, state);
}

template <class Backward>
SearchResult run_forward(const MpAutomaton& mp, const IntSeq& text,
                         std::vector<std::size_t>* trajectory,
                         Backward&& backward_of) {
  const std::size_t m = mp.size();
  const std::size_t n = text.size();
  if (m > n) throw PatternLongerThanText(m, n);
  auto t = text.values();
  SearchResult result;
  auto& stats = result.stats;
  if (trajectory) trajectory->clear();
  std::size_t x = 0;
  for (Position i = 1; i <= n; ++i) {
    ++stats.symbols_read;
    bool moved = false;
    if (x < m) {
      ++stats.transitions_taken;
      if (forward_accepts(mp.forward_label(x), t, i, x)) {
        ++x;
        moved = true;
      }
    }
    if (!moved) {
      for (const auto& tr : backward_of(x)) {
        ++stats.transitions_taken;
        if (interval_accepts(tr, t, i, x)) {
          x = tr.target;
          moved = true;
          break;
        }
      }
      if (!moved)
        throw std::logic_error("no transition from state " + std::to_string(x));
    }
    if (x == m) result.occurrences.push_back({i - m + 1, 0});
    if (trajectory) trajectory->push_back(x);
  }
  return result;
}

}  // namespace

ForwardAutomaton::ForwardAutomaton(const MpAutomaton& mp, bool lazy)
    : mp_(mp),
      lazy_(lazy),
      backward_(mp.size() + 1),
      done_(mp.size() + 1, 0) {
  done_[0] = 1;  // state 0 only has its forward transition
}

ForwardAutomaton ForwardAutomaton::build(const MpAutomaton& mp) {
  ForwardAutomaton fa(mp, false);
  const std::size_t m = mp.size();
  // class_target[x][c]: state reached from x on a symbol of class c,
  // forward class included. Each state reuses the table of its failure
  // target, since after failing the symbol is read from fail(x) against the
  // window suffix, which is order-isomorphic to p[1..fail(x)].
  std::vector<std::vector<std::uint32_t>> class_target(m + 1);
  class_target[0] = {1};
  std::vector<std::size_t> targets;
  for (std::size_t x = 1; x <= m; ++x) {
    ClassFrame fr = make_frame(mp, x);
    const std::size_t f = mp.fail(x);
    const Position suffix_start = x - f;
    const auto& inherited = class_target[f];
    targets.assign(x + 1, 0);
    std::size_t below_in_suffix = 0;
    for (std::size_t c = 0; c <= x; ++c) {
      if (fr.forward_class && c == *fr.forward_class)
        targets[c] = x + 1;
      else
        targets[c] = inherited[below_in_suffix];
      if (c < x && fr.by_rank[c] >= suffix_start) ++below_in_suffix;
    }
    class_target[x].assign(targets.begin(), targets.end());
    fa.backward_[x] = to_intervals(fr, x, targets);
    fa.done_[x] = 1;
  }
  return fa;
}

ForwardAutomaton ForwardAutomaton::build_lazy(const MpAutomaton& mp) {
  return ForwardAutomaton(mp, true);
}

std::span<const IntervalTransition> ForwardAutomaton::materialize(
    std::size_t state) {
  if (!done_.at(state)) {
    ClassFrame fr = make_frame(mp_, state);
    backward_[state] = to_intervals(fr, state, simulate_targets(mp_, state, fr));
    done_[state] = 1;
  }
  return backward_[state];
}

std::size_t ForwardAutomaton::transition_count() const {
  std::size_t total = mp_.size();
  for (const auto& b : backward_) total += b.size();
  return total;
}

SearchResult forward_search(const ForwardAutomaton& f, const IntSeq& text,
                            std::vector<std::size_t>* trajectory) {
  return run_forward(f.mp(), text, trajectory, [&](std::size_t x) {
    if (!f.materialized(x))
      throw std::logic_error("state " + std::to_string(x) + " not materialized");
    return f.backward(x);
  });
}

SearchResult forward_search_lazy(ForwardAutomaton& f, const IntSeq& text,
                                 std::vector<std::size_t>* trajectory) {
  return run_forward(f.mp(), text, trajectory,
                     [&](std::size_t x) { return f.materialize(x); });
}

}  // namespace opm
