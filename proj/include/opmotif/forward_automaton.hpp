#pragma once

#include <vector>

#include "opmotif/mp_automaton.hpp"

namespace opm {

// Backward transition of state x: taken on alpha when
// (low is -inf or window[low] < alpha) and (high is +inf or alpha < window[high]),
// where window = the last x text symbols and low/high are window positions.
struct IntervalTransition {
  std::optional<Position> low;
  std::optional<Position> high;
  std::size_t target = 0;

  friend bool operator==(const IntervalTransition&,
                         const IntervalTransition&) = default;
};

// Fully expanded automaton recognising (any prefix) . p^=. Besides the m
// forward transitions, each state x >= 1 holds interval-labelled backward
// transitions covering every order class of a new symbol relative to
// p[1..x] other than the forward one. Adjacent classes with the same target
// are merged. Transitions of a state are ordered by increasing jump length
// x - target.
//
// A lazy automaton starts with no backward transitions and expands a state
// the first time a search needs it. Lazy automata mutate during search and
// must not be shared between concurrent searches.
class ForwardAutomaton {
 public:
  static ForwardAutomaton build(const MpAutomaton& mp);
  static ForwardAutomaton build_lazy(const MpAutomaton& mp);

  const MpAutomaton& mp() const noexcept { return mp_; }
  std::size_t size() const noexcept { return mp_.size(); }
  bool lazy() const noexcept { return lazy_; }

  bool materialized(std::size_t state) const { return done_.at(state) != 0; }
  std::span<const IntervalTransition> backward(std::size_t state) const {
    return backward_.at(state);
  }
  // Expands `state` on first use, by simulating the MP automaton from
  // fail(state) on one representative per order class.
  std::span<const IntervalTransition> materialize(std::size_t state);

  // m forward transitions plus every materialized backward transition.
  std::size_t transition_count() const;

 private:
  explicit ForwardAutomaton(const MpAutomaton& mp, bool lazy);

  MpAutomaton mp_;
  bool lazy_;
  std::vector<std::vector<IntervalTransition>> backward_;
  std::vector<char> done_;
};

inline ForwardAutomaton build_forward(const MpAutomaton& mp) {
  return ForwardAutomaton::build(mp);
}
inline ForwardAutomaton build_forward_lazy(const MpAutomaton& mp) {
  return ForwardAutomaton::build_lazy(mp);
}

// Tests the forward transition first, then backward transitions in stored
// order; every test counts as one transition. When `trajectory` is given it
// receives the state reached after each text symbol.
//
// The const overload requires every state reachable in the search to be
// materialized (always true for an eager automaton) and throws
// std::logic_error otherwise.
SearchResult forward_search(const ForwardAutomaton& f, const IntSeq& text,
                            std::vector<std::size_t>* trajectory = nullptr);
SearchResult forward_search_lazy(ForwardAutomaton& f, const IntSeq& text,
                                 std::vector<std::size_t>* trajectory = nullptr);

}  // namespace opm
