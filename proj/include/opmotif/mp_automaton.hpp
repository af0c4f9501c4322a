#pragma once

#include <cstdint>
#include <vector>

#include "opmotif/core.hpp"

namespace opm {

// Morris-Pratt representation of the forward automaton: states 0..m, the
// forward transition j -> j+1 labelled by rep(p, j+1), and one failure link
// per state j >= 1 to the longest proper order-isomorphic border of p[1..j].
class MpAutomaton {
 public:
  // Builds failure links with two predecessor sets over the pattern ranks:
  // an insert-only one emitting the forward labels and a sliding one holding
  // the current border candidate.
  static MpAutomaton build(Pattern p);

  const Pattern& pattern() const noexcept { return pattern_; }
  std::size_t size() const noexcept { return pattern_.size(); }

  // fail(j) for j in [1..m].
  std::size_t fail(std::size_t state) const { return fail_.at(state - 1); }
  std::span<const std::size_t> fail_table() const noexcept { return fail_; }

  // Label of the forward transition leaving `state` (0 <= state < m).
  const RepPair& forward_label(std::size_t state) const {
    return pattern_.rep(state + 1);
  }

  // Predecessor-set operations spent by build().
  std::uint64_t build_operations() const noexcept { return build_ops_; }

 private:
  MpAutomaton(Pattern p, std::vector<std::size_t> fail, std::uint64_t ops)
      : pattern_(std::move(p)), fail_(std::move(fail)), build_ops_(ops) {}

  Pattern pattern_;
  std::vector<std::size_t> fail_;
  std::uint64_t build_ops_;
};

inline MpAutomaton build_mp(Pattern p) { return MpAutomaton::build(std::move(p)); }

// Does `alpha` extend the window t[i-state .. i-1] along the forward
// transition of `state`? `text` is the whole text, `i` is 1-based.
inline bool forward_accepts(const RepPair& label, std::span<const Value> text,
                            Position i, std::size_t state) {
  const Value alpha = text[i - 1];
  const Position base = i - state;  // window position k sits at text[base+k-1]
  if (label.lower && !(text[base + *label.lower - 2] < alpha)) return false;
  if (label.upper && !(alpha < text[base + *label.upper - 2])) return false;
  return true;
}

// Single left-to-right scan. Every forward test and every failure step counts
// as one transition; each text symbol is read once.
SearchResult mp_search(const MpAutomaton& a, const IntSeq& text);

}  // namespace opm
