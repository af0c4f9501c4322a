#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opmotif/core.hpp"

namespace opm {

inline constexpr double kDefaultFactorConstant = 3.5;

// Raised when the backward-factor engine does not apply to a pattern length;
// callers fall back to a linear engine.
class FallbackRequired : public Error {
 public:
  explicit FallbackRequired(std::size_t m);
};

// b = ceil(c * log2 m / log2 log2 m). Empty for m < 16 or when b > m/2.
std::optional<std::size_t> choose_b(std::size_t m,
                                    double constant = kDefaultFactorConstant);

// Trie of the order-isomorphism classes of all length-b factors of the
// reversed pattern. Children are keyed by the rep pair of the next symbol
// read relative to the symbols read before it (read indices, 1-based).
class FactorTree {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kRoot = 0;

  static FactorTree build(const Pattern& p, std::size_t b);

  std::size_t b() const noexcept { return b_; }
  std::size_t node_count() const noexcept { return children_.size(); }
  std::size_t leaf_count() const;
  std::optional<NodeId> child(NodeId node, const RepPair& key) const;

  // Length of the longest prefix of `backward` (symbols in read order) the
  // tree accepts, capped at b.
  std::size_t accepted_prefix(std::span<const Value> backward) const;

 private:
  NodeId add_child(NodeId node, const RepPair& key);

  std::size_t b_ = 0;
  std::vector<std::vector<std::pair<RepPair, NodeId>>> children_;
};

inline FactorTree build_factor_tree(const Pattern& p, std::size_t b) {
  return FactorTree::build(p, b);
}

// Geometry of the search: every window reads at most b symbols backward from
// its end, then moves by `shift`.
struct WindowPlan {
  std::size_t b = 0;
  std::size_t shift = 0;
  std::size_t verify_range_length = 0;

  static WindowPlan for_pattern(std::size_t m, std::size_t b) {
    return {b, m - b + 1, m - b + 1};
  }
};

// Per-window record, for tests and diagnostics.
struct WindowTrace {
  Position end = 0;          // 1-based last text position of the window
  std::size_t read = 0;      // symbols read backward
  bool recognized = false;   // all b symbols accepted
  Position verify_first = 0; // starts covered by this window
  Position verify_last = 0;
};

class SublinearMatcher {
 public:
  // Throws FallbackRequired when choose_b declines.
  explicit SublinearMatcher(Pattern p, double constant = kDefaultFactorConstant);

  const Pattern& pattern() const noexcept { return pattern_; }
  const FactorTree& tree() const noexcept { return tree_; }
  const WindowPlan& plan() const noexcept { return plan_; }

  SearchResult search(const IntSeq& text,
                      std::vector<WindowTrace>* trace = nullptr) const;

 private:
  Pattern pattern_;
  WindowPlan plan_;
  FactorTree tree_;
};

SearchResult sublinear_search(const Pattern& p, const IntSeq& text,
                              double constant = kDefaultFactorConstant);

// Uses the sublinear engine when it applies and mp_search otherwise.
struct RoutedResult {
  SearchResult result;
  bool fell_back = false;
};
RoutedResult sublinear_or_mp(const Pattern& p, const IntSeq& text,
                             double constant = kDefaultFactorConstant);

}  // namespace opm
