#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "opmotif/core.hpp"

namespace opm {

// A pattern normalized to its rep pairs; order-isomorphic patterns share a
// normalized form.
std::vector<RepPair> normalize(const Pattern& p);
std::vector<std::vector<RepPair>> normalize_set(std::span<const Pattern> ps);

// Aho-Corasick style automaton over normalized patterns. Pattern ids are the
// 0-based input indices. Order-isomorphic duplicates collapse onto one path
// and every duplicate id is reported.
class AcAutomaton {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kRoot = 0;
  static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

  struct Node {
    std::size_t depth = 0;
    NodeId parent = kNone;
    // Sorted by key.
    std::vector<std::pair<RepPair, NodeId>> children;
    NodeId fail = kRoot;
    // Nearest proper failure ancestor with a non-empty output list.
    NodeId output_link = kNone;
    // Ids of patterns whose normalized form ends here.
    std::vector<std::size_t> outputs;
  };

  // Throws EmptyInput for an empty set.
  static AcAutomaton build(std::span<const Pattern> patterns);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::optional<NodeId> child(NodeId id, const RepPair& key) const;

  std::size_t pattern_count() const noexcept { return pattern_lengths_.size(); }
  std::size_t pattern_length(std::size_t id) const { return pattern_lengths_.at(id); }
  std::size_t total_length() const noexcept { return total_length_; }

  // Predecessor-set operations spent normalizing and computing failure links.
  std::uint64_t build_operations() const noexcept { return build_ops_; }

 private:
  NodeId add_child(NodeId parent, const RepPair& key);

  std::vector<Node> nodes_;
  std::vector<std::size_t> pattern_lengths_;
  std::size_t total_length_ = 0;
  std::uint64_t build_ops_ = 0;
};

inline AcAutomaton build_ac(std::span<const Pattern> patterns) {
  return AcAutomaton::build(patterns);
}

// Occurrences of every pattern, sorted by (position, pattern id). A window
// predecessor set over the text ranks always holds exactly the last
// depth(current node) symbols.
SearchResult ac_search(const AcAutomaton& a, const IntSeq& text);

}  // namespace opm
