#include "opmotif/sublinear.hpp"

#include <algorithm>
#include <cmath>

#include "opmotif/mp_automaton.hpp"

namespace opm {

namespace {

// Ordered set of the symbols read so far in the current window, with their
// read indices. At most b elements, so a sorted array is enough.
class ReadSet {
 public:
  void clear() { items_.clear(); }

  RepPair key_for(Value v) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), v,
                               [](const auto& e, Value x) { return e.first < x; });
    RepPair r;
    if (it != items_.end()) r.upper = it->second;
    if (it != items_.begin()) r.lower = std::prev(it)->second;
    return r;
  }

  void add(Value v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v,
                               [](const auto& e, Value x) { return e.first < x; });
    items_.insert(it, {v, items_.size() + 1});
  }

 private:
  std::vector<std::pair<Value, Position>> items_;
};

bool key_less(const std::pair<RepPair, FactorTree::NodeId>& e, const RepPair& k) {
  return e.first < k;
}

}  // namespace

FallbackRequired::FallbackRequired(std::size_t m)
    : Error("backward factor search does not apply to pattern length " +
            std::to_string(m)) {}

std::optional<std::size_t> choose_b(std::size_t m, double constant) {
  if (m < 16 || !(constant > 0)) return std::nullopt;
  const double lg = std::log2(static_cast<double>(m));
  const auto b = static_cast<std::size_t>(std::ceil(constant * lg / std::log2(lg)));
  if (b == 0 || b > m / 2) return std::nullopt;
  return b;
}

std::optional<FactorTree::NodeId> FactorTree::child(NodeId node,
                                                    const RepPair& key) const {
  const auto& ch = children_[node];
  auto it = std::lower_bound(ch.begin(), ch.end(), key, key_less);
  if (it == ch.end() || it->first != key) return std::nullopt;
  return it->second;
}

FactorTree::NodeId FactorTree::add_child(NodeId node, const RepPair& key) {
  if (auto c = child(node, key)) return *c;
  const auto id = static_cast<NodeId>(children_.size());
  children_.emplace_back();
  auto& ch = children_[node];
  ch.insert(std::lower_bound(ch.begin(), ch.end(), key, key_less), {key, id});
  return id;
}

FactorTree FactorTree::build(const Pattern& p, std::size_t b) {
  const std::size_t m = p.size();
  if (b == 0 || b > m) throw std::invalid_argument("factor length out of range");
  FactorTree tree;
  tree.b_ = b;
  tree.children_.emplace_back();
  auto v = p.values();
  ReadSet read;
  // Factor p[s .. s+b-1] is read from its last symbol backwards.
  for (std::size_t s = 0; s + b <= m; ++s) {
    read.clear();
    NodeId node = kRoot;
    for (std::size_t k = 0; k < b; ++k) {
      const Value sym = v[s + b - 1 - k];
      node = tree.add_child(node, read.key_for(sym));
      read.add(sym);
    }
  }
  return tree;
}

std::size_t FactorTree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(
      children_.begin(), children_.end(), [](const auto& c) { return c.empty(); }));
}

std::size_t FactorTree::accepted_prefix(std::span<const Value> backward) const {
  ReadSet read;
  NodeId node = kRoot;
  std::size_t depth = 0;
  for (Value sym : backward) {
    if (depth == b_) break;
    auto c = child(node, read.key_for(sym));
    if (!c) break;
    read.add(sym);
    node = *c;
    ++depth;
  }
  return depth;
}

SublinearMatcher::SublinearMatcher(Pattern p, double constant)
    : pattern_(std::move(p)) {
  auto b = choose_b(pattern_.size(), constant);
  if (!b) throw FallbackRequired(pattern_.size());
  plan_ = WindowPlan::for_pattern(pattern_.size(), *b);
  tree_ = FactorTree::build(pattern_, *b);
}

SearchResult SublinearMatcher::search(const IntSeq& text,
                                      std::vector<WindowTrace>* trace) const {
  const std::size_t m = pattern_.size();
  const std::size_t n = text.size();
  if (m > n) throw PatternLongerThanText(m, n);
  auto t = text.values();
  const std::size_t b = plan_.b;
  SearchResult result;
  auto& stats = result.stats;
  if (trace) trace->clear();
  ReadSet read;

  for (Position e = m; e <= n; e += plan_.shift) {
    read.clear();
    FactorTree::NodeId node = FactorTree::kRoot;
    std::size_t depth = 0;
    while (depth < b) {
      const Value sym = t[e - 1 - depth];
      ++stats.symbols_read;
      ++stats.transitions_taken;
      auto c = tree_.child(node, read.key_for(sym));
      if (!c) break;
      read.add(sym);
      node = *c;
      ++depth;
    }
    const Position first = e - m + 1;
    const Position last = std::min(e - b + 1, n - m + 1);
    const bool recognized = depth == b;
    if (recognized) {
      for (Position s = first; s <= last; ++s) {
        ++stats.verifications;
        if (occurs_at(pattern_, t, s, stats)) result.occurrences.push_back({s, 0});
      }
    }
    if (trace) trace->push_back({e, depth, recognized, first, last});
  }
  return result;
}

SearchResult sublinear_search(const Pattern& p, const IntSeq& text,
                              double constant) {
  return SublinearMatcher(p, constant).search(text);
}

RoutedResult sublinear_or_mp(const Pattern& p, const IntSeq& text,
                             double constant) {
  if (choose_b(p.size(), constant)) return {sublinear_search(p, text, constant), false};
  return {mp_search(MpAutomaton::build(p), text), true};
}

}  // namespace opm
