#include "opmotif/multi_ac.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "opmotif/predset.hpp"

namespace opm {

namespace {

std::optional<Position> rebase(const std::optional<PredSet::Entry>& e,
                               Position window_start) {
  if (!e) return std::nullopt;
  return e->payload - window_start + 1;
}

}  // namespace

std::vector<RepPair> normalize(const Pattern& p) {
  auto rep = p.rep_table();
  return {rep.begin(), rep.end()};
}

std::vector<std::vector<RepPair>> normalize_set(std::span<const Pattern> ps) {
  std::vector<std::vector<RepPair>> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(normalize(p));
  return out;
}

std::optional<AcAutomaton::NodeId> AcAutomaton::child(NodeId id,
                                                      const RepPair& key) const {
  const auto& ch = nodes_[id].children;
  auto it = std::lower_bound(ch.begin(), ch.end(), key,
                             [](const auto& e, const RepPair& k) { return e.first < k; });
  if (it == ch.end() || it->first != key) return std::nullopt;
  return it->second;
}

AcAutomaton::NodeId AcAutomaton::add_child(NodeId parent, const RepPair& key) {
  if (auto c = child(parent, key)) return *c;
  const auto id = static_cast<NodeId>(nodes_.size());
  Node n;
  n.depth = nodes_[parent].depth + 1;
  n.parent = parent;
  n.fail = kNone;
  nodes_.push_back(std::move(n));
  auto& ch = nodes_[parent].children;
  auto it = std::lower_bound(ch.begin(), ch.end(), key,
                             [](const auto& e, const RepPair& k) { return e.first < k; });
  ch.insert(it, {key, id});
  return id;
}

AcAutomaton AcAutomaton::build(std::span<const Pattern> patterns) {
  if (patterns.empty()) throw EmptyInput();
  AcAutomaton ac;
  ac.nodes_.emplace_back();
  ac.nodes_[kRoot].fail = kRoot;

  // Normalization through an insert-only predecessor set per pattern,
  // cross-checked against the pattern's own rep table.
  struct Walk {
    const Pattern* pattern;
    std::vector<NodeId> path;  // path[d] = node at depth d
  };
  std::vector<Walk> walks;
  std::map<NodeId, std::size_t> walk_of_terminal;
  std::size_t longest = 0;
  for (std::size_t id = 0; id < patterns.size(); ++id) {
    const Pattern& p = patterns[id];
    const std::size_t len = p.size();
    ac.pattern_lengths_.push_back(len);
    ac.total_length_ += len;
    longest = std::max(longest, len);

    PredSet prefix(len);
    std::vector<NodeId> path{kRoot};
    for (Position j = 1; j <= len; ++j) {
      const std::size_t key = p.ranks()[j - 1];
      auto nb = prefix.query_strict(key);
      RepPair label{rebase(nb.pred, 1), rebase(nb.succ, 1)};
      if (label != p.rep(j))
        throw std::logic_error("normalization mismatch at " + std::to_string(j));
      prefix.insert(key, j);
      path.push_back(ac.add_child(path.back(), label));
    }
    ac.build_ops_ += prefix.operation_count();
    ac.nodes_[path.back()].outputs.push_back(id);
    // One construction walk per distinct normalized pattern.
    if (walk_of_terminal.emplace(path.back(), walks.size()).second)
      walks.push_back({&p, std::move(path)});
  }

  // Failure links, layer by layer. Each walk owns a predecessor set over its
  // pattern's ranks holding p[d-i .. d-1], i = depth(fail(parent)).
  std::vector<PredSet> windows;
  std::vector<std::size_t> window_len(walks.size(), 0);
  windows.reserve(walks.size());
  for (const auto& w : walks) windows.emplace_back(w.pattern->size());

  for (std::size_t d = 1; d <= longest; ++d) {
    for (std::size_t wi = 0; wi < walks.size(); ++wi) {
      const Walk& walk = walks[wi];
      const Pattern& p = *walk.pattern;
      if (p.size() < d) continue;
      PredSet& window = windows[wi];
      auto ranks = p.ranks();
      const NodeId v = walk.path[d];
      const NodeId u = walk.path[d - 1];
      std::size_t i = window_len[wi];
      assert(i == ac.nodes_[ac.nodes_[u].fail].depth || u == kRoot);

      if (ac.nodes_[v].fail == kNone) {
        NodeId target = kRoot;
        if (d > 1) {
          NodeId w = ac.nodes_[u].fail;
          for (;;) {
            if (w == kRoot) {
              target = *ac.child(kRoot, RepPair::unbounded());
              break;
            }
            auto nb = window.query_strict(ranks[d - 1]);
            RepPair key{rebase(nb.pred, d - i), rebase(nb.succ, d - i)};
            if (auto c = ac.child(w, key)) {
              target = *c;
              break;
            }
            w = ac.nodes_[w].fail;
            const std::size_t k = ac.nodes_[w].depth;
            for (Position q = d - i; q < d - k; ++q) window.erase(ranks[q - 1]);
            i = k;
          }
        }
        ac.nodes_[v].fail = target;
      }

      const std::size_t f = ac.nodes_[ac.nodes_[v].fail].depth;
      if (f == 0) continue;  // depth 1: the window stays empty
      for (Position q = d - i; q + f <= d; ++q) window.erase(ranks[q - 1]);
      window.insert(ranks[d - 1], d);
      window_len[wi] = f;
    }
  }
  for (const auto& w : windows) ac.build_ops_ += w.operation_count();

  // Output links in depth order; every failure target is shallower.
  std::vector<NodeId> order(ac.nodes_.size());
  for (NodeId k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return ac.nodes_[a].depth < ac.nodes_[b].depth;
  });
  for (NodeId v : order) {
    if (v == kRoot) continue;
    const Node& f = ac.nodes_[ac.nodes_[v].fail];
    ac.nodes_[v].output_link =
        f.outputs.empty() ? f.output_link : ac.nodes_[v].fail;
  }
  return ac;
}

SearchResult ac_search(const AcAutomaton& a, const IntSeq& text) {
  const std::size_t n = text.size();
  SearchResult result;
  if (n == 0) return result;
  auto& stats = result.stats;
  const auto ranks = rank_normalize(text.values());
  PredSet window(n);
  using NodeId = AcAutomaton::NodeId;
  NodeId x = AcAutomaton::kRoot;

  for (Position i = 1; i <= n; ++i) {
    ++stats.symbols_read;
    const std::size_t key = ranks[i - 1];
    for (;;) {
      const std::size_t k = a.node(x).depth;
      assert(window.size() == k);
      auto nb = window.query_strict(key);
      RepPair label{rebase(nb.pred, i - k), rebase(nb.succ, i - k)};
      ++stats.transitions_taken;
      if (auto c = a.child(x, label)) {
        window.insert(key, i);
        x = *c;
        break;
      }
      // The root always has the unbounded child, so x is not the root here.
      const NodeId f = a.node(x).fail;
      const std::size_t kf = a.node(f).depth;
      for (Position q = i - k; q < i - kf; ++q) window.erase(ranks[q - 1]);
      x = f;
      ++stats.transitions_taken;
      ++stats.failure_steps;
    }
    for (NodeId o = x; o != AcAutomaton::kNone;) {
      const auto& node = a.node(o);
      for (std::size_t id : node.outputs)
        result.occurrences.push_back({i - node.depth + 1, id});
      o = node.output_link;
    }
  }
  std::sort(result.occurrences.begin(), result.occurrences.end());
  return result;
}

}  // namespace opm
