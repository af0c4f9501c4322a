#include "opmotif/mp_automaton.hpp"

#include "opmotif/predset.hpp"

namespace opm {

namespace {

std::optional<Position> rebase(const std::optional<PredSet::Entry>& e,
                               Position window_start) {
  if (!e) return std::nullopt;
  return e->payload - window_start + 1;
}

}  // namespace

MpAutomaton MpAutomaton::build(Pattern p) {
  const std::size_t m = p.size();
  auto ranks = p.ranks();
  std::vector<std::size_t> fail(m, 0);

  // `prefix` receives every symbol and yields the forward labels; `border`
  // holds p[j-i .. j-1] for the current candidate border length i.
  PredSet prefix(m);
  PredSet border(m);

  for (Position j = 1; j <= m; ++j) {
    const std::size_t key = ranks[j - 1];
    if (j > 1) {
      auto nb = prefix.query_strict(key);
      RepPair label{rebase(nb.pred, 1), rebase(nb.succ, 1)};
      if (label != p.rep(j))
        throw std::logic_error("forward label mismatch at " + std::to_string(j));
    }
    prefix.insert(key, j);
    if (j == 1) continue;

    std::size_t i = fail[j - 2];
    for (;;) {
      if (i == 0) {
        fail[j - 1] = 1;
        break;
      }
      const Position window_start = j - i;
      auto nb = border.query_strict(key);
      RepPair candidate{rebase(nb.pred, window_start),
                        rebase(nb.succ, window_start)};
      if (candidate == p.rep(i + 1)) {
        fail[j - 1] = i + 1;
        break;
      }
      const std::size_t k = fail[i - 1];
      for (Position q = window_start; q < j - k; ++q) border.erase(ranks[q - 1]);
      i = k;
    }
    border.insert(key, j);
  }
  return MpAutomaton(std::move(p), std::move(fail),
                     prefix.operation_count() + border.operation_count());
}

SearchResult mp_search(const MpAutomaton& a, const IntSeq& text) {
  const std::size_t m = a.size();
  const std::size_t n = text.size();
  if (m > n) throw PatternLongerThanText(m, n);
  auto t = text.values();
  SearchResult result;
  auto& stats = result.stats;
  std::size_t x = 0;
  for (Position i = 1; i <= n; ++i) {
    ++stats.symbols_read;
    for (;;) {
      if (x == m) {
        x = a.fail(m);
        ++stats.transitions_taken;
        ++stats.failure_steps;
        continue;
      }
      ++stats.transitions_taken;
      if (forward_accepts(a.forward_label(x), t, i, x)) {
        if (++x == m) result.occurrences.push_back({i - m + 1, 0});
        break;
      }
      if (x == 0) break;
      x = a.fail(x);
      ++stats.transitions_taken;
      ++stats.failure_steps;
    }
  }
  return result;
}

}  // namespace opm
