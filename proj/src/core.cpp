#include "opmotif/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace opm {

DuplicateValue::DuplicateValue(Position first, Position second)
    : Error("duplicate value at positions " + std::to_string(first) + " and " +
            std::to_string(second)),
      first_(first),
      second_(second) {}

PositionOutOfRange::PositionOutOfRange(Position pos, std::size_t length)
    : Error("position " + std::to_string(pos) + " outside window of length " +
            std::to_string(length)) {}

PatternLongerThanText::PatternLongerThanText(std::size_t m, std::size_t n)
    : Error("pattern length " + std::to_string(m) + " exceeds text length " +
            std::to_string(n)) {}

IntSeq IntSeq::validate(std::vector<Value> raw) {
  std::unordered_map<Value, Position> seen;
  seen.reserve(raw.size());
  for (Position i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = seen.emplace(raw[i], i + 1);
    if (!inserted) throw DuplicateValue(it->second, i + 1);
  }
  return IntSeq(std::move(raw));
}

IntSeq IntSeq::validate_nonempty(std::vector<Value> raw) {
  if (raw.empty()) throw EmptyInput();
  return validate(std::move(raw));
}

std::string to_string(const RepPair& r) {
  std::string s = "(";
  s += r.lower ? std::to_string(*r.lower) : "-inf";
  s += ",";
  s += r.upper ? std::to_string(*r.upper) : "+inf";
  s += ")";
  return s;
}

std::vector<std::size_t> rank_normalize(std::span<const Value> s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  std::vector<std::size_t> ranks(s.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r + 1;
  return ranks;
}

std::vector<RepPair> compute_rep(std::span<const Value> p) {
  std::vector<RepPair> rep;
  rep.reserve(p.size());
  std::map<Value, Position> prefix;
  for (Position j = 0; j < p.size(); ++j) {
    RepPair r;
    auto above = prefix.upper_bound(p[j]);
    if (above != prefix.end()) r.upper = above->second;
    if (above != prefix.begin()) r.lower = std::prev(above)->second;
    rep.push_back(r);
    prefix.emplace(p[j], j + 1);
  }
  return rep;
}

bool check_extension(std::span<const Value> window, Value alpha,
                     const RepPair& rp) {
  if (rp.lower && (*rp.lower == 0 || *rp.lower > window.size()))
    throw PositionOutOfRange(*rp.lower, window.size());
  if (rp.upper && (*rp.upper == 0 || *rp.upper > window.size()))
    throw PositionOutOfRange(*rp.upper, window.size());
  if (rp.lower && !(window[*rp.lower - 1] < alpha)) return false;
  if (rp.upper && !(alpha < window[*rp.upper - 1])) return false;
  return true;
}

bool is_order_isomorphic(std::span<const Value> a, std::span<const Value> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 1; s < a.size(); ++s)
    for (std::size_t r = 0; r < s; ++r)
      if ((a[r] <=> a[s]) != (b[r] <=> b[s])) return false;
  return true;
}

Pattern::Pattern(IntSeq values)
    : values_(std::move(values)),
      ranks_(rank_normalize(values_.values())),
      rep_(compute_rep(values_.values())) {
  if (values_.empty()) throw EmptyInput();
}

std::vector<Position> SearchResult::positions() const {
  std::vector<Position> out;
  out.reserve(occurrences.size());
  for (const auto& o : occurrences) out.push_back(o.position);
  return out;
}

bool occurs_at(const Pattern& p, std::span<const Value> text, Position start,
               SearchStats& stats) {
  const std::size_t m = p.size();
  if (start == 0 || start - 1 + m > text.size()) return false;
  auto window = text.subspan(start - 1, m);
  for (std::size_t s = 0; s < m; ++s) {
    ++stats.symbols_read;
    if (!check_extension(window.first(s), window[s], p.rep_table()[s]))
      return false;
  }
  return true;
}

SearchResult naive_search(const Pattern& p, const IntSeq& text) {
  const std::size_t m = p.size();
  const std::size_t n = text.size();
  if (m > n) throw PatternLongerThanText(m, n);
  SearchResult result;
  for (Position i = 1; i + m - 1 <= n; ++i)
    if (occurs_at(p, text.values(), i, result.stats))
      result.occurrences.push_back({i, 0});
  return result;
}

std::vector<std::size_t> oi_border_table(const Pattern& p) {
  auto v = p.values();
  std::vector<std::size_t> border(v.size(), 0);
  for (std::size_t j = 1; j <= v.size(); ++j) {
    for (std::size_t k = j - 1; k >= 1; --k) {
      if (is_order_isomorphic(v.first(k), v.subspan(j - k, k))) {
        border[j - 1] = k;
        break;
      }
    }
  }
  return border;
}

}  // namespace opm
