#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Consecutive order-preserving (permutation motif) matching: shared types,
// validation, rank normalization, rep pairs and the naive reference search.
//
// Every position that crosses a public interface is 1-based.
namespace opm {

using Value = std::int64_t;
using Position = std::size_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two equal values in a sequence that must hold distinct integers.
class DuplicateValue : public Error {
 public:
  DuplicateValue(Position first, Position second);
  Position first() const noexcept { return first_; }
  Position second() const noexcept { return second_; }

 private:
  Position first_;
  Position second_;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty input where a non-empty sequence is required") {}
};

class PositionOutOfRange : public Error {
 public:
  PositionOutOfRange(Position pos, std::size_t length);
};

class PatternLongerThanText : public Error {
 public:
  PatternLongerThanText(std::size_t m, std::size_t n);
};

// A sequence of pairwise distinct integers. Only obtainable through
// validation, so holding one is proof of distinctness.
class IntSeq {
 public:
  IntSeq() = default;

  // Throws DuplicateValue naming the two 1-based positions of the earliest
  // repeated value (smallest second index).
  static IntSeq validate(std::vector<Value> raw);
  static IntSeq validate_nonempty(std::vector<Value> raw);

  std::span<const Value> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  // 1-based access.
  Value at(Position pos) const { return values_.at(pos - 1); }

  friend bool operator==(const IntSeq&, const IntSeq&) = default;

 private:
  explicit IntSeq(std::vector<Value> v) : values_(std::move(v)) {}
  std::vector<Value> values_;
};

inline IntSeq validate_seq(std::vector<Value> raw) {
  return IntSeq::validate(std::move(raw));
}

// Positions of the predecessor (`lower`) and successor (`upper`) of a symbol
// among the symbols before it. An empty `lower` stands for -inf and an empty
// `upper` for +inf.
struct RepPair {
  std::optional<Position> lower;
  std::optional<Position> upper;

  static RepPair unbounded() { return {}; }

  friend bool operator==(const RepPair&, const RepPair&) = default;
  friend auto operator<=>(const RepPair&, const RepPair&) = default;
};

struct RepPairHash {
  std::size_t operator()(const RepPair& r) const noexcept {
    std::size_t lo = r.lower ? *r.lower + 1 : 0;
    std::size_t hi = r.upper ? *r.upper + 1 : 0;
    return std::hash<std::size_t>{}(lo * 0x9e3779b97f4a7c15ULL ^ hi);
  }
};

std::string to_string(const RepPair& r);

// ranks[i] = |{ j : s[j] <= s[i] }|
std::vector<std::size_t> rank_normalize(std::span<const Value> s);

// rep[j-1] = rep(p, j) for j = 1..m, positions 1-based into p.
std::vector<RepPair> compute_rep(std::span<const Value> p);

// Constant-time test of Property-1 style extension: does window.alpha stay
// order-isomorphic to the pattern prefix that `rp` extends?
bool check_extension(std::span<const Value> window, Value alpha,
                     const RepPair& rp);

// Pairwise definition, no normalization involved.
bool is_order_isomorphic(std::span<const Value> a, std::span<const Value> b);

class Pattern {
 public:
  // Builds ranks and the rep table. Throws EmptyInput for an empty sequence.
  explicit Pattern(IntSeq values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Value> values() const noexcept { return values_.values(); }
  const IntSeq& seq() const noexcept { return values_; }
  std::span<const std::size_t> ranks() const noexcept { return ranks_; }
  std::span<const RepPair> rep_table() const noexcept { return rep_; }
  // 1-based: rep(1) is always unbounded.
  const RepPair& rep(Position j) const { return rep_.at(j - 1); }

 private:
  IntSeq values_;
  std::vector<std::size_t> ranks_;
  std::vector<RepPair> rep_;
};

inline Pattern rep_table(IntSeq p) { return Pattern(std::move(p)); }

struct Occurrence {
  Position position = 0;
  std::size_t pattern_id = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

struct SearchStats {
  std::uint64_t symbols_read = 0;
  std::uint64_t transitions_taken = 0;
  std::uint64_t verifications = 0;
  // Subset of transitions_taken that followed a failure link.
  std::uint64_t failure_steps = 0;

  SearchStats& operator+=(const SearchStats& o) {
    symbols_read += o.symbols_read;
    transitions_taken += o.transitions_taken;
    verifications += o.verifications;
    failure_steps += o.failure_steps;
    return *this;
  }
};

struct SearchResult {
  std::vector<Occurrence> occurrences;
  SearchStats stats;

  std::vector<Position> positions() const;
};

// Checks a single alignment starting at 1-based `start`. Reads text symbols
// left to right and stops at the first mismatch; every inspected symbol is
// added to stats.symbols_read.
bool occurs_at(const Pattern& p, std::span<const Value> text, Position start,
               SearchStats& stats);

// Exhaustive reference search. Throws PatternLongerThanText when m > n.
SearchResult naive_search(const Pattern& p, const IntSeq& text);

// Brute-force longest proper order-isomorphic border of every prefix:
// result[j-1] for the prefix of length j.
std::vector<std::size_t> oi_border_table(const Pattern& p);

}  // namespace opm
