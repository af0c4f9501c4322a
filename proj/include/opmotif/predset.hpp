#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "opmotif/core.hpp"

namespace opm {

class KeyPresent : public Error {
 public:
  explicit KeyPresent(std::size_t key);
};

class KeyAbsent : public Error {
 public:
  explicit KeyAbsent(std::size_t key);
};

class KeyOutOfUniverse : public Error {
 public:
  KeyOutOfUniverse(std::size_t key, std::size_t capacity);
};

// Dynamic predecessor/successor set over keys [1..capacity], each key
// carrying a position payload.
//
// Layout: a bitset over the universe plus summary levels, each bit of level
// k+1 flagging a non-empty 64-bit word of level k, up to a single top word.
// Updates and queries touch at most one word per level, i.e.
// ceil(log64 capacity) words. Space is one bit plus one payload per key of
// the universe.
//
// Every insert, erase and query adds one to operation_count(); the counter
// is instrumentation only and does not affect set contents.
class PredSet {
 public:
  struct Entry {
    std::size_t key;
    Position payload;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Empty optional means -inf (pred) or +inf (succ).
  struct Neighbors {
    std::optional<Entry> pred;
    std::optional<Entry> succ;

    friend bool operator==(const Neighbors&, const Neighbors&) = default;
  };

  explicit PredSet(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(std::size_t key) const;

  void insert(std::size_t key, Position payload);
  void erase(std::size_t key);

  // pred: largest key <= y; succ: smallest key > y.
  Neighbors query(std::size_t y) const;
  // pred: largest key < y; succ: smallest key > y.
  Neighbors query_strict(std::size_t y) const;

  std::uint64_t operation_count() const noexcept { return ops_; }
  void reset_operation_count() noexcept { ops_ = 0; }

 private:
  using Word = std::uint64_t;

  void check_key(std::size_t key) const;
  bool test(std::size_t idx) const {
    return (levels_[0][idx >> 6] >> (idx & 63)) & 1U;
  }
  // Largest set index < idx / smallest set index > idx at `level`.
  std::optional<std::size_t> prev_below(std::size_t level, std::size_t idx) const;
  std::optional<std::size_t> next_above(std::size_t level, std::size_t idx) const;
  Entry entry_at(std::size_t idx) const { return {idx + 1, payload_[idx]}; }

  std::size_t capacity_;
  std::size_t size_ = 0;
  std::vector<std::vector<Word>> levels_;
  std::vector<Position> payload_;
  mutable std::uint64_t ops_ = 0;
};

}  // namespace opm
