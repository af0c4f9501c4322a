#include "opmotif/predset.hpp"

#include <bit>
#include <string>

namespace opm {

KeyPresent::KeyPresent(std::size_t key)
    : Error("key " + std::to_string(key) + " already present") {}

KeyAbsent::KeyAbsent(std::size_t key)
    : Error("key " + std::to_string(key) + " not present") {}

KeyOutOfUniverse::KeyOutOfUniverse(std::size_t key, std::size_t capacity)
    : Error("key " + std::to_string(key) + " outside universe [1.." +
            std::to_string(capacity) + "]") {}

PredSet::PredSet(std::size_t capacity)
    : capacity_(capacity), payload_(capacity, 0) {
  std::size_t bits = capacity == 0 ? 1 : capacity;
  do {
    std::size_t words = (bits + 63) / 64;
    levels_.emplace_back(words, Word{0});
    bits = words;
  } while (bits > 1);
}

void PredSet::check_key(std::size_t key) const {
  if (key == 0 || key > capacity_) throw KeyOutOfUniverse(key, capacity_);
}

bool PredSet::contains(std::size_t key) const {
  check_key(key);
  return test(key - 1);
}

void PredSet::insert(std::size_t key, Position payload) {
  ++ops_;
  check_key(key);
  std::size_t idx = key - 1;
  if (test(idx)) throw KeyPresent(key);
  payload_[idx] = payload;
  for (auto& level : levels_) {
    Word& w = level[idx >> 6];
    bool was_empty = w == 0;
    w |= Word{1} << (idx & 63);
    if (!was_empty) break;
    idx >>= 6;
  }
  ++size_;
}

void PredSet::erase(std::size_t key) {
  ++ops_;
  check_key(key);
  std::size_t idx = key - 1;
  if (!test(idx)) throw KeyAbsent(key);
  for (auto& level : levels_) {
    Word& w = level[idx >> 6];
    w &= ~(Word{1} << (idx & 63));
    if (w != 0) break;
    idx >>= 6;
  }
  --size_;
}

std::optional<std::size_t> PredSet::prev_below(std::size_t level,
                                               std::size_t idx) const {
  if (level == levels_.size()) return std::nullopt;
  const auto& words = levels_[level];
  std::size_t wi = idx >> 6;
  std::size_t bit = idx & 63;
  Word below = bit == 0 ? 0 : words[wi] & ((Word{1} << bit) - 1);
  if (below != 0) return (wi << 6) | (63 - std::countl_zero(below));
  if (wi == 0) return std::nullopt;
  auto up = prev_below(level + 1, wi);
  if (!up) return std::nullopt;
  // Bit *up of the summary names the nearest non-empty word to the left.
  const Word w = words[*up];
  return (*up << 6) | (63 - std::countl_zero(w));
}

std::optional<std::size_t> PredSet::next_above(std::size_t level,
                                               std::size_t idx) const {
  if (level == levels_.size()) return std::nullopt;
  const auto& words = levels_[level];
  std::size_t wi = idx >> 6;
  std::size_t bit = idx & 63;
  Word above = bit == 63 ? 0 : words[wi] & ~((Word{2} << bit) - 1);
  if (above != 0) return (wi << 6) | std::countr_zero(above);
  if (wi + 1 >= words.size()) return std::nullopt;
  auto up = next_above(level + 1, wi);
  if (!up) return std::nullopt;
  const Word w = words[*up];
  return (*up << 6) | std::countr_zero(w);
}

PredSet::Neighbors PredSet::query(std::size_t y) const {
  ++ops_;
  check_key(y);
  std::size_t idx = y - 1;
  Neighbors n;
  if (test(idx)) {
    n.pred = entry_at(idx);
  } else if (auto p = prev_below(0, idx)) {
    n.pred = entry_at(*p);
  }
  if (auto s = next_above(0, idx)) n.succ = entry_at(*s);
  return n;
}

PredSet::Neighbors PredSet::query_strict(std::size_t y) const {
  ++ops_;
  check_key(y);
  std::size_t idx = y - 1;
  Neighbors n;
  if (auto p = prev_below(0, idx)) n.pred = entry_at(*p);
  if (auto s = next_above(0, idx)) n.succ = entry_at(*s);
  return n;
}

}  // namespace opm
