#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "opmotif/core.hpp"
#include "opmotif/sublinear.hpp"

namespace opm {

// Platform-stable generator: std::mt19937_64 (output fixed by the standard)
// with rejection-sampled bounded draws, so no library distribution is
// involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::string_view kPrngDescription =
    "mt19937_64, rejection-sampled bounds, Fisher-Yates shuffle";

// Uniform permutation of [1..n] by Fisher-Yates; identical for identical
// (n, seed) on every platform.
IntSeq random_permutation(std::size_t n, std::uint64_t seed);

enum class Algorithm { naive, mp, forward, forward_lazy, sublinear, ac };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

// Runs one single-pattern search with the named engine. `sublinear` falls
// back to mp when the pattern is too short; `fell_back` reports it.
SearchResult run_engine(Algorithm algo, const Pattern& p, const IntSeq& text,
                        double constant = kDefaultFactorConstant,
                        bool* fell_back = nullptr);

struct BenchConfig {
  Algorithm algo = Algorithm::mp;
  std::size_t m = 8;
  // When set, used for every trial instead of a fresh random pattern.
  std::optional<Pattern> pattern;
  std::size_t n = 1024;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double constant = kDefaultFactorConstant;
  unsigned jobs = 1;
};

struct BenchRecord {
  std::string algo;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t occurrences = 0;
  std::uint64_t symbols_read = 0;
  std::uint64_t transitions = 0;
  std::uint64_t verifications = 0;
  std::uint64_t elapsed_ns = 0;
};

// Trial k uses text seed `seed + k`; its random pattern is drawn from a
// separate stream derived from the same trial seed. Records come back in
// trial order whatever `jobs` is. Throws std::invalid_argument for
// trials == 0 or m > n.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "algo,m,n,seed,occurrences,symbols_read,transitions,verifications,elapsed_ns";

// A `# prng: ...` provenance comment, the header row, then one row per
// record.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace opm
