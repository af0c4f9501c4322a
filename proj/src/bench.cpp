#include "opmotif/bench.hpp"

#include <chrono>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "opmotif/forward_automaton.hpp"
#include "opmotif/mp_automaton.hpp"
#include "opmotif/multi_ac.hpp"

namespace opm {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Reject the low residue so every value mod bound is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

IntSeq random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
  return IntSeq::validate(std::move(v));
}

namespace {

constexpr std::pair<Algorithm, std::string_view> kNames[] = {
    {Algorithm::naive, "naive"},         {Algorithm::mp, "mp"},
    {Algorithm::forward, "forward"},     {Algorithm::forward_lazy, "forward-lazy"},
    {Algorithm::sublinear, "sublinear"}, {Algorithm::ac, "ac"},
};

constexpr std::uint64_t kPatternStream = 0x9e3779b97f4a7c15ULL;

BenchRecord run_trial(const BenchConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = cfg.seed + trial;
  const IntSeq text = random_permutation(cfg.n, seed);
  const Pattern pattern =
      cfg.pattern ? *cfg.pattern : Pattern(random_permutation(cfg.m, seed ^ kPatternStream));

  const auto start = std::chrono::steady_clock::now();
  SearchResult r = run_engine(cfg.algo, pattern, text, cfg.constant);
  const auto stop = std::chrono::steady_clock::now();

  BenchRecord rec;
  rec.algo = std::string(algorithm_name(cfg.algo));
  rec.m = pattern.size();
  rec.n = cfg.n;
  rec.seed = seed;
  rec.occurrences = r.occurrences.size();
  rec.symbols_read = r.stats.symbols_read;
  rec.transitions = r.stats.transitions_taken;
  rec.verifications = r.stats.verifications;
  rec.elapsed_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  return rec;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames)
    if (n == name) return a;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
  for (const auto& [alg, n] : kNames)
    if (alg == a) return n;
  return "?";
}

SearchResult run_engine(Algorithm algo, const Pattern& p, const IntSeq& text,
                        double constant, bool* fell_back) {
  if (fell_back) *fell_back = false;
  switch (algo) {
    case Algorithm::naive:
      return naive_search(p, text);
    case Algorithm::mp:
      return mp_search(MpAutomaton::build(p), text);
    case Algorithm::forward:
      return forward_search(ForwardAutomaton::build(MpAutomaton::build(p)), text);
    case Algorithm::forward_lazy: {
      auto fa = ForwardAutomaton::build_lazy(MpAutomaton::build(p));
      return forward_search_lazy(fa, text);
    }
    case Algorithm::sublinear: {
      auto routed = sublinear_or_mp(p, text, constant);
      if (fell_back) *fell_back = routed.fell_back;
      return std::move(routed.result);
    }
    case Algorithm::ac: {
      if (p.size() > text.size()) throw PatternLongerThanText(p.size(), text.size());
      return ac_search(AcAutomaton::build(std::span(&p, 1)), text);
    }
  }
  throw std::logic_error("unknown algorithm");
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("trials must be at least 1");
  const std::size_t m = cfg.pattern ? cfg.pattern->size() : cfg.m;
  if (m == 0 || m > cfg.n) throw std::invalid_argument("need 1 <= m <= n");

  std::vector<BenchRecord> records(cfg.trials);
  const unsigned jobs = std::max(1U, std::min<unsigned>(cfg.jobs, cfg.trials));
  if (jobs == 1) {
    for (std::size_t k = 0; k < cfg.trials; ++k) records[k] = run_trial(cfg, k);
    return records;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < cfg.trials; k += jobs) records[k] = run_trial(cfg, k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "# prng: " << kPrngDescription << "; trial seed = seed + trial\n";
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.algo << ',' << r.m << ',' << r.n << ',' << r.seed << ','
        << r.occurrences << ',' << r.symbols_read << ',' << r.transitions << ','
        << r.verifications << ',' << r.elapsed_ns << '\n';
  }
}

}  // namespace opm
