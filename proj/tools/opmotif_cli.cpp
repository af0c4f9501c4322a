// opmotif: consecutive order-preserving pattern search from the command line.
//
// Exit codes: 0 success, 2 I/O failure, 64 usage error, 65 malformed data.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "opmotif/bench.hpp"
#include "opmotif/core.hpp"
#include "opmotif/multi_ac.hpp"
#include "opmotif/text_format.hpp"

namespace {

constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

namespace tf = opm::text_format;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_stats(std::ostream& out, const opm::SearchStats& s) {
  out << "# stats: symbols_read=" << s.symbols_read
      << " transitions=" << s.transitions_taken
      << " verifications=" << s.verifications << '\n';
}

// Writes to `path`, or standard output when empty.
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) throw tf::IoError("write to standard output failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tf::IoError("cannot open " + path + " for writing");
  write(out);
  out.flush();
  if (!out) throw tf::IoError("write failed: " + path);
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& out_path) {
  const auto perm = opm::random_permutation(n, seed);
  emit(out_path, [&](std::ostream& out) { tf::write_sequence(out, perm); });
  return 0;
}

int cmd_search(const std::string& algo_name, const std::string& pattern_path,
               const std::string& text_path, bool stats, bool quiet,
               double constant) {
  auto algo = opm::parse_algorithm(algo_name);
  if (!algo || *algo == opm::Algorithm::ac)
    throw UsageError("unknown --algo '" + algo_name +
                     "' (naive, mp, forward, forward-lazy, sublinear)");
  const opm::Pattern pattern(tf::read_sequence_file(pattern_path));
  const auto text = tf::read_sequence_file(text_path);
  bool fell_back = false;
  auto result = opm::run_engine(*algo, pattern, text, constant, &fell_back);
  if (fell_back && !quiet)
    std::cerr << "opmotif: pattern length " << pattern.size()
              << " too short for sublinear search, using mp\n";
  std::ostringstream out;
  for (auto pos : result.positions()) out << pos << '\n';
  if (stats) print_stats(out, result.stats);
  emit("", [&](std::ostream& o) { o << out.str(); });
  return 0;
}

int cmd_multisearch(const std::string& patterns_path, const std::string& text_path,
                    bool stats) {
  std::vector<opm::Pattern> patterns;
  for (auto& seq : tf::read_pattern_lines(patterns_path))
    patterns.emplace_back(std::move(seq));
  const auto text = tf::read_sequence_file(text_path);
  const auto ac = opm::AcAutomaton::build(patterns);
  const auto result = opm::ac_search(ac, text);
  std::ostringstream out;
  for (const auto& occ : result.occurrences)
    out << occ.position << '\t' << occ.pattern_id + 1 << '\n';
  if (stats) print_stats(out, result.stats);
  emit("", [&](std::ostream& o) { o << out.str(); });
  return 0;
}

int cmd_bench(const std::string& algo_name, opm::BenchConfig cfg,
              const std::string& pattern_path, const std::string& out_path) {
  auto algo = opm::parse_algorithm(algo_name);
  if (!algo) throw UsageError("unknown --algo '" + algo_name + "'");
  cfg.algo = *algo;
  if (!pattern_path.empty())
    cfg.pattern.emplace(tf::read_sequence_file(pattern_path));
  const std::size_t m = cfg.pattern ? cfg.pattern->size() : cfg.m;
  if (m == 0 || m > cfg.n) throw UsageError("need 1 <= m <= n");
  const auto records = opm::run_bench(cfg);
  emit(out_path, [&](std::ostream& out) { opm::write_csv(out, records); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Consecutive order-preserving pattern search.\n"
      "Exit codes: 0 ok, 2 I/O error, 64 usage error, 65 malformed data."};
  app.require_subcommand(1);

  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a random permutation of [1..n]");
  gen->add_option("--n", gen_n, "Length")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--out", gen_out, "Output file (default: standard output)");

  std::string algo = "mp";
  std::string pattern_path, text_path;
  bool stats = false, quiet = false;
  double constant = opm::kDefaultFactorConstant;
  auto* search = app.add_subcommand("search", "Report 1-based occurrence positions");
  search->add_option("--algo", algo, "naive | mp | forward | forward-lazy | sublinear");
  search->add_option("pattern", pattern_path, "Pattern file")->required();
  search->add_option("text", text_path, "Text file")->required();
  search->add_flag("--stats", stats, "Append a '# stats:' line");
  search->add_flag("--quiet", quiet, "Suppress the sublinear fallback note");
  search->add_option("--constant", constant, "Factor-length constant for sublinear")
      ->check(CLI::PositiveNumber);

  std::string patterns_path, multi_text_path;
  bool multi_stats = false;
  auto* multi = app.add_subcommand("multisearch",
                                   "Search one pattern per line; prints position<TAB>index");
  multi->add_option("patterns", patterns_path, "Pattern file")->required();
  multi->add_option("text", multi_text_path, "Text file")->required();
  multi->add_flag("--stats", multi_stats, "Append a '# stats:' line");

  opm::BenchConfig cfg;
  std::string bench_algo = "mp", bench_pattern, bench_out;
  auto* bench = app.add_subcommand("bench", "Run instrumented trials and emit CSV");
  bench->add_option("--algo", bench_algo, "naive | mp | forward | forward-lazy | sublinear | ac");
  bench->add_option("--m", cfg.m, "Pattern length");
  bench->add_option("--pattern", bench_pattern, "Pattern file (overrides --m)");
  bench->add_option("--n", cfg.n, "Text length")->check(CLI::PositiveNumber);
  bench->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber);
  bench->add_option("--seed", cfg.seed, "Base seed");
  bench->add_option("--constant", cfg.constant, "Factor-length constant for sublinear")
      ->check(CLI::PositiveNumber);
  bench->add_option("--jobs", cfg.jobs, "Worker threads");
  bench->add_option("--out", bench_out, "CSV file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_n, gen_seed, gen_out);
    if (*search) return cmd_search(algo, pattern_path, text_path, stats, quiet, constant);
    if (*multi) return cmd_multisearch(patterns_path, multi_text_path, multi_stats);
    if (*bench) return cmd_bench(bench_algo, cfg, bench_pattern, bench_out);
  } catch (const UsageError& e) {
    std::cerr << "opmotif: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tf::IoError& e) {
    std::cerr << "opmotif: " << e.what() << '\n';
    return kExitIo;
  } catch (const opm::Error& e) {
    std::cerr << "opmotif: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
