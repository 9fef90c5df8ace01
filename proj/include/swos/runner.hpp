#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swos/comm.hpp"
#include "swos/tapes.hpp"

namespace swos {

enum class Algo { Baseline, TwoPass, SmallInt, Ksmin, CommSmin, CommKsmin };

std::optional<Algo> parse_algo(std::string_view name);
std::string algo_name(Algo algo);
bool is_comm(Algo algo);

struct RunOptions {
  i64 l = 0;      // overrides the instance rank when > 0
  int rounds = 0;  // protocol rounds; 0 picks the minimum legal count
};

struct RunOutcome {
  std::vector<i64> outputs;
  RunMetrics metrics;
  i64 l = 1;  // rank the run actually solved
  std::optional<Transcript> transcript;
  std::vector<i64> candidates;
  bool extra_round = false;
};

/// Runs one algorithm on one instance with fresh tapes and meter; throws
/// std::invalid_argument when the instance violates the algorithm's
/// preconditions.
RunOutcome run_algorithm(const ProblemInstance& inst, Algo algo, const RunOptions& opt = {});

/// First window where `outputs` disagrees with the brute-force answer, if any.
std::optional<i64> first_mismatch(const ProblemInstance& inst, i64 l,
                                  const std::vector<i64>& outputs);

std::string metrics_csv_header();
std::string metrics_csv_row(const RunMetrics& m);
std::string metrics_json(const RunMetrics& m);

struct BenchSpec {
  std::vector<Algo> algos;
  std::vector<i64> n_list;
  double k_frac = 0.5;
  std::string r_mode = "n";  // "n" or a literal bound
  i64 l = 1;
  int rounds = 0;
  int repeats = 1;
  u64 seed = 1;
};

struct BenchRow {
  std::string algo;
  i64 n = 0, k = 0, r = 0, l = 0;
  int rounds_requested = 0;
  u64 seed = 0;
  RunMetrics metrics;
};

/// One row per (algorithm, instance) cell, deterministic in the seed; all
/// algorithms of a cell see the same instance.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

}  // namespace swos
