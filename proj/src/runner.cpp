#include "swos/runner.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "swos/generators.hpp"
#include "swos/ksmin.hpp"
#include "swos/oracle.hpp"
#include "swos/smin.hpp"

namespace swos {

std::optional<Algo> parse_algo(std::string_view name) {
  if (name == "baseline") return Algo::Baseline;
  if (name == "two-pass") return Algo::TwoPass;
  if (name == "small-int") return Algo::SmallInt;
  if (name == "ksmin") return Algo::Ksmin;
  if (name == "comm-smin") return Algo::CommSmin;
  if (name == "comm-ksmin") return Algo::CommKsmin;
  return std::nullopt;
}

std::string algo_name(Algo algo) {
  switch (algo) {
    case Algo::Baseline: return "baseline";
    case Algo::TwoPass: return "two-pass";
    case Algo::SmallInt: return "small-int";
    case Algo::Ksmin: return "ksmin";
    case Algo::CommSmin: return "comm-smin";
    case Algo::CommKsmin: return "comm-ksmin";
  }
  return "?";
}

bool is_comm(Algo algo) { return algo == Algo::CommSmin || algo == Algo::CommKsmin; }

RunOutcome run_algorithm(const ProblemInstance& inst, Algo algo, const RunOptions& opt) {
  ProblemInstance run_inst = inst;
  if (opt.l > 0) run_inst.l = opt.l;
  if (algo == Algo::Baseline || algo == Algo::TwoPass || algo == Algo::SmallInt ||
      algo == Algo::CommSmin) {
    if (opt.l > 1) throw std::invalid_argument("run: this algorithm solves rank 1 only");
    run_inst.l = 1;
  }
  run_inst.validate();

  RunOutcome res;
  res.l = run_inst.l;

  if (is_comm(algo)) {
    if (algo == Algo::CommSmin) {
      auto pr = run_smin_protocol(run_inst, opt.rounds > 0 ? opt.rounds : 3);
      res.outputs = std::move(pr.outputs);
      res.metrics = pr.metrics;
      res.transcript = std::move(pr.transcript);
    } else {
      const int rounds = opt.rounds > 0 ? opt.rounds : static_cast<int>(2 * run_inst.l + 2);
      auto pr = run_ksmin_protocol(run_inst, run_inst.l, rounds);
      res.outputs = std::move(pr.outputs);
      res.metrics = pr.metrics;
      res.transcript = std::move(pr.transcript);
      res.candidates = std::move(pr.candidates);
      res.extra_round = pr.extra_round;
    }
    return res;
  }

  InputTape in(run_inst);
  OutputTape out(run_inst.window_count());
  SpaceMeter meter;
  switch (algo) {
    case Algo::Baseline: res.metrics = run_baseline(run_inst, in, out, meter); break;
    case Algo::TwoPass: res.metrics = run_two_pass(run_inst, in, out, meter); break;
    case Algo::SmallInt: res.metrics = run_small_integer(run_inst, in, out, meter); break;
    case Algo::Ksmin: res.metrics = run_ksmin(run_inst, in, out, meter); break;
    default: throw std::logic_error("run: unhandled algorithm");
  }
  res.outputs = out.finalize();
  return res;
}

std::optional<i64> first_mismatch(const ProblemInstance& inst, i64 l,
                                  const std::vector<i64>& outputs) {
  auto expected = oracle::brute_ksmin(inst.values, inst.k, l);
  if (outputs.size() != expected.size()) return 0;
  for (size_t i = 0; i < expected.size(); ++i) {
    if (outputs[i] != expected[i]) return static_cast<i64>(i);
  }
  return std::nullopt;
}

std::string metrics_csv_header() {
  return "input_passes,output_passes,peak_words,peak_bits_estimate,comm_bits,rounds,verified";
}

std::string metrics_csv_row(const RunMetrics& m) {
  std::ostringstream os;
  os << m.input_passes << ',' << m.output_passes << ',' << m.peak_words << ','
     << m.peak_bits_estimate << ',' << m.comm_bits << ',' << m.rounds << ','
     << (m.verified ? "true" : "false");
  return os.str();
}

std::string metrics_json(const RunMetrics& m) {
  nlohmann::json j{{"input_passes", m.input_passes},
                   {"output_passes", m.output_passes},
                   {"peak_words", m.peak_words},
                   {"peak_bits_estimate", m.peak_bits_estimate},
                   {"comm_bits", m.comm_bits},
                   {"rounds", m.rounds},
                   {"verified", m.verified}};
  return j.dump();
}

namespace {

u64 cell_seed(u64 base, i64 n, int rep) {
  // splitmix-style mix so nearby grid cells land far apart
  u64 z = base ^ (static_cast<u64>(n) * 0x9e3779b97f4a7c15ULL) ^
          (static_cast<u64>(rep) << 32);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  if (spec.algos.empty() || spec.n_list.empty() || spec.repeats < 1 || spec.k_frac <= 0.0 ||
      spec.k_frac > 1.0) {
    throw std::invalid_argument("bench: bad grid");
  }
  i64 fixed_r = -1;
  if (spec.r_mode != "n") {
    try {
      fixed_r = std::stoll(spec.r_mode);
    } catch (const std::exception&) {
      throw std::invalid_argument("bench: r-mode must be \"n\" or an integer");
    }
    if (fixed_r < 0) throw std::invalid_argument("bench: negative value bound");
  }

  std::vector<BenchRow> rows;
  for (i64 n : spec.n_list) {
    for (int rep = 0; rep < spec.repeats; ++rep) {
      const u64 seed = cell_seed(spec.seed, n, rep);
      const i64 k = std::max<i64>(1, static_cast<i64>(std::llround(spec.k_frac * static_cast<double>(n))));
      const i64 r = fixed_r >= 0 ? fixed_r : n;
      const ProblemInstance inst = gen_random(n, std::min(k, n), r, 1, seed);
      for (Algo algo : spec.algos) {
        RunOptions opt;
        opt.l = (algo == Algo::Ksmin || algo == Algo::CommKsmin) ? spec.l : 0;
        opt.rounds = spec.rounds;
        BenchRow row;
        row.algo = algo_name(algo);
        row.n = n;
        row.k = std::min(k, n);
        row.r = r;
        row.seed = seed;
        row.rounds_requested = spec.rounds;
        auto outcome = run_algorithm(inst, algo, opt);
        row.l = outcome.l;
        row.metrics = outcome.metrics;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "algo,n,k,r,l,rounds_requested,seed," << metrics_csv_header() << '\n';
  for (const auto& row : rows) {
    os << row.algo << ',' << row.n << ',' << row.k << ',' << row.r << ',' << row.l << ','
       << row.rounds_requested << ',' << row.seed << ',' << metrics_csv_row(row.metrics) << '\n';
  }
  return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    arr.push_back({{"algo", row.algo},
                   {"n", row.n},
                   {"k", row.k},
                   {"r", row.r},
                   {"l", row.l},
                   {"rounds_requested", row.rounds_requested},
                   {"seed", row.seed},
                   {"metrics", nlohmann::json::parse(metrics_json(row.metrics))}});
  }
  return arr.dump(2);
}

}  // namespace swos
