// swos: generate, run, verify and benchmark sliding-window order-statistic
// algorithms under a metered multi-pass tape model.

#include <cstdint>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "swos/generators.hpp"
#include "swos/oracle.hpp"
#include "swos/runner.hpp"

namespace {

using swos::i64;

struct InstanceFlags {
  std::string input_file;
  i64 n = 0, k = 0, r = -1, l = 1;
  i64 m = 1;
  std::uint64_t seed = 1;
  std::string family = "random";
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, bool with_family) {
  cmd->add_option("--input", f.input_file, "instance file (header \"N K R l\", then N values)");
  cmd->add_option("--n", f.n, "stream length for a generated instance");
  cmd->add_option("--k", f.k, "window length");
  cmd->add_option("--r", f.r, "value bound (default n)");
  cmd->add_option("--l", f.l, "target rank");
  cmd->add_option("--seed", f.seed, "generator seed")->envname("SWOS_SEED");
  if (with_family) {
    cmd->add_option("--family", f.family, "random | hard-min | hard-maj")
        ->check(CLI::IsMember({"random", "hard-min", "hard-maj"}));
    cmd->add_option("--m", f.m, "step parameter of the hard-min family");
  }
}

swos::ProblemInstance make_instance(const InstanceFlags& f) {
  if (!f.input_file.empty()) return swos::load_instance_file(f.input_file);
  if (f.n < 1) throw std::invalid_argument("need --input or --n/--k generator flags");
  const i64 k = f.k > 0 ? f.k : std::max<i64>(1, f.n / 2);
  const i64 r = f.r >= 0 ? f.r : f.n;
  if (f.family == "hard-min") return swos::gen_hard_min(k, f.m, r, f.seed);
  if (f.family == "hard-maj") return swos::gen_hard_majority(f.n, f.seed, f.k);
  return swos::gen_random(f.n, k, r, f.l, f.seed);
}

void write_outputs(const std::vector<i64>& outputs, const std::string& path) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
  for (size_t i = 0; i < outputs.size(); ++i) {
    *os << outputs[i] << (i + 1 == outputs.size() ? '\n' : ' ');
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sliding-window order statistics: streaming runs, two-party protocols, oracles"};
  app.require_subcommand(1);

  // --- gen ---
  InstanceFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  add_instance_flags(gen, gen_flags, true);
  gen->add_option("--out", gen_out, "write to file instead of stdout");

  // --- run ---
  InstanceFlags run_flags;
  std::string run_algo = "baseline", run_out, metrics_format = "json";
  int run_rounds = 0;
  bool run_check = false, dump_transcript = false;
  auto* run = app.add_subcommand("run", "run one algorithm, print outputs and metrics");
  add_instance_flags(run, run_flags, false);
  run->add_option("--algo", run_algo,
                  "baseline | two-pass | small-int | ksmin | comm-smin | comm-ksmin")
      ->required();
  run->add_option("--rounds", run_rounds, "protocol round budget");
  run->add_option("--output", run_out, "write outputs to file instead of stdout");
  run->add_option("--metrics-format", metrics_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--check", run_check, "also verify against the brute-force oracle");
  run->add_flag("--dump-transcript", dump_transcript, "print protocol messages");

  // --- verify ---
  InstanceFlags verify_flags;
  std::string verify_algo = "baseline";
  int verify_rounds = 0;
  i64 corrupt_window = -1;
  auto* verify = app.add_subcommand("verify", "run one algorithm and compare with the oracle");
  add_instance_flags(verify, verify_flags, false);
  verify->add_option("--algo", verify_algo)->required();
  verify->add_option("--rounds", verify_rounds, "protocol round budget");
  verify->add_option("--corrupt-window", corrupt_window)->group("");  // test hook

  // --- bench ---
  swos::BenchSpec spec;
  std::vector<std::string> bench_algos{"two-pass"};
  std::vector<i64> n_list{4096};
  std::string bench_format = "csv";
  auto* bench = app.add_subcommand("bench", "run a metrics grid");
  bench->add_option("--algos", bench_algos, "algorithms to run")->delimiter(',');
  bench->add_option("--n-list", n_list, "stream lengths")->delimiter(',');
  bench->add_option("--k-frac", spec.k_frac, "window length as a fraction of n");
  bench->add_option("--r-mode", spec.r_mode, "\"n\" or a fixed value bound");
  bench->add_option("--l", spec.l, "rank for the rank-l algorithms");
  bench->add_option("--rounds", spec.rounds, "protocol round budget");
  bench->add_option("--repeats", spec.repeats, "instances per grid cell");
  bench->add_option("--seed", spec.seed, "base seed")->envname("SWOS_SEED");
  bench->add_option("--format", bench_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      auto inst = make_instance(gen_flags);
      if (gen_out.empty()) {
        swos::write_instance(inst, std::cout);
      } else {
        swos::save_instance_file(inst, gen_out);
      }
      return 0;
    }

    if (run->parsed()) {
      auto algo = swos::parse_algo(run_algo);
      if (!algo) throw std::invalid_argument("unknown algorithm: " + run_algo);
      auto inst = make_instance(run_flags);
      swos::RunOptions opt;
      opt.l = run_flags.l;
      opt.rounds = run_rounds;
      auto outcome = swos::run_algorithm(inst, *algo, opt);
      if (run_check) {
        outcome.metrics.verified = !swos::first_mismatch(inst, outcome.l, outcome.outputs);
      }
      write_outputs(outcome.outputs, run_out);
      if (metrics_format == "csv") {
        std::cout << swos::metrics_csv_header() << '\n'
                  << swos::metrics_csv_row(outcome.metrics) << '\n';
      } else {
        std::cout << swos::metrics_json(outcome.metrics) << '\n';
      }
      if (dump_transcript && outcome.transcript) {
        for (const auto& m : outcome.transcript->messages) {
          std::cout << "round " << m.round << ' ' << m.sender << ' ' << m.kind << ": "
                    << m.value_count << " values, " << m.index_count << " indices, " << m.bits
                    << " bits\n";
        }
        std::cout << "total " << outcome.transcript->total_bits() << " bits ("
                  << outcome.transcript->total_value_bits(inst.r) << " in values)\n";
      }
      if (run_check && !outcome.metrics.verified) return 1;
      return 0;
    }

    if (verify->parsed()) {
      auto algo = swos::parse_algo(verify_algo);
      if (!algo) throw std::invalid_argument("unknown algorithm: " + verify_algo);
      auto inst = make_instance(verify_flags);
      swos::RunOptions opt;
      opt.l = verify_flags.l;
      opt.rounds = verify_rounds;
      auto outcome = swos::run_algorithm(inst, *algo, opt);
      if (corrupt_window >= 0 && corrupt_window < static_cast<i64>(outcome.outputs.size())) {
        outcome.outputs[static_cast<size_t>(corrupt_window)] += 1;  // test hook
      }
      auto mismatch = swos::first_mismatch(inst, outcome.l, outcome.outputs);
      outcome.metrics.verified = !mismatch;
      std::cout << swos::metrics_json(outcome.metrics) << '\n';
      if (mismatch) {
        auto expected = swos::oracle::brute_ksmin(inst.values, inst.k, outcome.l);
        std::cerr << "mismatch at window " << *mismatch << ": got "
                  << outcome.outputs[static_cast<size_t>(*mismatch)] << ", expected "
                  << expected[static_cast<size_t>(*mismatch)] << '\n';
        return 1;
      }
      return 0;
    }

    if (bench->parsed()) {
      for (const auto& name : bench_algos) {
        auto algo = swos::parse_algo(name);
        if (!algo) throw std::invalid_argument("unknown algorithm: " + name);
        spec.algos.push_back(*algo);
      }
      spec.n_list = n_list;
      auto rows = swos::run_bench(spec);
      std::cout << (bench_format == "json" ? swos::bench_json(rows) : swos::bench_csv(rows));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
