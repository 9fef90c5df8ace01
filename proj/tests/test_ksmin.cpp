#include <random>

#include "doctest.h"
#include "swos/generators.hpp"
#include "swos/ksmin.hpp"
#include "swos/oracle.hpp"
#include "swos/order_math.hpp"
#include "swos/smin.hpp"

using namespace swos;

namespace {

struct Run {
  std::vector<i64> outputs;
  RunMetrics metrics;
  KsminStats stats;
};

Run run(const ProblemInstance& inst) {
  InputTape in(inst);
  OutputTape out(inst.window_count());
  SpaceMeter meter;
  Run r;
  r.metrics = run_ksmin(inst, in, out, meter, &r.stats);
  r.outputs = out.finalize();
  CHECK(meter.current() == 0);  // boundary stores, plan and block stores all released
  return r;
}

// Boundary stores built directly, for exercising the planner on its own.
std::vector<CappedRankStore> stores_for(const ProblemInstance& inst,
                                        const std::vector<i64>& positions) {
  std::vector<CappedRankStore> stores;
  for (i64 p : positions) {
    stores.emplace_back(inst.l);
    for (i64 j = p; j < p + inst.k; ++j) {
      stores.back().insert(j, inst.values[static_cast<size_t>(j)]);
    }
  }
  return stores;
}

std::vector<i64> boundary_positions(const ProblemInstance& inst, i64 block_len) {
  std::vector<i64> pos;
  const i64 windows = inst.window_count();
  for (i64 q = 0; q * block_len <= windows - 1; ++q) pos.push_back(q * block_len);
  if (pos.back() != windows - 1 || pos.size() == 1) pos.push_back(windows - 1);
  return pos;
}

}  // namespace

TEST_CASE("store crossing score agrees with the array version") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const i64 n = 2 + static_cast<i64>(rng() % 40);
    const i64 k = 1 + static_cast<i64>(rng() % n);
    const i64 l = 1 + static_cast<i64>(rng() % std::min<i64>(k, 4));
    const i64 start = static_cast<i64>(rng() % static_cast<u64>(n - k + 1));
    const i64 b = static_cast<i64>(rng() % static_cast<u64>(n + 2)) - 1;
    auto inst = gen_random(n, k, 9, l, rng());

    CappedRankStore store(l);
    for (i64 j = start; j < start + k; ++j) store.insert(j, inst.values[static_cast<size_t>(j)]);
    CHECK(store_crossing_score(store, l, b) == crossing_score(inst.values, l, b, start, k));
  }
}

TEST_CASE("plan intervals bracket every window's answer index") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    const i64 n = 8 + static_cast<i64>(rng() % 90);
    const i64 k = 1 + static_cast<i64>(rng() % n);
    const i64 l = 1 + static_cast<i64>(rng() % std::min<i64>(k, 4));
    auto inst = gen_random(n, k, 1 + static_cast<i64>(rng() % 20), l, rng());
    const i64 block_len = 1 + static_cast<i64>(rng() % 8);
    auto positions = boundary_positions(inst, block_len);
    if (positions.size() < 2) continue;
    auto stores = stores_for(inst, positions);
    auto plan = plan_blocks(stores, positions, inst, l);

    for (const auto& blk : plan.blocks) {
      CHECK(blk.lo <= blk.hi);
      CHECK(blk.output_pass >= 2);
      CHECK(blk.output_pass <= l + 1);
      for (i64 w = blk.first_window; w < blk.end_window; ++w) {
        const i64 s = oracle::brute_select(inst.values, w, w + k - 1, l);
        CHECK(blk.lo <= s);
        CHECK(s <= blk.hi);
      }
    }
  }
}

TEST_CASE("rank-1 plans emit everything in the first output pass") {
  auto inst = gen_random(64, 16, 40, 1, 7);
  auto positions = boundary_positions(inst, 8);
  auto stores = stores_for(inst, positions);
  auto plan = plan_blocks(stores, positions, inst, 1);
  for (const auto& blk : plan.blocks) CHECK(blk.output_pass == 2);
}

TEST_CASE("single-block plan covers the whole window range") {
  auto inst = gen_random(24, 20, 30, 2, 11);  // 5 windows, one block
  auto positions = boundary_positions(inst, 8);
  auto stores = stores_for(inst, positions);
  auto plan = plan_blocks(stores, positions, inst, 2);
  REQUIRE(plan.blocks.size() == 1);
  CHECK(plan.blocks[0].first_window == 0);
  CHECK(plan.blocks[0].end_window == inst.window_count());
}

TEST_CASE("rank-l run: spec'd specializations") {
  auto inst = gen_random(48, 12, 30, 1, 13);
  auto got = run(inst);
  InputTape in(inst);
  OutputTape out(inst.window_count());
  SpaceMeter meter;
  run_two_pass(inst, in, out, meter);
  CHECK(got.outputs == out.finalize());  // l = 1 reduces to the two-pass answers

  auto maxima = gen_random(40, 10, 25, 10, 15);  // l = k: window maxima
  CHECK(run(maxima).outputs == oracle::brute_ksmin(maxima.values, 10, 10));
}

TEST_CASE("rank-l differential sweep with pass discipline") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 120; ++trial) {
    const i64 n = 1 + static_cast<i64>(rng() % 150);
    const i64 k = 1 + static_cast<i64>(rng() % n);
    const i64 l = 1 + static_cast<i64>(rng() % std::min<i64>(k, 5));
    const i64 r = static_cast<i64>(rng() % 60);
    auto inst = gen_random(n, k, r, l, rng());
    auto got = run(inst);
    CHECK(got.outputs == oracle::brute_ksmin(inst.values, k, l));
    CHECK(got.metrics.input_passes == l + 1);
    CHECK(got.metrics.output_passes <= l);
    CHECK(got.stats.max_open_blocks <= 4 * l - 2);
  }
}

TEST_CASE("window majority via the median rank on paired boolean strings") {
  for (u64 seed = 0; seed < 10; ++seed) {
    auto inst = gen_hard_majority(40, seed);
    auto got = run(inst);
    CHECK(got.outputs == oracle::brute_ksmin(inst.values, inst.k, inst.l));
    CHECK(got.metrics.input_passes == inst.l + 1);
  }
}

TEST_CASE("rank-l peak scales with the plan dimensions") {
  auto inst = gen_random(128, 32, 128, 3, 21);
  auto got = run(inst);
  const i64 b = got.stats.block_len;
  const i64 windows = inst.window_count();
  const i64 bound = 3 * (windows / b + 1) * 3 + (4 * 3 - 2) * b * 3;  // stores + open blocks
  CHECK(got.metrics.peak_words <= bound + 4 * got.stats.block_count + 8);
}
