#include <algorithm>
#include <random>

#include "doctest.h"
#include "swos/comm.hpp"
#include "swos/generators.hpp"
#include "swos/oracle.hpp"

using namespace swos;

namespace {

void check_alternation(const Transcript& tr) {
  for (size_t i = 1; i < tr.messages.size(); ++i) {
    CHECK(tr.messages[i].sender != tr.messages[i - 1].sender);
  }
}

ProblemInstance make(std::vector<i64> values, i64 k, i64 r, i64 l = 1) {
  ProblemInstance inst;
  inst.values = std::move(values);
  inst.k = k;
  inst.r = r;
  inst.l = l;
  return inst;
}

}  // namespace

TEST_CASE("message bit accounting") {
  CHECK(encode_bits(3, 0, 100, 255) == 24);
  CHECK(encode_bits(0, 1, 1023, 7) == 10);
  CHECK(encode_bits(0, 0, 1023, 255) == 0);
  CHECK(encode_values({1, 2}, {5}, 1023, 255) == 26);
  CHECK_THROWS_AS(encode_values({300}, {}, 1023, 255), std::invalid_argument);
}

TEST_CASE("minimum protocol on the worked example") {
  auto inst = make({3, 1, 4, 1, 5, 9, 2, 6}, 4, 9);
  auto res = run_smin_protocol(inst, 3);
  CHECK(res.outputs == std::vector<i64>{1, 1, 1, 1, 2});
  CHECK(res.transcript.rounds() == 3);
  CHECK(res.metrics.rounds == 3);
  CHECK(res.metrics.output_passes == 1);
  CHECK(res.metrics.comm_bits == res.transcript.total_bits());
}

TEST_CASE("minimum protocol degenerate ownership") {
  // Alice all zero: every straddling window's answer stays on her side.
  std::vector<i64> v(16, 0);
  for (size_t i = 8; i < 16; ++i) v[i] = 9;
  auto inst = make(v, 8, 9);
  auto res = run_smin_protocol(inst, 3);
  CHECK(res.outputs == oracle::brute_ksmin(inst.values, 8, 1));
  CHECK(res.last_alice_window == 7);

  // Alice all max: the answer leaves her side immediately.
  std::vector<i64> w(16, 9);
  for (size_t i = 8; i < 16; ++i) w[i] = 0;
  auto inst2 = make(w, 8, 9);
  auto res2 = run_smin_protocol(inst2, 3);
  CHECK(res2.outputs == oracle::brute_ksmin(inst2.values, 8, 1));
  CHECK(res2.last_alice_window == 0);
}

TEST_CASE("minimum protocol preconditions") {
  auto inst = make({1, 2, 3, 4}, 2, 4);
  CHECK_THROWS_AS(run_smin_protocol(inst, 4), std::invalid_argument);  // even rounds
  CHECK_THROWS_AS(run_smin_protocol(inst, 1), std::invalid_argument);
  auto odd = make({1, 2, 3}, 1, 3);
  CHECK_THROWS_AS(run_smin_protocol(odd, 3), std::invalid_argument);  // odd length
  auto wide = make({1, 2, 3, 4}, 3, 4);
  CHECK_THROWS_AS(run_smin_protocol(wide, 3), std::invalid_argument);  // window too large
}

TEST_CASE("minimum protocol differential sweep across round budgets") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    const i64 half = 1 + static_cast<i64>(rng() % 60);
    const i64 n = 2 * half;
    const i64 k = 1 + static_cast<i64>(rng() % half);
    const i64 r = static_cast<i64>(rng() % 50);
    const int rounds = 3 + 2 * static_cast<int>(rng() % 3);
    auto inst = gen_random(n, k, r, 1, rng());
    auto res = run_smin_protocol(inst, rounds);
    CHECK(res.outputs == oracle::brute_ksmin(inst.values, k, 1));
    CHECK(res.metrics.rounds == rounds);
    check_alternation(res.transcript);
    // Alice's windows precede Bob's
    CHECK(res.writers.find("BA") == std::string::npos);
  }
}

TEST_CASE("minimum protocol bits shrink as rounds grow") {
  auto inst = gen_random(4096, 2048, 4096, 1, 77);
  i64 prev = -1;
  for (int rounds : {3, 5, 7}) {
    auto res = run_smin_protocol(inst, rounds);
    CHECK(res.outputs == oracle::brute_ksmin(inst.values, inst.k, 1));
    if (prev >= 0) CHECK(res.metrics.comm_bits <= prev);
    prev = res.metrics.comm_bits;
  }
}

TEST_CASE("rank protocol specializes to the minimum protocol outputs") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const i64 half = 1 + static_cast<i64>(rng() % 30);
    const i64 n = 2 * half;
    const i64 k = 1 + static_cast<i64>(rng() % half);
    auto inst = gen_random(n, k, 20, 1, rng());
    auto res = run_ksmin_protocol(inst, 1, 5);
    auto res_min = run_smin_protocol(inst, 3);
    CHECK(res.outputs == res_min.outputs);
  }
}

TEST_CASE("rank protocol differential sweep with structure checks") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 120; ++trial) {
    const i64 half = 1 + static_cast<i64>(rng() % 40);
    const i64 n = 2 * half;
    const i64 k = 1 + static_cast<i64>(rng() % half);
    const i64 l = 1 + static_cast<i64>(rng() % std::min<i64>(k, 4));
    const i64 r = static_cast<i64>(rng() % 30);
    const int extra_budget = static_cast<int>(rng() % 3);
    const int rounds = static_cast<int>(2 * l + 2) + extra_budget;
    auto inst = gen_random(n, k, r, l, rng());
    auto res = run_ksmin_protocol(inst, l, rounds);

    CHECK(res.outputs == oracle::brute_ksmin(inst.values, k, l));
    CHECK(res.metrics.rounds == rounds + (res.extra_round ? 1 : 0));
    CHECK(res.extra_round == ((rounds - 2 * l - 1) % 2 == 0));
    check_alternation(res.transcript);

    // every true handoff window appears among the candidates
    auto expected_crossings = oracle::brute_crossings(inst.values, k, l, n / 2 - 1);
    CHECK(res.crossings == expected_crossings);
    for (i64 c : expected_crossings) {
      CHECK(std::count(res.candidates.begin(), res.candidates.end(), c) > 0);
    }
    CHECK(static_cast<i64>(res.candidates.size()) == 2 * l - 1);
  }
}

TEST_CASE("rank protocol with every answer on Bob's side after the handoff") {
  // Alice holds large values; every window touching Bob's half answers from it.
  std::vector<i64> v(24, 90);
  for (size_t i = 12; i < 24; ++i) v[i] = static_cast<i64>(i - 12);
  auto inst = make(v, 12, 90, 2);
  auto res = run_ksmin_protocol(inst, 2, 8);
  CHECK(res.outputs == oracle::brute_ksmin(inst.values, 12, 2));
  REQUIRE(!res.crossings.empty());
  // one early handoff, then Alice writes nothing further
  for (size_t i = 0; i < res.writers.size(); ++i) {
    const bool before = static_cast<i64>(i) < res.crossings.front();
    CHECK(res.writers[i] == (before ? 'A' : 'B'));
  }
}

TEST_CASE("rank protocol precondition on the round budget") {
  auto inst = gen_random(16, 4, 10, 2, 3);
  CHECK_THROWS_AS(run_ksmin_protocol(inst, 2, 5), std::invalid_argument);  // < 2l + 2
  CHECK_NOTHROW(run_ksmin_protocol(inst, 2, 6));
}
