#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "swos/oracle.hpp"
#include "swos/order_math.hpp"

using namespace swos;

namespace {

// Rank straight from its definition, as an extra cross-check.
i64 definitional_rank(const std::vector<i64>& a, i64 i) {
  i64 rank = 0;
  for (i64 j = 0; j < static_cast<i64>(a.size()); ++j) {
    const i64 vi = a[static_cast<size_t>(i)];
    const i64 vj = a[static_cast<size_t>(j)];
    if (vj < vi || (vj == vi && j <= i)) ++rank;
  }
  return rank;
}

std::vector<i64> random_array(std::mt19937_64& rng, i64 n, i64 r) {
  std::vector<i64> a(static_cast<size_t>(n));
  for (auto& v : a) v = static_cast<i64>(rng() % (static_cast<u64>(r) + 1));
  return a;
}

}  // namespace

TEST_CASE("rank_of breaks ties by position") {
  std::vector<i64> a{5, 3, 5};
  CHECK(rank_of(a, 0) == 2);
  CHECK(rank_of(a, 1) == 1);
  CHECK(rank_of(a, 2) == 3);
  std::vector<i64> single{7};
  CHECK(rank_of(single, 0) == 1);
  CHECK_THROWS_AS(rank_of(a, 3), std::invalid_argument);
}

TEST_CASE("select_index and lowset") {
  std::vector<i64> a{4, 2, 7, 1};
  CHECK(select_index(a, {0, 3}, 1) == 3);
  CHECK(select_index(a, {0, 3}, 2) == 1);
  std::vector<i64> ties{3, 3};
  CHECK(select_index(ties, {0, 1}, 1) == 0);
  CHECK(select_index(ties, {0, 1}, 2) == 1);
  CHECK_THROWS_AS(select_index(a, {0, 3}, 5), std::invalid_argument);

  CHECK(lowset(a, {0, 3}, 2) == std::vector<i64>{1, 3});
  CHECK(lowset(a, {0, 3}, 4) == std::vector<i64>{0, 1, 2, 3});
  CHECK(lowset(a, {0, 3}, 1) == std::vector<i64>{3});
}

TEST_CASE("ranks_past against the boundary") {
  std::vector<i64> a{1, 5, 0};
  CHECK(ranks_past(a, 1, 1, {1, 2}) == std::vector<i64>{1});
  CHECK(ranks_past(a, 2, 2, {1, 2}).empty());      // boundary at range end
  CHECK(ranks_past(a, 2, 0, {1, 2}) == std::vector<i64>{1, 2});  // boundary below range
  CHECK(ranks_past(a, 0, 1, {1, 2}).empty());
}

TEST_CASE("crossing score over the spec'd tiny example") {
  std::vector<i64> a{1, 5, 0};
  CHECK(crossing_score(a, 1, 1, 0, 2) == 0);
  CHECK(crossing_score(a, 1, 1, 1, 2) == 1);

  // rank 1 and a boundary past the array: score 0 everywhere
  CHECK(crossing_score(a, 1, 5, 0, 2) == 0);
  CHECK(crossing_score(a, 1, 5, 1, 2) == 0);
  // boundary below every index: score 1 everywhere for rank 1
  CHECK(crossing_score(a, 1, -1, 0, 2) == 1);
  CHECK(crossing_score(a, 1, -1, 1, 2) == 1);
}

TEST_CASE("crossing_set small cases") {
  std::vector<i64> a{1, 5, 0};
  CHECK(crossing_set(a, 1, 1, 2) == std::vector<i64>{1});
  std::vector<i64> flat{4, 4, 4, 4};
  CHECK(crossing_set(flat, 1, 1, 4).empty());  // single window
  CHECK(crossing_set(flat, 2, 1, 2) == oracle::brute_crossings(flat, 2, 2, 1));
}

TEST_CASE("order machinery matches the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const i64 n = 2 + static_cast<i64>(rng() % 40);
    const i64 r = 1 + static_cast<i64>(rng() % 10);
    const i64 k = 1 + static_cast<i64>(rng() % n);
    const i64 l = 1 + static_cast<i64>(rng() % std::min<i64>(k, 4));
    const i64 b = static_cast<i64>(rng() % static_cast<u64>(n + 2)) - 1;
    auto a = random_array(rng, n, r);

    for (i64 i = 0; i < n; ++i) {
      CHECK(rank_of(a, i) == oracle::brute_rank(a, i));
      CHECK(rank_of(a, i) == definitional_rank(a, i));
    }
    for (i64 w = 0; w + k <= n; ++w) {
      WindowRange range{w, w + k - 1};
      CHECK(select_index(a, range, l) == oracle::brute_select(a, w, w + k - 1, l));
      CHECK(lowset(a, range, l) == oracle::brute_lowset(a, w, w + k - 1, l));
      CHECK(ranks_past(a, l, b, range) == oracle::brute_ranks_past(a, l, b, w, w + k - 1));
      CHECK(crossing_score(a, l, b, w, k) == oracle::brute_crossing_score(a, l, b, w, k));
    }
    CHECK(crossing_set(a, l, b, k) == oracle::brute_crossings(a, k, l, b));
  }
}

TEST_CASE("lowsets never move left, scores never decrease, crossings stay few") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 60; ++trial) {
    const i64 n = 2 + static_cast<i64>(rng() % 48);
    const i64 r = 1 + static_cast<i64>(rng() % 6);
    const i64 k = 1 + static_cast<i64>(rng() % n);
    const i64 l = 1 + static_cast<i64>(rng() % std::min<i64>(k, 4));
    const i64 b = static_cast<i64>(rng() % static_cast<u64>(n + 2)) - 1;
    auto a = random_array(rng, n, r);

    std::vector<i64> prev;
    for (i64 w = 0; w + k <= n; ++w) {
      auto cur = lowset(a, {w, w + k - 1}, l);
      if (w > 0) {
        for (i64 t = 0; t < l; ++t) {
          CHECK(prev[static_cast<size_t>(t)] <= cur[static_cast<size_t>(t)]);
        }
      }
      prev = cur;
    }

    auto crossings = crossing_set(a, l, b, k);
    CHECK(static_cast<i64>(crossings.size()) <= 2 * l - 1);
    size_t at = 0;
    i64 prev_score = crossing_score(a, l, b, 0, k);
    CHECK(prev_score <= 2 * l - 1);
    for (i64 w = 1; w + k <= n; ++w) {
      const i64 score = crossing_score(a, l, b, w, k);
      CHECK(score >= prev_score);
      CHECK(score <= 2 * l - 1);
      if (at < crossings.size() && crossings[at] == w) {
        CHECK(score > prev_score);  // strict rise at every crossing
        ++at;
      }
      prev_score = score;
    }
  }
}
