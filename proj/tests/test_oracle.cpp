#include <random>
#include <stdexcept>

#include "doctest.h"
#include "swos/oracle.hpp"

using namespace swos;
using namespace swos::oracle;

TEST_CASE("brute_ksmin basics") {
  std::vector<i64> a{2, 1, 3, 0, 5};
  CHECK(brute_ksmin(a, 3, 1) == std::vector<i64>{1, 0, 0});
  CHECK(brute_ksmin(a, 3, 3) == std::vector<i64>{3, 3, 5});  // l = k: window maxima
  CHECK(brute_ksmin(a, 1, 1) == a);
  CHECK_THROWS_AS(brute_ksmin(a, 6, 1), std::invalid_argument);
  CHECK_THROWS_AS(brute_ksmin(a, 3, 4), std::invalid_argument);
}

TEST_CASE("brute_ksmin median of a boolean window is the majority bit") {
  std::vector<i64> a{1, 1, 0, 1, 0, 0, 0, 1, 1};
  const i64 k = 3;
  auto med = brute_ksmin(a, k, (k + 1) / 2);
  for (size_t i = 0; i + k <= a.size(); ++i) {
    i64 ones = 0;
    for (size_t j = i; j < i + k; ++j) ones += a[j];
    CHECK(med[i] == (ones > k / 2 ? 1 : 0));
  }
}

TEST_CASE("brute_change_count") {
  std::vector<i64> flat{4, 4, 4, 4};
  CHECK(brute_change_count(flat, 2) == 0);
  std::vector<i64> rising{1, 2, 3, 4};
  CHECK(brute_change_count(rising, 1) == 3);
  std::vector<i64> a{1, 5, 0};
  CHECK(brute_change_count(a, 2) == 1);
}

TEST_CASE("brute_crossings") {
  std::vector<i64> a{1, 5, 0};
  CHECK(brute_crossings(a, 2, 1, 1) == std::vector<i64>{1});
  std::vector<i64> single{3, 1, 2};
  CHECK(brute_crossings(single, 3, 2, 1).empty());  // n = k: no adjacent pair

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const i64 n = 2 + static_cast<i64>(rng() % 40);
    const i64 k = 1 + static_cast<i64>(rng() % n);
    const i64 l = 1 + static_cast<i64>(rng() % std::min<i64>(k, 5));
    const i64 b = static_cast<i64>(rng() % static_cast<u64>(n)) - 1;
    std::vector<i64> v(static_cast<size_t>(n));
    for (auto& x : v) x = static_cast<i64>(rng() % 8);
    CHECK(static_cast<i64>(brute_crossings(v, k, l, b).size()) <= 2 * l - 1);
  }
}
