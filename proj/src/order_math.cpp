#include "swos/order_math.hpp"

#include <algorithm>
#include <stdexcept>

namespace swos {

namespace {

void check_range(std::span<const i64> a, WindowRange range) {
  if (range.lo < 0 || range.hi < range.lo || range.hi >= static_cast<i64>(a.size())) {
    throw std::invalid_argument("order math: bad index range");
  }
}

// (value, original index) pairs of the subarray, sorted by rank.
std::vector<std::pair<i64, i64>> ranked(std::span<const i64> a, WindowRange range) {
  std::vector<std::pair<i64, i64>> v;
  v.reserve(static_cast<size_t>(range.hi - range.lo + 1));
  for (i64 i = range.lo; i <= range.hi; ++i) v.emplace_back(a[static_cast<size_t>(i)], i);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

i64 rank_of(std::span<const i64> a, i64 i) {
  if (i < 0 || i >= static_cast<i64>(a.size())) {
    throw std::invalid_argument("rank_of: index out of range");
  }
  i64 rank = 0;
  for (i64 j = 0; j < static_cast<i64>(a.size()); ++j) {
    const i64 vj = a[static_cast<size_t>(j)];
    const i64 vi = a[static_cast<size_t>(i)];
    if (vj < vi || (vj == vi && j <= i)) ++rank;
  }
  return rank;
}

i64 select_index(std::span<const i64> a, WindowRange range, i64 l) {
  check_range(a, range);
  if (l < 1 || l > range.hi - range.lo + 1) {
    throw std::invalid_argument("select_index: rank out of range");
  }
  return ranked(a, range)[static_cast<size_t>(l - 1)].second;
}

std::vector<i64> lowset(std::span<const i64> a, WindowRange range, i64 l) {
  check_range(a, range);
  if (l < 1 || l > range.hi - range.lo + 1) {
    throw std::invalid_argument("lowset: rank out of range");
  }
  auto v = ranked(a, range);
  std::vector<i64> idx;
  idx.reserve(static_cast<size_t>(l));
  for (i64 t = 0; t < l; ++t) idx.push_back(v[static_cast<size_t>(t)].second);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<i64> ranks_past(std::span<const i64> a, i64 l, i64 b, WindowRange range) {
  check_range(a, range);
  if (l < 0 || l > range.hi - range.lo + 1) {
    throw std::invalid_argument("ranks_past: rank out of range");
  }
  std::vector<i64> out;
  if (l == 0) return out;
  auto v = ranked(a, range);
  for (i64 t = 1; t <= l; ++t) {
    if (v[static_cast<size_t>(t - 1)].second > b) out.push_back(t);
  }
  return out;
}

i64 crossing_score(std::span<const i64> a, i64 l, i64 b, i64 window_start, i64 k) {
  if (l < 1) throw std::invalid_argument("crossing_score: rank must be positive");
  WindowRange range{window_start, window_start + k - 1};
  check_range(a, range);
  return static_cast<i64>(ranks_past(a, l, b, range).size()) +
         static_cast<i64>(ranks_past(a, l - 1, b, range).size());
}

std::vector<i64> crossing_set(std::span<const i64> a, i64 l, i64 b, i64 k) {
  const i64 n = static_cast<i64>(a.size());
  if (l < 1 || k < l || k > n) throw std::invalid_argument("crossing_set: bad parameters");
  std::vector<i64> out;
  auto past = [&](i64 start) {
    return select_index(a, {start, start + k - 1}, l) > b;
  };
  bool prev = past(0);
  for (i64 i = 1; i + k - 1 < n; ++i) {
    bool cur = past(i);
    if (cur != prev) out.push_back(i);
    prev = cur;
  }
  return out;
}

}  // namespace swos
