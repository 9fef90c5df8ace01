#include "swos/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace swos::oracle {

namespace {

void check_window_params(const std::vector<i64>& a, i64 k, i64 l) {
  const i64 n = static_cast<i64>(a.size());
  if (n < 1 || k < 1 || k > n || l < 1 || l > k) {
    throw std::invalid_argument("oracle: bad window parameters");
  }
}

// Indices of [lo, hi] ordered by (value, index); the tie rule matches the
// rank definition.
std::vector<i64> sorted_indices(const std::vector<i64>& a, i64 lo, i64 hi) {
  if (lo < 0 || hi < lo || hi >= static_cast<i64>(a.size())) {
    throw std::invalid_argument("oracle: bad index range");
  }
  std::vector<i64> idx;
  for (i64 i = lo; i <= hi; ++i) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](i64 x, i64 y) {
    return a[static_cast<size_t>(x)] < a[static_cast<size_t>(y)];
  });
  return idx;
}

}  // namespace

std::vector<i64> brute_ksmin(const std::vector<i64>& a, i64 k, i64 l) {
  check_window_params(a, k, l);
  const i64 n = static_cast<i64>(a.size());
  std::vector<i64> out;
  out.reserve(static_cast<size_t>(n - k + 1));
  std::vector<i64> window(static_cast<size_t>(k));
  for (i64 i = 0; i + k - 1 < n; ++i) {
    std::copy(a.begin() + i, a.begin() + i + k, window.begin());
    std::nth_element(window.begin(), window.begin() + (l - 1), window.end());
    out.push_back(window[static_cast<size_t>(l - 1)]);
  }
  return out;
}

i64 brute_change_count(const std::vector<i64>& a, i64 k) {
  check_window_params(a, k, 1);
  const i64 n = static_cast<i64>(a.size());
  i64 changes = 0;
  i64 prev = 0;
  for (i64 i = 0; i + k - 1 < n; ++i) {
    i64 low = a[static_cast<size_t>(i)];
    for (i64 j = i + 1; j < i + k; ++j) low = std::min(low, a[static_cast<size_t>(j)]);
    if (i > 0 && low != prev) ++changes;
    prev = low;
  }
  return changes;
}

std::vector<i64> brute_crossings(const std::vector<i64>& a, i64 k, i64 l, i64 b) {
  check_window_params(a, k, l);
  const i64 n = static_cast<i64>(a.size());
  std::vector<i64> out;
  auto on_far_side = [&](i64 start) {
    return sorted_indices(a, start, start + k - 1)[static_cast<size_t>(l - 1)] > b;
  };
  for (i64 i = 1; i + k - 1 < n; ++i) {
    if (on_far_side(i - 1) != on_far_side(i)) out.push_back(i);
  }
  return out;
}

i64 brute_rank(const std::vector<i64>& a, i64 i) {
  auto idx = sorted_indices(a, 0, static_cast<i64>(a.size()) - 1);
  for (size_t pos = 0; pos < idx.size(); ++pos) {
    if (idx[pos] == i) return static_cast<i64>(pos) + 1;
  }
  throw std::invalid_argument("oracle: index out of range");
}

i64 brute_select(const std::vector<i64>& a, i64 lo, i64 hi, i64 l) {
  auto idx = sorted_indices(a, lo, hi);
  if (l < 1 || l > static_cast<i64>(idx.size())) {
    throw std::invalid_argument("oracle: rank out of range");
  }
  return idx[static_cast<size_t>(l - 1)];
}

std::vector<i64> brute_lowset(const std::vector<i64>& a, i64 lo, i64 hi, i64 l) {
  auto idx = sorted_indices(a, lo, hi);
  if (l < 1 || l > static_cast<i64>(idx.size())) {
    throw std::invalid_argument("oracle: rank out of range");
  }
  idx.resize(static_cast<size_t>(l));
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<i64> brute_ranks_past(const std::vector<i64>& a, i64 l, i64 b, i64 lo, i64 hi) {
  auto idx = sorted_indices(a, lo, hi);
  if (l < 0 || l > static_cast<i64>(idx.size())) {
    throw std::invalid_argument("oracle: rank out of range");
  }
  std::vector<i64> out;
  for (i64 t = 1; t <= l; ++t) {
    if (idx[static_cast<size_t>(t - 1)] > b) out.push_back(t);
  }
  return out;
}

i64 brute_crossing_score(const std::vector<i64>& a, i64 l, i64 b, i64 window_start, i64 k) {
  const i64 hi = window_start + k - 1;
  return static_cast<i64>(brute_ranks_past(a, l, b, window_start, hi).size()) +
         static_cast<i64>(brute_ranks_past(a, l - 1, b, window_start, hi).size());
}

}  // namespace swos::oracle
