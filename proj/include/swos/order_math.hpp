#pragma once

#include <span>
#include <vector>

#include "swos/instance.hpp"

namespace swos {

/// Inclusive index range [lo, hi] into an array.
struct WindowRange {
  i64 lo;
  i64 hi;
};

/// Reference semantics for window rank machinery. Ranks are 1-based positions
/// in the ascending sort of the (sub)array, ties broken toward the smaller
/// original index. These functions favour clarity over speed; the streaming
/// algorithms never call them on whole arrays.

/// Rank of A[i] within the full array.
i64 rank_of(std::span<const i64> a, i64 i);

/// Index inside [range.lo, range.hi] whose element has rank l in the subarray.
i64 select_index(std::span<const i64> a, WindowRange range, i64 l);

/// Indices of the l smallest-rank elements of the subarray, sorted ascending
/// by index.
std::vector<i64> lowset(std::span<const i64> a, WindowRange range, i64 l);

/// Ranks l' in [1, l] whose rank-l' index inside the subarray exceeds the
/// boundary b, sorted ascending. l = 0 yields the empty set.
std::vector<i64> ranks_past(std::span<const i64> a, i64 l, i64 b, WindowRange range);

/// |ranks_past(l)| + |ranks_past(l-1)| for the window [start, start + k - 1].
/// Non-decreasing in the window start; strictly increases at every element of
/// crossing_set for the same boundary.
i64 crossing_score(std::span<const i64> a, i64 l, i64 b, i64 window_start, i64 k);

/// Window starts i >= 1 where the rank-l index moves from one side of the
/// boundary b to the other between windows i-1 and i.
std::vector<i64> crossing_set(std::span<const i64> a, i64 l, i64 b, i64 k);

}  // namespace swos
