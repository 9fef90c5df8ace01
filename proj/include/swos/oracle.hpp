#pragma once

#include <vector>

#include "swos/instance.hpp"

namespace swos::oracle {

/// Brute-force reference answers used for differential testing. Deliberately
/// simple and independent of the algorithm modules: everything is a fresh
/// per-window copy plus a sort or a counting loop.

/// Rank-l value of every window of length k.
std::vector<i64> brute_ksmin(const std::vector<i64>& a, i64 k, i64 l);

/// Number of window starts i with min(window i) != min(window i+1).
i64 brute_change_count(const std::vector<i64>& a, i64 k);

/// Window starts where the rank-l index crosses the boundary b.
std::vector<i64> brute_crossings(const std::vector<i64>& a, i64 k, i64 l, i64 b);

/// Counterparts of the order machinery, for implementation-independence
/// checks.
i64 brute_rank(const std::vector<i64>& a, i64 i);
i64 brute_select(const std::vector<i64>& a, i64 lo, i64 hi, i64 l);
std::vector<i64> brute_lowset(const std::vector<i64>& a, i64 lo, i64 hi, i64 l);
std::vector<i64> brute_ranks_past(const std::vector<i64>& a, i64 l, i64 b, i64 lo, i64 hi);
i64 brute_crossing_score(const std::vector<i64>& a, i64 l, i64 b, i64 window_start, i64 k);

}  // namespace swos::oracle
