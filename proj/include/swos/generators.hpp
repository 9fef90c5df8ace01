#pragma once

#include "swos/instance.hpp"

namespace swos {

/// n values uniform in [0, r]; deterministic in the seed.
ProblemInstance gen_random(i64 n, i64 k, i64 r, i64 l, u64 seed);

/// Adversarial minimum instance over n = 2k: Alice's half is a random
/// non-decreasing sequence in [1, r-1]; Bob's half is 2*m*i copies of r
/// followed by zeros, for a random i in [0, k/(2m)].
ProblemInstance gen_hard_min(i64 k, i64 m, i64 r, u64 seed);

/// Bob-half pattern of gen_hard_min for a fixed i, exposed for tests.
std::vector<i64> hard_min_bob_half(i64 k, i64 m, i64 i, i64 r);

/// Boolean string of even length n whose consecutive pairs sum to 1. The
/// window length is the caller's choice; k <= 0 picks the largest odd integer
/// below n/3. The rank is set to the window median.
ProblemInstance gen_hard_majority(i64 n, u64 seed, i64 k = 0);

}  // namespace swos
