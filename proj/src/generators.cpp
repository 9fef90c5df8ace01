#include "swos/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace swos {

namespace {

// splitmix64; fixed algorithm so seeded output is identical everywhere.
struct Rng {
  u64 state;

  explicit Rng(u64 seed) : state(seed) {}

  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), multiply-shift reduction.
  i64 below(i64 bound) {
    return static_cast<i64>(
        (static_cast<unsigned __int128>(next()) * static_cast<u64>(bound)) >> 64);
  }
};

}  // namespace

ProblemInstance gen_random(i64 n, i64 k, i64 r, i64 l, u64 seed) {
  ProblemInstance inst;
  inst.k = k;
  inst.r = r;
  inst.l = l;
  if (n < 1 || r < 0) throw std::invalid_argument("gen_random: bad parameters");
  Rng rng(seed);
  inst.values.reserve(static_cast<size_t>(n));
  for (i64 i = 0; i < n; ++i) inst.values.push_back(rng.below(r + 1));
  inst.validate();
  return inst;
}

std::vector<i64> hard_min_bob_half(i64 k, i64 m, i64 i, i64 r) {
  if (m < 1 || k < 2 * m || i < 0 || i > k / (2 * m)) {
    throw std::invalid_argument("hard_min_bob_half: bad parameters");
  }
  std::vector<i64> bob(static_cast<size_t>(k), 0);
  for (i64 t = 0; t < 2 * m * i; ++t) bob[static_cast<size_t>(t)] = r;
  return bob;
}

ProblemInstance gen_hard_min(i64 k, i64 m, i64 r, u64 seed) {
  if (m < 1 || k < 2 * m) throw std::invalid_argument("gen_hard_min: need k >= 2m >= 2");
  if (r < k) throw std::invalid_argument("gen_hard_min: need r >= k");
  Rng rng(seed);

  ProblemInstance inst;
  inst.k = k;
  inst.r = r;
  inst.l = 1;
  inst.values.reserve(static_cast<size_t>(2 * k));
  for (i64 t = 0; t < k; ++t) inst.values.push_back(1 + rng.below(r - 1));  // [1, r-1]
  std::sort(inst.values.begin(), inst.values.end());
  const i64 steps = rng.below(k / (2 * m) + 1);
  for (i64 v : hard_min_bob_half(k, m, steps, r)) inst.values.push_back(v);
  inst.validate();
  return inst;
}

ProblemInstance gen_hard_majority(i64 n, u64 seed, i64 k) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("gen_hard_majority: n must be even");
  Rng rng(seed);

  ProblemInstance inst;
  inst.r = 1;
  inst.values.reserve(static_cast<size_t>(n));
  for (i64 t = 0; t < n / 2; ++t) {
    const i64 bit = rng.below(2);
    inst.values.push_back(bit);
    inst.values.push_back(1 - bit);
  }
  if (k <= 0) {
    k = (n - 1) / 3;
    if (k % 2 == 0) --k;
    k = std::max<i64>(1, k);
  }
  inst.k = k;
  inst.l = (k + 1) / 2;
  inst.validate();
  return inst;
}

}  // namespace swos
