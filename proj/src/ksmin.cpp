#include "swos/ksmin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swos {

namespace {

i64 ceil_sqrt_div(i64 x, i64 d) {
  i64 s = static_cast<i64>(std::sqrt(static_cast<double>(x) / static_cast<double>(d)));
  while (s * s * d < x) ++s;
  while (s > 1 && (s - 1) * (s - 1) * d >= x) --s;
  return s;
}

// Count of the first `upto` store entries whose index exceeds b.
i64 entries_past(const CappedRankStore& store, i64 upto, i64 b) {
  i64 count = 0;
  const auto& es = store.entries();
  for (i64 t = 0; t < upto; ++t) {
    if (es[static_cast<size_t>(t)].index > b) ++count;
  }
  return count;
}

}  // namespace

i64 store_crossing_score(const CappedRankStore& store, i64 l, i64 b) {
  if (store.size() < l) throw std::logic_error("boundary store holds fewer than l entries");
  return entries_past(store, l, b) + entries_past(store, l - 1, b);
}

BlockPlan plan_blocks(const std::vector<CappedRankStore>& stores,
                      const std::vector<i64>& positions, const ProblemInstance& inst, i64 l) {
  if (stores.size() != positions.size() || stores.size() < 2) {
    throw std::invalid_argument("plan_blocks: need one store per boundary");
  }
  const i64 windows = inst.window_count();
  const i64 nblocks = static_cast<i64>(stores.size()) - 1;

  BlockPlan plan;
  plan.boundary_pos = positions;
  plan.blocks.reserve(static_cast<size_t>(nblocks));

  for (i64 i = 0; i < nblocks; ++i) {
    const CappedRankStore& left = stores[static_cast<size_t>(i)];
    const CappedRankStore& right = stores[static_cast<size_t>(i + 1)];

    BlockInfo blk;
    blk.first_window = positions[static_cast<size_t>(i)];
    blk.end_window = (i + 1 == nblocks) ? windows : positions[static_cast<size_t>(i + 1)];

    // Maximal interval around the left boundary's rank-l index on which the
    // crossing score still separates the two boundary windows.
    blk.lo = blk.hi = left.kth(l).index;
    while (blk.lo > 0 &&
           store_crossing_score(left, l, blk.lo - 1) < store_crossing_score(right, l, blk.lo - 1)) {
      --blk.lo;
    }
    while (store_crossing_score(left, l, blk.hi) < store_crossing_score(right, l, blk.hi)) {
      ++blk.hi;
    }

    blk.rank_offset = entries_past(left, l - 1, blk.lo - 1) - entries_past(left, l - 1, blk.hi);

    // The interval's right end always belongs to the right boundary window's
    // l smallest; its position there (by index order) picks the output pass.
    std::vector<i64> right_indices;
    right_indices.reserve(static_cast<size_t>(right.size()));
    for (const auto& e : right.entries()) right_indices.push_back(e.index);
    std::sort(right_indices.begin(), right_indices.end());
    auto it = std::find(right_indices.begin(), right_indices.end(), blk.hi);
    if (it == right_indices.end()) {
      throw std::logic_error("plan_blocks: interval end missing from right boundary store");
    }
    blk.output_pass = (it - right_indices.begin()) + 2;

    plan.blocks.push_back(blk);
  }
  return plan;
}

RunMetrics run_ksmin(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                     SpaceMeter& meter, KsminStats* stats) {
  inst.validate();
  const i64 n = inst.n();
  const i64 k = inst.k;
  const i64 l = inst.l;
  const i64 windows = inst.window_count();

  const i64 block_len = std::max<i64>(1, ceil_sqrt_div(n, l));
  std::vector<i64> positions;
  for (i64 q = 0; q * block_len <= windows - 1; ++q) positions.push_back(q * block_len);
  if (positions.back() != windows - 1 || positions.size() == 1) {
    positions.push_back(windows - 1);  // anchor the final boundary at the last window
  }
  const i64 nblocks = static_cast<i64>(positions.size()) - 1;
  if (stats) {
    stats->block_len = block_len;
    stats->block_count = nblocks;
  }

  // Pass 1: l smallest entries of every boundary window.
  std::vector<CappedRankStore> boundary;
  boundary.reserve(positions.size());
  for (size_t s = 0; s < positions.size(); ++s) boundary.emplace_back(l, &meter);
  in.begin_pass();
  while (auto e = in.next()) {
    for (size_t s = 0; s < positions.size(); ++s) {
      const i64 start = positions[s];
      if (start <= e->index && e->index < start + k) boundary[s].insert(e->index, e->value);
    }
  }

  BlockPlan plan = plan_blocks(boundary, positions, inst, l);
  meter.adjust(4 * nblocks);  // per-block plan record: interval, offset, pass

  const i64 open_limit = 4 * l - 2;

  for (i64 pass = 2; pass <= l + 1; ++pass) {
    in.begin_pass();
    bool emitting = false;
    std::vector<std::vector<CappedRankStore>> open(static_cast<size_t>(nblocks));
    i64 open_count = 0;

    while (auto e = in.next()) {
      const i64 j = e->index;

      // Intervals opening at j allocate one rank store per window in the
      // block; point intervals (lo == hi) never hold memory.
      for (i64 b = 0; b < nblocks; ++b) {
        const BlockInfo& blk = plan.blocks[static_cast<size_t>(b)];
        if (blk.lo == j && blk.lo < blk.hi) {
          auto& stores = open[static_cast<size_t>(b)];
          stores.reserve(static_cast<size_t>(blk.end_window - blk.first_window));
          for (i64 w = blk.first_window; w < blk.end_window; ++w) stores.emplace_back(l, &meter);
          ++open_count;
        }
      }
      if (open_count > open_limit) {
        throw std::logic_error("rank-l run: more open block intervals than the plan allows");
      }
      if (stats) stats->max_open_blocks = std::max(stats->max_open_blocks, open_count);

      for (i64 b = 0; b < nblocks; ++b) {
        auto& stores = open[static_cast<size_t>(b)];
        if (stores.empty()) continue;
        const BlockInfo& blk = plan.blocks[static_cast<size_t>(b)];
        const i64 w_lo = std::max(blk.first_window, j - k + 1);
        const i64 w_hi = std::min(blk.end_window - 1, j);
        for (i64 w = w_lo; w <= w_hi; ++w) {
          stores[static_cast<size_t>(w - blk.first_window)].insert(j, e->value);
        }
      }

      // Blocks whose interval ends at j emit now (ascending block order keeps
      // the within-pass output sorted), then drop their stores.
      for (i64 b = 0; b < nblocks; ++b) {
        const BlockInfo& blk = plan.blocks[static_cast<size_t>(b)];
        if (blk.hi != j) continue;
        if (blk.output_pass == pass) {
          if (!emitting) {
            out.begin_pass();
            emitting = true;
          }
          if (blk.lo == blk.hi) {
            for (i64 w = blk.first_window; w < blk.end_window; ++w) out.emit(w, e->value);
          } else {
            const auto& stores = open[static_cast<size_t>(b)];
            for (i64 w = blk.first_window; w < blk.end_window; ++w) {
              const auto& st = stores[static_cast<size_t>(w - blk.first_window)];
              out.emit(w, st.kth(blk.rank_offset + 1).value);
            }
          }
        }
        if (blk.lo < blk.hi && !open[static_cast<size_t>(b)].empty()) {
          open[static_cast<size_t>(b)].clear();
          --open_count;
        }
      }
    }
    if (open_count != 0) throw std::logic_error("rank-l run: block interval left open at pass end");
  }

  meter.adjust(-4 * nblocks);
  boundary.clear();

  return streaming_metrics(inst, in, out, meter);
}

}  // namespace swos
