#pragma once

#include <vector>

#include "swos/capped_rank_store.hpp"
#include "swos/tapes.hpp"

namespace swos {

/// Per-block plan for the rank-l run. Windows are grouped into blocks of
/// consecutive starts; for each block, every window's rank-l index provably
/// lies inside [lo, hi], and the answers for the whole block are emitted in
/// output pass `output_pass` while the stream sits on element `hi`.
struct BlockInfo {
  i64 first_window = 0;  // window starts [first_window, end_window)
  i64 end_window = 0;
  i64 lo = 0;  // stream-index interval bracketing every rank-l index
  i64 hi = 0;
  i64 rank_offset = 0;  // lower-rank elements caught inside [lo, hi]
  i64 output_pass = 0;  // input pass (2..l+1) that emits this block
};

struct BlockPlan {
  i64 block_len = 0;
  std::vector<i64> boundary_pos;  // window starts carrying a boundary store
  std::vector<BlockInfo> blocks;
};

/// crossing_score read off a boundary store holding the l smallest
/// (value, index) pairs of its window.
i64 store_crossing_score(const CappedRankStore& store, i64 l, i64 b);

/// Builds the block intervals, rank offsets and output-pass assignment from
/// the boundary stores gathered in pass 1. stores[i] holds the l smallest
/// entries of window [positions[i], positions[i] + k).
BlockPlan plan_blocks(const std::vector<CappedRankStore>& stores,
                      const std::vector<i64>& positions, const ProblemInstance& inst, i64 l);

struct KsminStats {
  i64 block_len = 0;
  i64 block_count = 0;
  i64 max_open_blocks = 0;
};

/// Sliding-window rank-l selection in exactly l+1 input passes and at most l
/// output passes, O(l^1.5 * sqrt(n)) words. Pass 1 stores the l smallest
/// entries of ~sqrt(n*l) boundary windows; each later pass replays the stream
/// keeping rank stores only for blocks whose interval is currently open, and
/// emits the blocks assigned to it.
RunMetrics run_ksmin(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                     SpaceMeter& meter, KsminStats* stats = nullptr);

}  // namespace swos
