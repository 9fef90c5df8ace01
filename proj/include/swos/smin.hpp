#pragma once

#include <utility>
#include <vector>

#include "swos/tapes.hpp"

namespace swos {

/// Single-pass monotonic-queue baseline. One input pass, one output pass,
/// peak space min(k, r + 1) + O(1) words.
RunMetrics run_baseline(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                        SpaceMeter& meter);

struct TwoPassStats {
  i64 sample_count = 0;
  i64 stride = 0;
  std::vector<std::pair<i64, i64>> samples;  // per sample: (latest min index, min value)
};

/// Two input passes, one output pass, O(sqrt(n)) words. Pass 1 records the
/// minimum (value, latest index) of ~sqrt(W) evenly spaced windows; pass 2
/// fills the gaps block by block, exploiting that the minimum's index never
/// moves left as the window slides right.
RunMetrics run_two_pass(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                        SpaceMeter& meter, TwoPassStats* stats = nullptr);

struct SmallIntStats {
  i64 bucket_count = 0;
  i64 change_log_len = 0;
  i64 rise_count = 0;
  i64 max_queue_len = 0;
};

/// Two input passes, one output pass, O(sqrt(n * r / k)) words; beats the
/// generic two-pass run when r is much smaller than k. Pass 1 tracks which of
/// P value buckets holds each window minimum and logs the positions where
/// that bucket rises; pass 2 reruns a monotonic queue that never has to hold
/// elements from more than one bucket.
RunMetrics run_small_integer(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                             SpaceMeter& meter, SmallIntStats* stats = nullptr);

}  // namespace swos
