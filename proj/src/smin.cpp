#include "swos/smin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "swos/monotonic_queue.hpp"

namespace swos {

namespace {

constexpr i64 kUnset = std::numeric_limits<i64>::max();

void require_min_problem(const ProblemInstance& inst) {
  inst.validate();
  if (inst.l != 1) throw std::invalid_argument("window-minimum run: instance rank l must be 1");
}

i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

i64 ceil_sqrt(i64 x) {
  i64 s = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (s * s < x) ++s;
  while (s > 1 && (s - 1) * (s - 1) >= x) --s;
  return s;
}

}  // namespace

RunMetrics run_baseline(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                        SpaceMeter& meter) {
  require_min_problem(inst);
  const i64 k = inst.k;
  MonotonicQueue q(&meter);
  in.begin_pass();
  out.begin_pass();
  while (auto e = in.next()) {
    q.insert(e->index, e->value);
    while (q.front().index <= e->index - k) q.delete_front();
    if (e->index >= k - 1) out.emit(e->index - k + 1, q.front().value);
  }
  return streaming_metrics(inst, in, out, meter);
}

RunMetrics run_two_pass(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                        SpaceMeter& meter, TwoPassStats* stats) {
  require_min_problem(inst);
  const i64 k = inst.k;
  const i64 windows = inst.window_count();
  const i64 stride = ceil_div(windows, ceil_sqrt(windows));

  // Sampled window starts 0, stride, 2*stride, ...
  std::vector<i64> pos;
  for (i64 t = 0; t * stride <= windows - 1; ++t) pos.push_back(t * stride);
  const i64 nsamples = static_cast<i64>(pos.size());
  if (stats) {
    stats->sample_count = nsamples;
    stats->stride = stride;
  }

  // Pass 1: one (min value, latest min index) register per sampled window.
  struct Reg {
    i64 min_index = -1;
    i64 min_value = kUnset;
  };
  std::vector<Reg> sample(static_cast<size_t>(nsamples));
  in.begin_pass();
  while (auto e = in.next()) {
    const i64 j = e->index;
    i64 t_lo = j - k + 1 <= 0 ? 0 : ceil_div(j - k + 1, stride);
    i64 t_hi = std::min(nsamples - 1, j / stride);
    for (i64 t = t_lo; t <= t_hi; ++t) {
      Reg& reg = sample[static_cast<size_t>(t)];
      if (reg.min_index < 0) meter.adjust(+1);  // register comes alive at j == pos[t]
      if (e->value <= reg.min_value) {
        reg.min_value = e->value;
        reg.min_index = j;
      }
    }
  }

  // Pass 2: running minima for one block of windows at a time. Block t ends
  // once the stream reaches the min index of sample t+1; every window in it
  // has its minimum settled by then.
  in.begin_pass();
  out.begin_pass();
  i64 block = 0;
  std::vector<i64> mins;
  auto block_end = [&](i64 b) { return b + 1 < nsamples ? pos[static_cast<size_t>(b + 1)] : windows; };
  auto alloc_block = [&] {
    const i64 count = block_end(block) - pos[static_cast<size_t>(block)];
    mins.assign(static_cast<size_t>(count), kUnset);
    meter.adjust(count);
  };
  auto absorb = [&](i64 j, i64 v) {
    const i64 base = pos[static_cast<size_t>(block)];
    const i64 lo = std::max(base, j - k + 1);
    const i64 hi = std::min(block_end(block) - 1, j);
    for (i64 i = lo; i <= hi; ++i) {
      i64& m = mins[static_cast<size_t>(i - base)];
      m = std::min(m, v);
    }
  };
  auto flush_block = [&] {
    const i64 base = pos[static_cast<size_t>(block)];
    for (i64 i = 0; i < static_cast<i64>(mins.size()); ++i) {
      if (mins[static_cast<size_t>(i)] == kUnset) {
        throw std::logic_error("two-pass run: window minimum unresolved at flush");
      }
      out.emit(base + i, mins[static_cast<size_t>(i)]);
    }
    meter.adjust(-static_cast<i64>(mins.size()));
    mins.clear();
  };

  if (stats) {
    for (const auto& reg : sample) stats->samples.emplace_back(reg.min_index, reg.min_value);
  }

  alloc_block();
  while (auto e = in.next()) {
    while (block + 1 < nsamples && e->index == sample[static_cast<size_t>(block + 1)].min_index) {
      absorb(e->index, e->value);
      flush_block();
      ++block;
      alloc_block();
    }
    absorb(e->index, e->value);
  }
  flush_block();
  meter.adjust(-nsamples);  // sample table released at end of run

  return streaming_metrics(inst, in, out, meter);
}

RunMetrics run_small_integer(const ProblemInstance& inst, InputTape& in, OutputTape& out,
                             SpaceMeter& meter, SmallIntStats* stats) {
  require_min_problem(inst);
  if (inst.r < 1) throw std::invalid_argument("small-integer run: value bound r must be >= 1");
  const i64 n = inst.n();
  const i64 k = inst.k;
  const i64 r = inst.r;

  const i64 buckets = std::clamp<i64>(
      static_cast<i64>(std::llround(std::sqrt(static_cast<double>(r) * k / n))), 1, r);
  auto bucket_of = [&](i64 v) {
    return std::min<i64>(static_cast<i64>(static_cast<__int128>(buckets) * v / r), buckets - 1);
  };
  if (stats) stats->bucket_count = buckets;

  // Pass 1: monotonic queue over bucket numbers; log the stream position and
  // new bucket whenever the window-minimum bucket changes.
  std::vector<std::pair<i64, i64>> change_log;  // (stream position, bucket)
  {
    MonotonicQueue q(&meter);
    in.begin_pass();
    while (auto e = in.next()) {
      q.insert(e->index, bucket_of(e->value));
      while (q.front().index <= e->index - k) q.delete_front();
      const auto f = q.front();
      if (change_log.empty() || change_log.back().second != f.value) {
        change_log.emplace_back(e->index, f.value);
        meter.adjust(+1);
      }
    }
  }
  if (stats) stats->change_log_len = static_cast<i64>(change_log.size());

  // The minimum's bucket rises exactly when the old minimum leaves the
  // window, so a rise logged at stream position j belongs to window j - k + 1.
  std::vector<i64> rises;
  for (size_t t = 1; t < change_log.size(); ++t) {
    if (change_log[t].second > change_log[t - 1].second) {
      const i64 start = change_log[t].first - k + 1;
      if (start < 1 || start > n - k) {
        throw std::logic_error("small-integer run: bucket rise outside the window range");
      }
      rises.push_back(start);
      meter.adjust(+1);
    }
  }
  rises.push_back(n);  // sentinel cut at end of stream
  meter.adjust(+1);
  meter.adjust(-static_cast<i64>(change_log.size()));
  change_log.clear();
  if (stats) stats->rise_count = static_cast<i64>(rises.size()) - 1;

  // Pass 2: monotonic queue over actual values, skipping elements whose
  // bucket exceeds the front's; between rises the queue stays inside one
  // bucket, so its length is bounded by the bucket width.
  {
    MonotonicQueue q(&meter);
    in.begin_pass();
    out.begin_pass();
    size_t cut = 0;
    i64 out_base = 0;
    while (auto e = in.next()) {
      const i64 j = e->index;
      while (!q.empty() && q.front().index <= j - k) q.delete_front();
      if (q.empty() || bucket_of(e->value) <= bucket_of(q.front().value)) {
        q.insert(j, e->value);
      }
      if (bucket_of(q.front().value) != bucket_of(q.back().value)) {
        throw std::logic_error("small-integer run: queue spans more than one bucket");
      }
      if (stats) stats->max_queue_len = std::max(stats->max_queue_len, q.size());
      if (j - k + 1 >= out_base) out.emit(j - k + 1, q.front().value);
      if (cut < rises.size() && j == rises[cut] - 1) {
        // Windows below the next rise are settled: their minimum beats
        // everything the stream can still deliver before the rise.
        for (i64 i = std::max(out_base, j - k + 2); i < rises[cut] && i <= n - k; ++i) {
          while (q.front().index < i) q.delete_front();
          out.emit(i, q.front().value);
        }
        // Entries behind the advanced output pointer are dead; dropping them
        // keeps the front inside the current output segment, which the
        // bucket filter above relies on.
        while (!q.empty() && q.front().index < rises[cut]) q.delete_front();
        out_base = rises[cut];
        ++cut;
      }
    }
  }
  meter.adjust(-static_cast<i64>(rises.size()));

  return streaming_metrics(inst, in, out, meter);
}

}  // namespace swos
