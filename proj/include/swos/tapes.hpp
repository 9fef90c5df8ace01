#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swos/instance.hpp"

namespace swos {

/// Thrown when code breaks the sequential-access rules of the simulated
/// tapes, the write-once output discipline, or the space meter.
class ModelViolation : public std::logic_error {
 public:
  explicit ModelViolation(const std::string& what) : std::logic_error(what) {}
};

/// Live-word counter, the space measurement for all streaming runs. One word
/// stands for one resident register holding a value, an index, or a
/// (index, value) pair; loop counters, cursors and the meter itself are free.
class SpaceMeter {
 public:
  void adjust(i64 delta_words);
  i64 current() const { return current_; }
  i64 peak() const { return peak_; }

 private:
  i64 current_ = 0;
  i64 peak_ = 0;
};

struct RunMetrics {
  i64 input_passes = 0;
  i64 output_passes = 0;
  i64 peak_words = 0;
  i64 peak_bits_estimate = 0;
  i64 comm_bits = 0;
  i64 rounds = 0;
  bool verified = false;
};

/// Sequential read-only view of the instance values. Elements are readable
/// only inside an open pass, strictly left to right, each exactly once; a
/// pass closes when the last element has been read.
class InputTape {
 public:
  struct Element {
    i64 index;
    i64 value;
  };

  explicit InputTape(const ProblemInstance& inst) : inst_(&inst) {}

  void begin_pass();
  std::optional<Element> next();

  bool pass_open() const { return open_; }
  i64 passes() const { return passes_; }

 private:
  const ProblemInstance* inst_;
  i64 passes_ = 0;
  i64 cursor_ = 0;
  bool open_ = false;
};

/// Write-once stream of window answers. Each slot is written exactly once
/// over the whole run, and within one output pass the written window indices
/// strictly increase. Output passes are opened explicitly by the algorithm.
class OutputTape {
 public:
  explicit OutputTape(i64 window_count);

  void begin_pass();
  void emit(i64 window_start, i64 value);

  /// All n-k+1 answers in window order; throws if any slot is unwritten.
  std::vector<i64> finalize() const;

  i64 passes() const { return passes_; }
  i64 written_count() const { return written_count_; }
  bool complete() const { return written_count_ == window_count_; }

 private:
  i64 window_count_;
  std::vector<i64> slots_;
  std::vector<char> written_;
  i64 passes_ = 0;
  i64 last_in_pass_ = -1;
  i64 written_count_ = 0;
};

/// Fills the streaming-side metric fields from the tapes and meter.
RunMetrics streaming_metrics(const ProblemInstance& inst, const InputTape& in,
                             const OutputTape& out, const SpaceMeter& meter);

}  // namespace swos
