#include "swos/tapes.hpp"

namespace swos {

void SpaceMeter::adjust(i64 delta_words) {
  if (current_ + delta_words < 0) {
    throw ModelViolation("meter: live word count would go negative");
  }
  current_ += delta_words;
  if (current_ > peak_) peak_ = current_;
}

void InputTape::begin_pass() {
  if (open_) throw ModelViolation("input tape: pass already open");
  ++passes_;
  cursor_ = 0;
  open_ = true;
}

std::optional<InputTape::Element> InputTape::next() {
  if (!open_) throw ModelViolation("input tape: no open pass");
  if (cursor_ == inst_->n()) {
    open_ = false;
    return std::nullopt;
  }
  Element e{cursor_, inst_->values[static_cast<size_t>(cursor_)]};
  ++cursor_;
  return e;
}

OutputTape::OutputTape(i64 window_count)
    : window_count_(window_count),
      slots_(static_cast<size_t>(window_count), 0),
      written_(static_cast<size_t>(window_count), 0) {
  if (window_count < 1) throw std::invalid_argument("output tape: window count must be positive");
}

void OutputTape::begin_pass() {
  ++passes_;
  last_in_pass_ = -1;
}

void OutputTape::emit(i64 window_start, i64 value) {
  if (passes_ == 0) throw ModelViolation("output tape: emit with no open output pass");
  if (window_start < 0 || window_start >= window_count_) {
    throw ModelViolation("output tape: window index out of range");
  }
  if (written_[static_cast<size_t>(window_start)]) {
    throw ModelViolation("output tape: slot written twice");
  }
  if (window_start <= last_in_pass_) {
    throw ModelViolation("output tape: out-of-order write within an output pass");
  }
  slots_[static_cast<size_t>(window_start)] = value;
  written_[static_cast<size_t>(window_start)] = 1;
  last_in_pass_ = window_start;
  ++written_count_;
}

std::vector<i64> OutputTape::finalize() const {
  for (i64 i = 0; i < window_count_; ++i) {
    if (!written_[static_cast<size_t>(i)]) {
      throw ModelViolation("output tape: slot " + std::to_string(i) + " never written");
    }
  }
  return slots_;
}

RunMetrics streaming_metrics(const ProblemInstance& inst, const InputTape& in,
                             const OutputTape& out, const SpaceMeter& meter) {
  RunMetrics m;
  m.input_passes = in.passes();
  m.output_passes = out.passes();
  m.peak_words = meter.peak();
  m.peak_bits_estimate = meter.peak() * (bits_for(inst.n()) + bits_for(inst.r));
  return m;
}

}  // namespace swos
