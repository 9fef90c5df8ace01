#pragma once

#include <deque>

#include "swos/tapes.hpp"

namespace swos {

/// Queue whose stored values are strictly increasing front to back. Inserting
/// a value evicts every back entry with a greater-or-equal value, so among
/// equal values the latest index survives. The front is always the minimum of
/// the live (inserted, not yet deleted) entries.
///
/// With values in [0, r] the size never exceeds min(live entries, r + 1).
class MonotonicQueue {
 public:
  struct Entry {
    i64 index;
    i64 value;
  };

  explicit MonotonicQueue(SpaceMeter* meter = nullptr) : meter_(meter) {}

  MonotonicQueue(const MonotonicQueue&) = delete;
  MonotonicQueue& operator=(const MonotonicQueue&) = delete;

  ~MonotonicQueue() {
    if (meter_) meter_->adjust(-static_cast<i64>(entries_.size()));
  }

  /// Indices must arrive in strictly increasing order.
  void insert(i64 index, i64 value) {
    if (index <= last_inserted_) {
      throw ModelViolation("monotonic queue: inserted index not strictly increasing");
    }
    last_inserted_ = index;
    while (!entries_.empty() && entries_.back().value >= value) {
      entries_.pop_back();
      if (meter_) meter_->adjust(-1);
    }
    entries_.push_back({index, value});
    if (meter_) meter_->adjust(+1);
  }

  Entry front() const {
    if (entries_.empty()) throw ModelViolation("monotonic queue: front of empty queue");
    return entries_.front();
  }

  Entry back() const {
    if (entries_.empty()) throw ModelViolation("monotonic queue: back of empty queue");
    return entries_.back();
  }

  void delete_front() {
    if (entries_.empty()) throw ModelViolation("monotonic queue: delete on empty queue");
    last_deleted_ = entries_.front().index;
    entries_.pop_front();
    if (meter_) meter_->adjust(-1);
  }

  bool empty() const { return entries_.empty(); }
  i64 size() const { return static_cast<i64>(entries_.size()); }
  i64 last_deleted() const { return last_deleted_; }
  const std::deque<Entry>& entries() const { return entries_; }

 private:
  std::deque<Entry> entries_;
  i64 last_inserted_ = -1;
  i64 last_deleted_ = -1;
  SpaceMeter* meter_;
};

}  // namespace swos
