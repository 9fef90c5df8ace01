#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "swos/tapes.hpp"

namespace swos {

/// Keeps the `cap` smallest (value, index) pairs ever inserted, ordered by
/// rank: ascending value, ties broken toward the smaller index. Linear
/// insertion; the cap is small compared to the number of insertions.
class CappedRankStore {
 public:
  struct Entry {
    i64 index;
    i64 value;
  };

  explicit CappedRankStore(i64 cap, SpaceMeter* meter = nullptr) : cap_(cap), meter_(meter) {
    if (cap < 1) throw std::invalid_argument("capped rank store: cap must be positive");
  }

  CappedRankStore(const CappedRankStore&) = delete;
  CappedRankStore& operator=(const CappedRankStore&) = delete;

  CappedRankStore(CappedRankStore&& other) noexcept
      : entries_(std::move(other.entries_)), cap_(other.cap_), meter_(other.meter_) {
    other.entries_.clear();
    other.meter_ = nullptr;
  }

  CappedRankStore& operator=(CappedRankStore&& other) noexcept {
    if (this != &other) {
      release();
      entries_ = std::move(other.entries_);
      cap_ = other.cap_;
      meter_ = other.meter_;
      other.entries_.clear();
      other.meter_ = nullptr;
    }
    return *this;
  }

  ~CappedRankStore() { release(); }

  void insert(i64 index, i64 value) {
    Entry e{index, value};
    if (size() == cap_ && !before(e, entries_.back())) return;
    auto it = std::upper_bound(entries_.begin(), entries_.end(), e,
                               [](const Entry& a, const Entry& b) { return before(a, b); });
    entries_.insert(it, e);
    if (size() > cap_) {
      entries_.pop_back();
    } else if (meter_) {
      meter_->adjust(+1);
    }
  }

  /// 1-based: kth(1) is the smallest-rank entry.
  Entry kth(i64 rank) const {
    if (rank < 1 || rank > size()) {
      throw std::invalid_argument("capped rank store: rank out of [1, size]");
    }
    return entries_[static_cast<size_t>(rank - 1)];
  }

  i64 size() const { return static_cast<i64>(entries_.size()); }
  i64 cap() const { return cap_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  static bool before(const Entry& a, const Entry& b) {
    return a.value != b.value ? a.value < b.value : a.index < b.index;
  }

  void release() {
    if (meter_) meter_->adjust(-size());
    entries_.clear();
  }

  std::vector<Entry> entries_;
  i64 cap_;
  SpaceMeter* meter_;
};

}  // namespace swos
