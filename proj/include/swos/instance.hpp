#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace swos {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Number of bits needed to write any integer in [0, v].
int bits_for(i64 v);

/// A sliding-window selection problem: an array of integers in [0, r], a
/// window length k, and a target rank l (l = 1 asks for window minimums).
struct ProblemInstance {
  std::vector<i64> values;
  i64 k = 1;
  i64 r = 0;
  i64 l = 1;

  i64 n() const { return static_cast<i64>(values.size()); }
  i64 window_count() const { return n() - k + 1; }

  /// Throws std::invalid_argument unless 1 <= k <= n, 1 <= l <= k and every
  /// value lies in [0, r].
  void validate() const;
};

/// Text format: header line "N K R l", then N whitespace-separated values.
ProblemInstance read_instance(std::istream& is);
void write_instance(const ProblemInstance& inst, std::ostream& os);
ProblemInstance load_instance_file(const std::string& path);
void save_instance_file(const ProblemInstance& inst, const std::string& path);

}  // namespace swos
