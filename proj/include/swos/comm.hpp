#pragma once

#include <string>
#include <vector>

#include "swos/tapes.hpp"

namespace swos {

/// Charged size of a message carrying `value_count` stream values and
/// `index_count` stream positions: values cost bits_for(r) each, positions
/// (including control headers) bits_for(n) each.
i64 encode_bits(i64 value_count, i64 index_count, i64 n, i64 r);

/// Range-checked variant: every value must lie in [0, r].
i64 encode_values(const std::vector<i64>& values, const std::vector<i64>& indices, i64 n, i64 r);

struct Message {
  int round = 0;
  char sender = 'A';
  std::string kind;
  i64 value_count = 0;
  i64 index_count = 0;
  i64 bits = 0;
};

/// Ordered message log; one message = one round.
struct Transcript {
  std::vector<Message> messages;

  void add(char sender, std::string kind, i64 value_count, i64 index_count, i64 bits);
  i64 total_bits() const;
  i64 total_value_bits(i64 r) const;  // the total without the index terms
  i64 rounds() const { return static_cast<i64>(messages.size()); }
};

/// One party's slice of the input: Alice owns indices [0, n/2), Bob the rest.
/// A party computes freely over its own values; anything from the other half
/// has to arrive in a message.
struct PartyView {
  char side = 'A';
  std::vector<i64> values;  // this half's values
  i64 offset = 0;           // global index of values[0]
};

/// Write-once answer stream shared by both parties, held to a single output
/// pass; neither party reads the shared cursor, they only append in turn.
class SharedOutput {
 public:
  explicit SharedOutput(i64 window_count) : tape_(window_count), writers_() {
    tape_.begin_pass();
    writers_.assign(static_cast<size_t>(window_count), '?');
  }

  void emit(char party, i64 window_start, i64 value) {
    tape_.emit(window_start, value);
    writers_[static_cast<size_t>(window_start)] = party;
  }

  std::vector<i64> finalize() const { return tape_.finalize(); }
  const std::string& writers() const { return writers_; }
  i64 passes() const { return tape_.passes(); }

 private:
  OutputTape tape_;
  std::string writers_;
};

/// Alice holds the first half of the array, Bob the second; both know n, k, r.
/// They write the window answers to a shared write-once stream in one output
/// pass, Alice the prefix of windows whose answer sits in her half, Bob the
/// rest.

struct SminProtocolResult {
  std::vector<i64> outputs;
  Transcript transcript;
  RunMetrics metrics;
  i64 last_alice_window = 0;  // last window start answered from Alice's half
  i64 search_width = 0;
  std::string writers;  // per window: 'A' or 'B'
};

/// Window-minimum protocol in exactly `rounds` messages (odd, >= 3). The
/// parties locate the ownership handoff window by a D-ary search over
/// boundary minima, D = ceil((k+2)^(1/rounds)); the final message hands Bob
/// the unresolved bracket of Alice's suffix minima.
SminProtocolResult run_smin_protocol(const ProblemInstance& inst, int rounds);

struct KsminProtocolResult {
  std::vector<i64> outputs;
  Transcript transcript;
  RunMetrics metrics;
  std::vector<i64> candidates;  // first window reaching crossing score v, per v = 1..2l-1
  std::vector<i64> crossings;   // handoff window starts the parties agreed on
  bool extra_round = false;     // candidate holder had to forward them first
  i64 search_width = 0;
  std::string writers;
};

/// Rank-l protocol in `rounds` messages (>= 2l+2), plus one logged extra
/// round when the candidate searches end on Alice's side. Searches for all
/// 2l-1 crossing-score levels run in parallel and share each round's message;
/// the discovered candidates are screened down to the true handoff windows,
/// after which the parties alternate producing output.
KsminProtocolResult run_ksmin_protocol(const ProblemInstance& inst, i64 l, int rounds);

}  // namespace swos
