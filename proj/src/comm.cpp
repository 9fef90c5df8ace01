#include "swos/comm.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>
#include <tuple>

#include "swos/order_math.hpp"

namespace swos {

namespace {

constexpr i64 kNoValue = std::numeric_limits<i64>::max();

i64 ceil_root(i64 x, int e) {
  if (e < 1) throw std::invalid_argument("ceil_root: exponent must be positive");
  if (x <= 1) return 1;
  auto reaches = [&](i64 base) {
    i64 acc = 1;
    for (int t = 0; t < e; ++t) {
      if (acc >= (x + base - 1) / base) return true;  // acc * base >= x
      acc *= base;
    }
    return acc >= x;
  };
  i64 d = static_cast<i64>(std::floor(std::pow(static_cast<double>(x), 1.0 / e)));
  if (d < 1) d = 1;
  while (!reaches(d)) ++d;
  while (d > 1 && reaches(d - 1)) --d;
  return d;
}

// Evenly spaced interior points of (lo, hi), at most `want` of them.
std::vector<i64> probe_points(i64 lo, i64 hi, i64 want) {
  const i64 size = hi - lo;
  const i64 count = std::min(want, size - 1);
  std::vector<i64> probes;
  for (i64 q = 1; q <= count; ++q) probes.push_back(lo + q * size / (count + 1));
  return probes;
}

// Minimum of every k-window of one party's half.
std::vector<i64> sliding_minima(std::span<const i64> a, i64 k) {
  std::vector<i64> out;
  std::deque<std::pair<i64, i64>> q;  // (index, value), values increasing
  for (i64 j = 0; j < static_cast<i64>(a.size()); ++j) {
    while (!q.empty() && q.back().second >= a[static_cast<size_t>(j)]) q.pop_back();
    q.emplace_back(j, a[static_cast<size_t>(j)]);
    if (q.front().first <= j - k) q.pop_front();
    if (j >= k - 1) out.push_back(q.front().second);
  }
  return out;
}

void check_two_party(const ProblemInstance& inst) {
  inst.validate();
  if (inst.n() % 2 != 0) throw std::invalid_argument("two-party run: stream length must be even");
  if (inst.k > inst.n() / 2) {
    throw std::invalid_argument("two-party run: window must fit inside one half");
  }
}

// A party's l smallest values of one contiguous part of its half, listed in
// index order -- exactly what travels inside a message. begin/end are
// half-local indices.
std::vector<i64> part_lowset_values(const PartyView& party, i64 begin, i64 end, i64 l) {
  std::vector<i64> vals;
  if (begin >= end) return vals;
  auto idx = lowset(party.values, {begin, end - 1}, std::min(l, end - begin));
  vals.reserve(idx.size());
  for (i64 i : idx) vals.push_back(party.values[static_cast<size_t>(i)]);
  return vals;
}

PartyView make_view(const ProblemInstance& inst, char side) {
  const i64 half = inst.n() / 2;
  PartyView view;
  view.side = side;
  view.offset = side == 'A' ? 0 : half;
  view.values.assign(inst.values.begin() + view.offset, inst.values.begin() + view.offset + half);
  return view;
}

struct ConfView {
  i64 on_bob_l = 0;    // of the window's l smallest, how many sit in Bob's half
  i64 on_bob_lm1 = 0;  // same for the l-1 smallest
  bool rank_l_on_bob = false;
  i64 score() const { return on_bob_l + on_bob_lm1; }
};

// Rank bookkeeping for one window from its two sides. Each side's list must
// be in index order and contain that side's l smallest values; Alice's
// indices all precede Bob's, and within a side list position order is index
// order, so ties resolve exactly as in the full array.
ConfView merged_conf(const std::vector<i64>& alice_vals, const std::vector<i64>& bob_vals, i64 l) {
  std::vector<std::tuple<i64, int, i64>> all;  // (value, side, position)
  all.reserve(alice_vals.size() + bob_vals.size());
  for (size_t p = 0; p < alice_vals.size(); ++p) all.emplace_back(alice_vals[p], 0, static_cast<i64>(p));
  for (size_t p = 0; p < bob_vals.size(); ++p) all.emplace_back(bob_vals[p], 1, static_cast<i64>(p));
  if (static_cast<i64>(all.size()) < l) {
    throw std::logic_error("two-party run: window sides carry fewer than l entries");
  }
  std::sort(all.begin(), all.end());
  ConfView cv;
  for (i64 t = 0; t < l; ++t) {
    if (std::get<1>(all[static_cast<size_t>(t)]) == 1) {
      ++cv.on_bob_l;
      if (t < l - 1) ++cv.on_bob_lm1;
    }
  }
  cv.rank_l_on_bob = std::get<1>(all[static_cast<size_t>(l - 1)]) == 1;
  return cv;
}

}  // namespace

i64 encode_bits(i64 value_count, i64 index_count, i64 n, i64 r) {
  return value_count * bits_for(r) + index_count * bits_for(n);
}

i64 encode_values(const std::vector<i64>& values, const std::vector<i64>& indices, i64 n, i64 r) {
  for (i64 v : values) {
    if (v < 0 || v > r) throw std::invalid_argument("encode_values: value out of [0, r]");
  }
  return encode_bits(static_cast<i64>(values.size()), static_cast<i64>(indices.size()), n, r);
}

void Transcript::add(char sender, std::string kind, i64 value_count, i64 index_count, i64 bits) {
  messages.push_back(
      {static_cast<int>(messages.size()) + 1, sender, std::move(kind), value_count, index_count, bits});
}

i64 Transcript::total_bits() const {
  i64 total = 0;
  for (const auto& m : messages) total += m.bits;
  return total;
}

i64 Transcript::total_value_bits(i64 r) const {
  i64 total = 0;
  for (const auto& m : messages) total += m.value_count * bits_for(r);
  return total;
}

SminProtocolResult run_smin_protocol(const ProblemInstance& inst, int rounds) {
  check_two_party(inst);
  if (inst.l != 1) throw std::invalid_argument("minimum protocol: instance rank l must be 1");
  if (rounds < 3 || rounds % 2 == 0) {
    throw std::invalid_argument("minimum protocol: round count must be odd and >= 3");
  }

  const i64 n = inst.n();
  const i64 k = inst.k;
  const i64 half = n / 2;
  const i64 windows = inst.window_count();
  const PartyView alice = make_view(inst, 'A');
  const PartyView bob = make_view(inst, 'B');

  // Boundary minima: a_suf[t] = min of Alice's last t values, b_pre[t] = min
  // of Bob's first t values.
  std::vector<i64> a_suf(static_cast<size_t>(half) + 1, kNoValue);
  std::vector<i64> b_pre(static_cast<size_t>(half) + 1, kNoValue);
  for (i64 t = 1; t <= half; ++t) {
    a_suf[static_cast<size_t>(t)] =
        std::min(a_suf[static_cast<size_t>(t - 1)], alice.values[static_cast<size_t>(half - t)]);
    b_pre[static_cast<size_t>(t)] =
        std::min(b_pre[static_cast<size_t>(t - 1)], bob.values[static_cast<size_t>(t - 1)]);
  }
  // For a straddling window starting at half - t the minimum lives on Bob's
  // side exactly when a_suf[t] > b_pre[k - t]; ties go to Alice. The largest
  // t where it still lives with Alice is monotone, so it can be bracketed.
  auto on_bob_side = [&](i64 t) { return a_suf[static_cast<size_t>(t)] > b_pre[static_cast<size_t>(k - t)]; };

  const i64 width = ceil_root(k + 2, rounds);
  SminProtocolResult res;
  res.search_width = width;

  i64 lo = 0, hi = k;  // handoff distance t in (lo, hi]
  for (int m = 1; m + 1 <= rounds; ++m) {
    const char sender = (m % 2 == 1) ? 'A' : 'B';
    auto probes = probe_points(lo, hi, width);
    res.transcript.add(sender, sender == 'A' ? "suffix-minima" : "prefix-minima",
                       static_cast<i64>(probes.size()), static_cast<i64>(probes.size()) + 1,
                       encode_bits(static_cast<i64>(probes.size()),
                                   static_cast<i64>(probes.size()) + 1, n, inst.r));
    for (i64 t : probes) {
      if (on_bob_side(t)) {
        lo = t;
      } else {
        hi = t;
        break;
      }
    }
  }
  if (hi - lo > width + 1) {
    throw std::logic_error("minimum protocol: bracket wider than the final message allows");
  }

  // Final message: Alice's suffix minima over the bracket plus the handoff
  // position; Bob resolves the exact handoff against his prefix minima.
  res.transcript.add('A', "bracket-handoff", hi - lo, 2, encode_bits(hi - lo, 2, n, inst.r));
  i64 handoff = hi;
  for (i64 t = lo + 1; t <= hi; ++t) {
    if (!on_bob_side(t)) {
      handoff = t;
      break;
    }
  }
  res.last_alice_window = half - handoff;

  // Shared write-once output, one pass: Alice writes [0, half - hi], Bob the
  // rest, reading Alice-side answers out of the bracket message.
  auto alice_full = sliding_minima(alice.values, k);  // windows fully inside Alice
  auto bob_full = sliding_minima(bob.values, k);
  SharedOutput out(windows);
  for (i64 i = 0; i <= half - hi; ++i) {
    const i64 v = (i <= half - k) ? alice_full[static_cast<size_t>(i)] : a_suf[static_cast<size_t>(half - i)];
    out.emit('A', i, v);
  }
  for (i64 i = half - hi + 1; i <= n - k; ++i) {
    i64 v;
    if (i >= half) {
      v = bob_full[static_cast<size_t>(i - half)];
    } else if (i <= res.last_alice_window) {
      v = a_suf[static_cast<size_t>(half - i)];  // received in the bracket message
    } else {
      v = b_pre[static_cast<size_t>(i + k - half)];
    }
    out.emit('B', i, v);
  }
  res.outputs = out.finalize();
  res.writers = out.writers();

  res.metrics.output_passes = out.passes();
  res.metrics.comm_bits = res.transcript.total_bits();
  res.metrics.rounds = res.transcript.rounds();
  if (res.metrics.rounds != rounds) {
    throw std::logic_error("minimum protocol: produced a wrong number of rounds");
  }
  return res;
}

KsminProtocolResult run_ksmin_protocol(const ProblemInstance& inst, i64 l, int rounds) {
  check_two_party(inst);
  if (l < 1 || l > inst.k) throw std::invalid_argument("rank protocol: rank out of [1, k]");
  if (rounds < 2 * l + 2) {
    throw std::invalid_argument("rank protocol: round count must be at least 2l + 2");
  }

  const i64 n = inst.n();
  const i64 k = inst.k;
  const i64 r = inst.r;
  const i64 half = n / 2;
  const i64 windows = inst.window_count();
  const PartyView alice = make_view(inst, 'A');
  const PartyView bob = make_view(inst, 'B');

  // Message building blocks, all phrased in half-local coordinates.
  auto alice_part_values = [&](i64 window_start) {  // raw [window_start, half)
    std::vector<i64> v;
    for (i64 i = std::max<i64>(0, window_start); i < half; ++i) v.push_back(alice.values[static_cast<size_t>(i)]);
    return v;
  };
  auto bob_part_values = [&](i64 window_start) {  // raw [half, window_start + k)
    std::vector<i64> v;
    for (i64 i = half; i < window_start + k; ++i) v.push_back(bob.values[static_cast<size_t>(i - half)]);
    return v;
  };
  auto alice_part_lowset = [&](i64 window_start) {
    return part_lowset_values(alice, std::max<i64>(0, window_start), half, l);
  };
  auto bob_part_lowset = [&](i64 window_start) {
    return part_lowset_values(bob, 0, std::max<i64>(0, window_start + k - half), l);
  };

  const i64 levels = 2 * l - 1;
  const int search_rounds = rounds - static_cast<int>(2 * l) - 1;
  const i64 width = ceil_root(k + 2, search_rounds);

  KsminProtocolResult res;
  res.search_width = width;

  // Parallel D-ary searches, one per crossing-score level v: maintain
  // score(lo) < v <= score(hi). The round's sender ships its own side of each
  // probe window; the receiver scores the probes and narrows every bracket.
  std::vector<i64> lo(static_cast<size_t>(levels), half - k);
  std::vector<i64> hi(static_cast<size_t>(levels), half);
  for (int m = 1; m <= search_rounds; ++m) {
    const char sender = (m % 2 == 1) ? 'A' : 'B';
    i64 value_count = 0, index_count = 1;  // header
    for (i64 v = 1; v <= levels; ++v) {
      auto& vlo = lo[static_cast<size_t>(v - 1)];
      auto& vhi = hi[static_cast<size_t>(v - 1)];
      auto probes = probe_points(vlo, vhi, width);
      index_count += static_cast<i64>(probes.size());
      for (i64 p : probes) {
        auto sent = sender == 'A' ? alice_part_lowset(p) : bob_part_lowset(p);
        value_count += static_cast<i64>(sent.size());
        const auto own =
            sender == 'A' ? merged_conf(sent, bob_part_values(p), l)
                          : merged_conf(alice_part_values(p), sent, l);
        if (own.score() < v) {
          vlo = p;
        } else {
          vhi = p;
          break;
        }
      }
    }
    res.transcript.add(sender, "search-lowsets", value_count, index_count,
                       encode_bits(value_count, index_count, n, r));
  }
  res.candidates.resize(static_cast<size_t>(levels));
  for (i64 v = 1; v <= levels; ++v) {
    if (hi[static_cast<size_t>(v - 1)] - lo[static_cast<size_t>(v - 1)] != 1) {
      throw std::logic_error("rank protocol: candidate search left unresolved");
    }
    res.candidates[static_cast<size_t>(v - 1)] = hi[static_cast<size_t>(v - 1)];
  }

  // The search receiver alternates; when the last narrowing lands on Alice,
  // she forwards the candidates so Bob can assemble his reply.
  res.extra_round = (search_rounds % 2 == 0);
  if (res.extra_round) {
    res.transcript.add('A', "candidates", 0, levels + 1, encode_bits(0, levels + 1, n, r));
  }

  std::vector<i64> unique_cands = res.candidates;
  std::sort(unique_cands.begin(), unique_cands.end());
  unique_cands.erase(std::unique(unique_cands.begin(), unique_cands.end()), unique_cands.end());

  // Bob's reply: for each candidate window C, his side of windows C and C-1.
  {
    i64 value_count = 0, index_count = 1;
    for (i64 c : unique_cands) {
      index_count += 1;
      value_count += static_cast<i64>(bob_part_lowset(c).size());
      value_count += static_cast<i64>(bob_part_lowset(c - 1).size());
    }
    res.transcript.add('B', "candidate-lowsets", value_count, index_count,
                       encode_bits(value_count, index_count, n, r));
  }

  // Alice screens the candidates: which are real handoffs (the rank-l index
  // switches sides), and what the on-Bob count of the window's l smallest is
  // from each candidate on.
  std::vector<std::pair<i64, i64>> on_bob_steps;  // (window start, count from here on)
  std::vector<i64> rise_points;
  for (i64 c : unique_cands) {
    const auto window_now = merged_conf(alice_part_values(c), bob_part_lowset(c), l);
    const auto window_prev = merged_conf(alice_part_values(c - 1), bob_part_lowset(c - 1), l);
    if (window_now.rank_l_on_bob != window_prev.rank_l_on_bob) res.crossings.push_back(c);
    const i64 prev_count = on_bob_steps.empty() ? 0 : on_bob_steps.back().second;
    if (window_now.on_bob_l > prev_count) rise_points.push_back(c);
    on_bob_steps.emplace_back(c, window_now.on_bob_l);
  }
  auto on_bob_count = [&](i64 window_start) {
    i64 count = 0;
    for (const auto& [start, value] : on_bob_steps) {
      if (start <= window_start) count = value;
    }
    return count;
  };

  // Output schedule: side flips exactly at the crossings; both parties can
  // reconstruct every window's answer rank on their own side.
  auto window_value = [&](i64 i, bool on_bob) {
    std::vector<i64> part;
    i64 rank;
    if (on_bob) {
      for (i64 t = std::max(i, half); t < i + k; ++t) part.push_back(bob.values[static_cast<size_t>(t - half)]);
      rank = on_bob_count(i);
    } else {
      for (i64 t = i; t < std::min(i + k, half); ++t) part.push_back(alice.values[static_cast<size_t>(t)]);
      rank = l - on_bob_count(i);
    }
    if (rank < 1 || rank > static_cast<i64>(part.size())) {
      throw std::logic_error("rank protocol: window answer rank outside its side");
    }
    std::nth_element(part.begin(), part.begin() + (rank - 1), part.end());
    return part[static_cast<size_t>(rank - 1)];
  };

  SharedOutput out(windows);
  std::vector<i64> seg_bounds{0};
  for (i64 c : res.crossings) {
    if (c <= windows - 1) seg_bounds.push_back(c);
  }
  seg_bounds.push_back(windows);

  i64 messages_left = 2 * l;  // step-3 handoff plan plus alternating turns
  char msg_sender = 'A';
  for (size_t seg = 0; seg + 1 < seg_bounds.size(); ++seg) {
    const bool on_bob = seg % 2 == 1;
    for (i64 i = seg_bounds[seg]; i < seg_bounds[seg + 1]; ++i) {
      out.emit(on_bob ? 'B' : 'A', i, window_value(i, on_bob));
    }
    if (messages_left > 0) {
      if (seg == 0) {
        const i64 idx = static_cast<i64>(res.crossings.size() + rise_points.size()) + 1;
        res.transcript.add('A', "handoff-plan", 0, idx, encode_bits(0, idx, n, r));
      } else {
        res.transcript.add(msg_sender, "handoff", 0, 0, 0);
      }
      --messages_left;
      msg_sender = msg_sender == 'A' ? 'B' : 'A';
    }
  }
  while (messages_left > 0) {
    res.transcript.add(msg_sender, "handoff", 0, 0, 0);
    --messages_left;
    msg_sender = msg_sender == 'A' ? 'B' : 'A';
  }
  res.outputs = out.finalize();
  res.writers = out.writers();

  res.metrics.output_passes = out.passes();
  res.metrics.comm_bits = res.transcript.total_bits();
  res.metrics.rounds = res.transcript.rounds();
  if (res.metrics.rounds != rounds + (res.extra_round ? 1 : 0)) {
    throw std::logic_error("rank protocol: produced a wrong number of rounds");
  }
  return res;
}

}  // namespace swos
