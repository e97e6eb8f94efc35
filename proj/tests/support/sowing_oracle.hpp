#pragma once

// Step-by-step reference for one Kalah move on the standard flat layout:
// slots 0..n-1 South pits, n South store, n+1..2n North pits, 2n+1 North
// store. Written independently of the engine for cross-checking.

#include <vector>

namespace kalah::oracle {

struct FlatMove {
  std::vector<int> slots;
  bool last_in_own_store = false;
  int captured = 0;
  bool landed_in_empty_own_pit = false;
  int opposite_before = 0;
};

inline FlatMove sow_flat(std::vector<int> slots, int n, bool south_moves, int pit,
                         bool capture_needs_opposite = true) {
  const int total = 2 * n + 2;
  const int own_base = south_moves ? 0 : n + 1;
  const int own_store = own_base + n;
  const int their_store = south_moves ? 2 * n + 1 : n;

  FlatMove r;
  int at = own_base + pit;
  int hand = slots[at];
  slots[at] = 0;
  int before_drop = 0;
  while (hand > 0) {
    at = (at + 1) % total;
    if (at == their_store) continue;
    before_drop = slots[at];
    slots[at] += 1;
    hand -= 1;
  }
  r.last_in_own_store = at == own_store;
  const bool own_pit = at >= own_base && at < own_store;
  if (own_pit && before_drop == 0) {
    r.landed_in_empty_own_pit = true;
    const int mirrored = 2 * n - at;  // slot facing `at` across the board
    r.opposite_before = slots[mirrored];
    if (slots[mirrored] > 0 || !capture_needs_opposite) {
      r.captured = 1 + slots[mirrored];
      slots[own_store] += r.captured;
      slots[at] = 0;
      slots[mirrored] = 0;
    }
  }
  r.slots = std::move(slots);
  return r;
}

}  // namespace kalah::oracle
