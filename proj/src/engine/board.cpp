#include "kalah/board.hpp"

#include <numeric>

namespace kalah {

const char* seat_name(Seat s) noexcept { return s == Seat::South ? "South" : "North"; }

void GameConfig::validate() const {
  if (pits_per_side < 1 || pits_per_side > kMaxPitsPerSide) {
    throw ConfigError("pits_per_side must be in 1.." + std::to_string(kMaxPitsPerSide) +
                      ", got " + std::to_string(pits_per_side));
  }
  if (seeds_per_pit < 1) {
    throw ConfigError("seeds_per_pit must be positive, got " + std::to_string(seeds_per_pit));
  }
}

BoardState::BoardState(int pits_per_side) {
  if (pits_per_side < 1 || pits_per_side > kMaxPitsPerSide) {
    throw ConfigError("pits_per_side out of range: " + std::to_string(pits_per_side));
  }
  pits_per_side_ = static_cast<std::uint8_t>(pits_per_side);
}

int BoardState::side_seeds(Seat s) const noexcept {
  const auto row = pits(s);
  return std::accumulate(row.begin(), row.end(), 0);
}

}  // namespace kalah
