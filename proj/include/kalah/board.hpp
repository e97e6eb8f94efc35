#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace kalah {

enum class Seat : std::uint8_t { South = 0, North = 1 };

constexpr Seat opposite(Seat s) noexcept {
  return s == Seat::South ? Seat::North : Seat::South;
}

constexpr std::size_t index(Seat s) noexcept { return static_cast<std::size_t>(s); }

constexpr char seat_letter(Seat s) noexcept { return s == Seat::South ? 'S' : 'N'; }

const char* seat_name(Seat s) noexcept;

inline constexpr int kMaxPitsPerSide = 16;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GameConfig {
  int pits_per_side = 6;
  int seeds_per_pit = 6;
  // A capture needs at least one seed in the opposite pit.
  bool capture_requires_opposite_nonempty = true;

  /// Throws ConfigError unless 1 <= pits_per_side <= kMaxPitsPerSide and seeds_per_pit >= 1.
  void validate() const;
  int total_seeds() const { return 2 * pits_per_side * seeds_per_pit; }

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// Seed counts for both rows and stores plus the side to move.
///
/// Pits are indexed 0..pits_per_side-1 in sowing order for each seat, so the
/// pit opposite to South pit i is North pit pits_per_side-1-i.
class BoardState {
 public:
  BoardState() : BoardState(6) {}
  explicit BoardState(int pits_per_side);

  int pits_per_side() const noexcept { return pits_per_side_; }

  std::span<int> pits(Seat s) noexcept {
    return {pits_[index(s)].data(), static_cast<std::size_t>(pits_per_side_)};
  }
  std::span<const int> pits(Seat s) const noexcept {
    return {pits_[index(s)].data(), static_cast<std::size_t>(pits_per_side_)};
  }

  int& kalah(Seat s) noexcept { return kalahs_[index(s)]; }
  int kalah(Seat s) const noexcept { return kalahs_[index(s)]; }

  Seat to_move() const noexcept { return to_move_; }
  void set_to_move(Seat s) noexcept { to_move_ = s; }

  int side_seeds(Seat s) const noexcept;
  int total_seeds() const noexcept {
    return side_seeds(Seat::South) + side_seeds(Seat::North) + kalahs_[0] + kalahs_[1];
  }

  friend bool operator==(const BoardState&, const BoardState&) = default;

 private:
  std::array<std::array<int, kMaxPitsPerSide>, 2> pits_{};
  std::array<int, 2> kalahs_{};
  std::uint8_t pits_per_side_ = 6;
  Seat to_move_ = Seat::South;
};

}  // namespace kalah
