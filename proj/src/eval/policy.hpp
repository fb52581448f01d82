#pragma once

#include <array>
#include <vector>

#include "games/game.hpp"

namespace efg {

// One player's behavioral strategy: probs[infoset_index] is a distribution
// over that infoset's legal actions, in legal_actions order.
using PlayerPolicy = std::vector<std::vector<double>>;

PlayerPolicy uniform_player_policy(const Game& game, int player);

// A full behavioral profile (both players).
class PolicyTable {
 public:
  PolicyTable() = default;

  static PolicyTable uniform(const Game& game);

  const std::vector<double>& probs(int player, int infoset) const {
    return sides_[player][infoset];
  }
  std::vector<double>& probs(int player, int infoset) {
    return sides_[player][infoset];
  }
  const PlayerPolicy& side(int player) const { return sides_[player]; }
  PlayerPolicy& side(int player) { return sides_[player]; }
  void set_side(int player, PlayerPolicy policy) {
    sides_[player] = std::move(policy);
  }

  // Checks coverage and normalization (sum 1 +- 1e-9, entries >= 0);
  // throws EvalError naming the offending infoset.
  void validate(const Game& game) const;

 private:
  std::array<PlayerPolicy, 2> sides_;
};

}  // namespace efg
