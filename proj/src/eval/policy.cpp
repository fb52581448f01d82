#include "eval/policy.hpp"

#include <cmath>

#include "util/errors.hpp"

namespace efg {

PlayerPolicy uniform_player_policy(const Game& game, int player) {
  PlayerPolicy policy;
  policy.reserve(game.num_infosets(player));
  for (const InfosetInfo& info : game.infosets(player)) {
    policy.emplace_back(info.legal_actions.size(),
                        1.0 / info.legal_actions.size());
  }
  return policy;
}

PolicyTable PolicyTable::uniform(const Game& game) {
  PolicyTable table;
  table.set_side(0, uniform_player_policy(game, 0));
  table.set_side(1, uniform_player_policy(game, 1));
  return table;
}

void PolicyTable::validate(const Game& game) const {
  for (int player = 0; player < 2; ++player) {
    if (static_cast<int>(sides_[player].size()) != game.num_infosets(player)) {
      throw EvalError("profile does not cover all infosets of player " +
                      std::to_string(player));
    }
    for (int i = 0; i < game.num_infosets(player); ++i) {
      const auto& probs = sides_[player][i];
      const InfosetInfo& info = game.infoset(player, i);
      if (probs.size() != info.legal_actions.size()) {
        throw EvalError("bad action count at infoset " + info.key.str());
      }
      double sum = 0.0;
      for (double p : probs) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
          throw EvalError("bad probability at infoset " + info.key.str());
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-9) {
        throw EvalError("probabilities do not sum to 1 at infoset " +
                        info.key.str());
      }
    }
  }
}

}  // namespace efg
