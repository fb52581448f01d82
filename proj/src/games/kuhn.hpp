#pragma once

#include "games/game.hpp"

namespace efg {

// Kuhn poker: 3-card deck {J, Q, K}, one-chip ante, one-chip bet.
//
// Both players ante 1 and receive one private card. Action 0 = pass
// (check, or fold facing a bet), action 1 = bet (or call facing a bet).
// Betting lines and results:
//
//   p p   showdown, pot 2         b p   player 0 wins 1
//   p b p player 1 wins 1         b b   showdown, pot 4
//   p b b showdown, pot 4
class KuhnGame : public Game {
 public:
  static constexpr int kNumCards = 3;
  static constexpr Action kPass = 0;
  static constexpr Action kBet = 1;

  KuhnGame();

  NodeKind node_kind(const State& s) const override;
  int player_to_act(const State& s) const override;
  std::vector<Action> legal_actions(const State& s) const override;
  std::vector<std::pair<Action, double>> chance_outcomes(
      const State& s) const override;
  std::array<double, 2> terminal_returns(const State& s) const override;
  InfosetKey infoset_key(const State& s, int player) const override;
};

}  // namespace efg
