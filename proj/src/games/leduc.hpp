#pragma once

#include "games/game.hpp"

namespace efg {

// Leduc poker: 6-card deck (3 ranks x 2 suits), one-chip ante, two betting
// rounds with a raise size of 2 then 4 and at most two raises per round.
//
// Deal one private card to each player, bet (round 1), deal one public card,
// bet (round 2), then showdown: a private card pairing the public card wins,
// otherwise the higher rank wins, equal ranks split. Player 0 opens both
// rounds. Actions: 0 = fold (only legal facing a raise), 1 = call/check,
// 2 = raise (until the round's cap). A fold ends the hand; the winner nets
// the loser's total contribution.
class LeducGame : public Game {
 public:
  static constexpr int kNumCards = 6;  // rank = card / 2
  static constexpr Action kFold = 0;
  static constexpr Action kCall = 1;
  static constexpr Action kRaise = 2;
  static constexpr int kMaxRaises = 2;
  static constexpr int kAnte = 1;
  static constexpr int kRaiseSize[2] = {2, 4};

  LeducGame();

  NodeKind node_kind(const State& s) const override;
  int player_to_act(const State& s) const override;
  std::vector<Action> legal_actions(const State& s) const override;
  std::vector<std::pair<Action, double>> chance_outcomes(
      const State& s) const override;
  std::array<double, 2> terminal_returns(const State& s) const override;
  InfosetKey infoset_key(const State& s, int player) const override;

 private:
  // Everything derivable from a history, parsed in one pass.
  struct Pos {
    NodeKind kind = NodeKind::kChance;
    int to_act = -1;         // decision nodes
    int round = 0;           // 0 before deals complete, then 1 or 2
    int public_card = -1;    // -1 until revealed
    int raises = 0;          // raises so far this round
    int round_actions = 0;   // betting actions so far this round
    int contrib[2] = {0, 0};
    int folder = -1;
    std::string betting;     // with '|' between rounds
  };
  Pos parse(const State& s) const;
};

}  // namespace efg
