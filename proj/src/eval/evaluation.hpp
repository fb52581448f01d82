#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "eval/policy.hpp"
#include "games/game.hpp"

namespace efg {

struct BestResponseInfo {
  int responder = 0;
  PlayerPolicy br_policy;  // pure at every infoset
  double br_value = 0.0;   // responder's value against the fixed opponent
};

struct NashConvReport {
  std::array<double, 2> deltas{};  // per-player incentive to deviate
  double nash_conv = 0.0;          // deltas[0] + deltas[1]
  double exploitability = 0.0;     // nash_conv / num_players
};

// Exact expected returns of a full profile (expectation over chance and both
// policies, full tree traversal).
std::array<double, 2> expected_returns(const Game& game,
                                       const PolicyTable& profile);

// Exact best response for `responder` against the opponent side of
// `profile`. Two passes: opponent-and-chance reach per responder infoset,
// then a deepest-first argmax of reach-weighted action values. Ties break to
// the lowest action index; infosets with zero opponent reach therefore
// resolve to action 0.
BestResponseInfo best_response(const Game& game, const PolicyTable& profile,
                               int responder);

// Best response against a mixture of opponent policies: the opponent draws
// policy k with probability weights[k] at the root and plays it throughout.
// This is stronger than responding to any per-infoset average of the mixed
// policies. Weights must sum to 1.
BestResponseInfo best_response_to_mixture(
    const Game& game,
    const std::vector<std::pair<double, const PlayerPolicy*>>& opponent_mix,
    int responder);

NashConvReport nash_conv(const Game& game, const PolicyTable& profile);

double exploitability(const Game& game, const PolicyTable& profile);

}  // namespace efg
