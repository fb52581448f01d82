#include "eval/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <unordered_map>

#include "util/errors.hpp"

namespace efg {

namespace {

const std::vector<double>& probs_at(const Game& game,
                                    const PolicyTable& profile,
                                    const State& state, int player) {
  const InfosetKey key = game.infoset_key(state, player);
  const int index = game.infoset_index(key);
  const PlayerPolicy& side = profile.side(player);
  if (index >= static_cast<int>(side.size())) {
    throw EvalError("profile missing infoset " + key.str());
  }
  const std::vector<double>& probs = side[index];
  if (probs.size() != game.infoset(player, index).legal_actions.size()) {
    throw EvalError("profile entry has wrong arity at " + key.str());
  }
  return probs;
}

std::array<double, 2> returns_walk(const Game& game,
                                   const PolicyTable& profile,
                                   const State& state) {
  switch (game.node_kind(state)) {
    case NodeKind::kTerminal:
      return game.terminal_returns(state);
    case NodeKind::kChance: {
      std::array<double, 2> total{};
      for (const auto& [action, p] : game.chance_outcomes(state)) {
        const auto child = returns_walk(game, profile, Game::child(state, action));
        total[0] += p * child[0];
        total[1] += p * child[1];
      }
      return total;
    }
    case NodeKind::kDecision: {
      const int player = game.player_to_act(state);
      const std::vector<double>& probs = probs_at(game, profile, state, player);
      const auto& actions = game.legal_actions(state);
      std::array<double, 2> total{};
      for (std::size_t i = 0; i < actions.size(); ++i) {
        if (probs[i] == 0.0) continue;
        const auto child =
            returns_walk(game, profile, Game::child(state, actions[i]));
        total[0] += probs[i] * child[0];
        total[1] += probs[i] * child[1];
      }
      return total;
    }
  }
  return {};
}

// Pass-1 record: a history in a responder infoset together with the
// opponent-and-chance reach (world weight included) and the world it sits in.
struct InfosetNodes {
  std::vector<State> states;
  std::vector<int> worlds;
  std::vector<double> reach;
  int depth = 0;
};

std::string memo_key(int world, const State& state) {
  std::string key(1, static_cast<char>(world));
  for (Action a : state.history) key += static_cast<char>('0' + a);
  return key;
}

}  // namespace

std::array<double, 2> expected_returns(const Game& game,
                                       const PolicyTable& profile) {
  return returns_walk(game, profile, game.initial_state());
}

BestResponseInfo best_response_to_mixture(
    const Game& game,
    const std::vector<std::pair<double, const PlayerPolicy*>>& opponent_mix,
    int responder) {
  check_contract(responder == 0 || responder == 1,
                 "best_response: bad responder");
  check_contract(!opponent_mix.empty(), "best_response: empty mixture");
  const int opponent = 1 - responder;

  // Pass 1: opponent-and-chance reach of every responder-infoset node.
  std::unordered_map<int, InfosetNodes> nodes;
  std::function<void(const State&, int, double)> collect =
      [&](const State& state, int world, double reach) {
        switch (game.node_kind(state)) {
          case NodeKind::kTerminal:
            return;
          case NodeKind::kChance:
            for (const auto& [action, p] : game.chance_outcomes(state)) {
              collect(Game::child(state, action), world, reach * p);
            }
            return;
          case NodeKind::kDecision: {
            const int player = game.player_to_act(state);
            const auto& actions = game.legal_actions(state);
            if (player == responder) {
              const int index = game.infoset_index(state);
              InfosetNodes& group = nodes[index];
              group.states.push_back(state);
              group.worlds.push_back(world);
              group.reach.push_back(reach);
              group.depth = static_cast<int>(state.history.size());
              for (Action a : actions) {
                collect(Game::child(state, a), world, reach);
              }
            } else {
              const std::vector<double>& probs =
                  (*opponent_mix[world].second)[game.infoset_index(state)];
              for (std::size_t i = 0; i < actions.size(); ++i) {
                collect(Game::child(state, actions[i]), world,
                        reach * probs[i]);
              }
            }
            return;
          }
        }
      };
  for (std::size_t world = 0; world < opponent_mix.size(); ++world) {
    collect(game.initial_state(), static_cast<int>(world),
            opponent_mix[world].first);
  }

  // Pass 2: deepest-first argmax of reach-weighted action values.
  std::vector<int> order;
  order.reserve(nodes.size());
  for (const auto& [index, group] : nodes) order.push_back(index);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (nodes[a].depth != nodes[b].depth) return nodes[a].depth > nodes[b].depth;
    return a < b;
  });

  std::vector<int> br_action(game.num_infosets(responder), -1);
  std::unordered_map<std::string, double> memo;

  std::function<double(const State&, int)> value =
      [&](const State& state, int world) -> double {
    switch (game.node_kind(state)) {
      case NodeKind::kTerminal:
        return game.terminal_returns(state)[responder];
      case NodeKind::kChance: {
        const std::string key = memo_key(world, state);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        double total = 0.0;
        for (const auto& [action, p] : game.chance_outcomes(state)) {
          total += p * value(Game::child(state, action), world);
        }
        memo.emplace(key, total);
        return total;
      }
      case NodeKind::kDecision: {
        const std::string key = memo_key(world, state);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const int player = game.player_to_act(state);
        const auto& actions = game.legal_actions(state);
        double total = 0.0;
        if (player == responder) {
          const int index = game.infoset_index(state);
          check_contract(br_action[index] >= 0,
                         "best_response: deeper infoset not yet decided");
          total = value(Game::child(state, actions[br_action[index]]), world);
        } else {
          const std::vector<double>& probs =
              (*opponent_mix[world].second)[game.infoset_index(state)];
          for (std::size_t i = 0; i < actions.size(); ++i) {
            if (probs[i] == 0.0) continue;
            total += probs[i] * value(Game::child(state, actions[i]), world);
          }
        }
        memo.emplace(key, total);
        return total;
      }
    }
    return 0.0;
  };

  for (int index : order) {
    const InfosetNodes& group = nodes[index];
    const auto& actions = game.infoset(responder, index).legal_actions;
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t ai = 0; ai < actions.size(); ++ai) {
      double q = 0.0;
      for (std::size_t h = 0; h < group.states.size(); ++h) {
        if (group.reach[h] == 0.0 && q == q) {
          // Zero-reach nodes contribute nothing; still well-defined.
          continue;
        }
        q += group.reach[h] *
             value(Game::child(group.states[h], actions[ai]), group.worlds[h]);
      }
      if (q > best_value) {
        best_value = q;
        best = static_cast<int>(ai);
      }
    }
    br_action[index] = best;
  }

  BestResponseInfo info;
  info.responder = responder;
  info.br_policy.resize(game.num_infosets(responder));
  for (int i = 0; i < game.num_infosets(responder); ++i) {
    const int arity = game.infoset(responder, i).num_actions();
    info.br_policy[i].assign(arity, 0.0);
    // Infosets absent from the collection cannot occur; default to action 0.
    const int chosen = br_action[i] >= 0 ? br_action[i] : 0;
    info.br_policy[i][chosen] = 1.0;
  }

  // Root value under the completed response, summed over worlds.
  for (int i = 0; i < game.num_infosets(responder); ++i) {
    if (br_action[i] < 0) br_action[i] = 0;
  }
  memo.clear();
  double total = 0.0;
  for (std::size_t world = 0; world < opponent_mix.size(); ++world) {
    if (opponent_mix[world].first == 0.0) continue;
    total += opponent_mix[world].first *
             value(game.initial_state(), static_cast<int>(world));
  }
  info.br_value = total;
  return info;
}

BestResponseInfo best_response(const Game& game, const PolicyTable& profile,
                               int responder) {
  const PlayerPolicy& opponent = profile.side(1 - responder);
  return best_response_to_mixture(game, {{1.0, &opponent}}, responder);
}

NashConvReport nash_conv(const Game& game, const PolicyTable& profile) {
  const std::array<double, 2> base = expected_returns(game, profile);
  BestResponseInfo br0, br1;
#pragma omp parallel sections
  {
#pragma omp section
    br0 = best_response(game, profile, 0);
#pragma omp section
    br1 = best_response(game, profile, 1);
  }
  NashConvReport report;
  report.deltas[0] = br0.br_value - base[0];
  report.deltas[1] = br1.br_value - base[1];
  report.nash_conv = report.deltas[0] + report.deltas[1];
  report.exploitability = report.nash_conv / game.spec().num_players;
  return report;
}

double exploitability(const Game& game, const PolicyTable& profile) {
  return nash_conv(game, profile).exploitability;
}

}  // namespace efg
