#include "games/game.hpp"

#include <functional>

#include "games/kuhn.hpp"
#include "games/leduc.hpp"
#include "util/errors.hpp"

namespace efg {

std::string InfosetKey::str() const {
  std::string out = "p" + std::to_string(player);
  out += ":c" + std::to_string(private_card);
  if (public_card >= 0) out += ":b" + std::to_string(public_card);
  out += ":" + (betting.empty() ? std::string("-") : betting);
  return out;
}

std::size_t InfosetKeyHash::operator()(const InfosetKey& k) const {
  std::size_t h = std::hash<std::string>()(k.betting);
  h ^= std::hash<int>()(k.player) + 0x9e3779b9 + (h << 6) + (h >> 2);
  h ^= std::hash<int>()(k.private_card) + 0x9e3779b9 + (h << 6) + (h >> 2);
  h ^= std::hash<int>()(k.public_card) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

State Game::apply_action(const State& s, Action a) const {
  const NodeKind kind = node_kind(s);
  check_contract(kind != NodeKind::kTerminal,
                 "apply_action: state is terminal");
  bool legal = false;
  if (kind == NodeKind::kChance) {
    for (const auto& [action, prob] : chance_outcomes(s)) {
      if (action == a) {
        legal = true;
        break;
      }
    }
  } else {
    for (Action candidate : legal_actions(s)) {
      if (candidate == a) {
        legal = true;
        break;
      }
    }
  }
  check_contract(legal, "apply_action: illegal action " + std::to_string(a));
  return child(s, a);
}

State Game::child(const State& s, Action a) {
  State next = s;
  next.history.push_back(a);
  return next;
}

int Game::infoset_index(const InfosetKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) {
    throw EvalError("unknown infoset key: " + key.str());
  }
  return it->second;
}

int Game::infoset_index(const State& s) const {
  return infoset_index(infoset_key(s, player_to_act(s)));
}

void Game::build_index() {
  std::function<void(const State&)> walk = [&](const State& s) {
    switch (node_kind(s)) {
      case NodeKind::kTerminal:
        return;
      case NodeKind::kChance:
        for (const auto& [a, prob] : chance_outcomes(s)) walk(child(s, a));
        return;
      case NodeKind::kDecision: {
        const int player = player_to_act(s);
        InfosetKey key = infoset_key(s, player);
        if (index_.find(key) == index_.end()) {
          index_.emplace(key, static_cast<int>(infosets_[player].size()));
          infosets_[player].push_back(InfosetInfo{key, legal_actions(s)});
        }
        for (Action a : legal_actions(s)) walk(child(s, a));
        return;
      }
    }
  };
  walk(initial_state());
}

std::unique_ptr<Game> build_game(const std::string& game_id) {
  if (game_id == "kuhn") return std::make_unique<KuhnGame>();
  if (game_id == "leduc") return std::make_unique<LeducGame>();
  throw ConfigError("unknown game id '" + game_id + "' (expected kuhn|leduc)");
}

}  // namespace efg
