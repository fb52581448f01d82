#include "games/kuhn.hpp"

#include "util/errors.hpp"

namespace efg {

namespace {

// Betting part of the history (everything after the two deals).
inline int betting_len(const State& s) {
  return static_cast<int>(s.history.size()) - 2;
}

inline bool betting_terminal(const State& s) {
  const int n = betting_len(s);
  if (n < 2) return false;
  if (n == 3) return true;
  // Length 2: only "pass bet" continues.
  return !(s.history[2] == KuhnGame::kPass && s.history[3] == KuhnGame::kBet);
}

}  // namespace

KuhnGame::KuhnGame() {
  spec_.game_id = "kuhn";
  spec_.num_players = 2;
  spec_.max_actions = 2;
  spec_.utility_bound = 2.0;
  build_index();
}

NodeKind KuhnGame::node_kind(const State& s) const {
  if (s.history.size() < 2) return NodeKind::kChance;
  return betting_terminal(s) ? NodeKind::kTerminal : NodeKind::kDecision;
}

int KuhnGame::player_to_act(const State& s) const {
  check_contract(node_kind(s) == NodeKind::kDecision,
                 "player_to_act: not a decision node");
  return betting_len(s) % 2;
}

std::vector<Action> KuhnGame::legal_actions(const State& s) const {
  check_contract(node_kind(s) == NodeKind::kDecision,
                 "legal_actions: not a decision node");
  return {kPass, kBet};
}

std::vector<std::pair<Action, double>> KuhnGame::chance_outcomes(
    const State& s) const {
  check_contract(node_kind(s) == NodeKind::kChance,
                 "chance_outcomes: not a chance node");
  std::vector<std::pair<Action, double>> outcomes;
  if (s.history.empty()) {
    for (int c = 0; c < kNumCards; ++c) outcomes.emplace_back(c, 1.0 / 3.0);
  } else {
    for (int c = 0; c < kNumCards; ++c) {
      if (c != s.history[0]) outcomes.emplace_back(c, 1.0 / 2.0);
    }
  }
  return outcomes;
}

std::array<double, 2> KuhnGame::terminal_returns(const State& s) const {
  check_contract(node_kind(s) == NodeKind::kTerminal,
                 "terminal_returns: not a terminal node");
  const int n = betting_len(s);
  const Action last = s.history.back();
  const Action prev = s.history[s.history.size() - 2];
  if (last == kPass && prev == kBet) {
    // Fold: the bettor collects the ante.
    const int folder = (2 + n - 1) % 2;
    std::array<double, 2> r{};
    r[folder] = -1.0;
    r[1 - folder] = 1.0;
    return r;
  }
  // Showdown; pot is 2 after "pass pass", 4 after a called bet.
  const double win = (last == kBet) ? 2.0 : 1.0;
  const int winner = s.history[0] > s.history[1] ? 0 : 1;
  std::array<double, 2> r{};
  r[winner] = win;
  r[1 - winner] = -win;
  return r;
}

InfosetKey KuhnGame::infoset_key(const State& s, int player) const {
  check_contract(node_kind(s) == NodeKind::kDecision,
                 "infoset_key: not a decision node");
  check_contract(player == player_to_act(s),
                 "infoset_key: player is not to act");
  InfosetKey key;
  key.player = player;
  key.private_card = s.history[player];
  key.public_card = -1;
  for (std::size_t i = 2; i < s.history.size(); ++i) {
    key.betting += s.history[i] == kPass ? 'p' : 'b';
  }
  return key;
}

}  // namespace efg
