#include "games/leduc.hpp"

#include "util/errors.hpp"

namespace efg {

LeducGame::LeducGame() {
  spec_.game_id = "leduc";
  spec_.num_players = 2;
  spec_.max_actions = 3;
  // 1 ante + (2+2) round-1 raises + (4+4) round-2 raises.
  spec_.utility_bound = 13.0;
  build_index();
}

LeducGame::Pos LeducGame::parse(const State& s) const {
  Pos pos;
  const auto& h = s.history;
  if (h.size() < 2) {
    pos.kind = NodeKind::kChance;
    return pos;
  }
  pos.round = 1;
  pos.to_act = 0;
  pos.contrib[0] = pos.contrib[1] = kAnte;
  std::size_t i = 2;
  while (i < h.size()) {
    if (pos.round == 2 && pos.public_card < 0) {
      pos.public_card = h[i++];
      pos.betting += '|';
      continue;
    }
    const Action a = h[i++];
    const int me = pos.to_act;
    const int opp = 1 - me;
    ++pos.round_actions;
    switch (a) {
      case kFold:
        pos.betting += 'f';
        pos.folder = me;
        pos.kind = NodeKind::kTerminal;
        check_contract(i == h.size(), "leduc: actions after a fold");
        return pos;
      case kCall: {
        pos.betting += 'c';
        pos.contrib[me] = pos.contrib[opp];
        const bool round_over = pos.round_actions >= 2;
        if (round_over) {
          if (pos.round == 1) {
            pos.round = 2;
            pos.raises = 0;
            pos.round_actions = 0;
            pos.to_act = 0;
            // Next node deals the public card unless already dealt.
          } else {
            pos.kind = NodeKind::kTerminal;
            check_contract(i == h.size(), "leduc: actions after showdown");
            return pos;
          }
        } else {
          pos.to_act = opp;
        }
        break;
      }
      case kRaise:
        pos.betting += 'r';
        pos.contrib[me] = pos.contrib[opp] + kRaiseSize[pos.round - 1];
        ++pos.raises;
        pos.to_act = opp;
        break;
      default:
        throw ContractViolation("leduc: bad action in history");
    }
  }
  if (pos.round == 2 && pos.public_card < 0) {
    pos.kind = NodeKind::kChance;
  } else {
    pos.kind = NodeKind::kDecision;
  }
  return pos;
}

NodeKind LeducGame::node_kind(const State& s) const {
  return parse(s).kind;
}

int LeducGame::player_to_act(const State& s) const {
  const Pos pos = parse(s);
  check_contract(pos.kind == NodeKind::kDecision,
                 "player_to_act: not a decision node");
  return pos.to_act;
}

std::vector<Action> LeducGame::legal_actions(const State& s) const {
  const Pos pos = parse(s);
  check_contract(pos.kind == NodeKind::kDecision,
                 "legal_actions: not a decision node");
  std::vector<Action> actions;
  if (pos.contrib[pos.to_act] < pos.contrib[1 - pos.to_act]) {
    actions.push_back(kFold);
  }
  actions.push_back(kCall);
  if (pos.raises < kMaxRaises) actions.push_back(kRaise);
  return actions;
}

std::vector<std::pair<Action, double>> LeducGame::chance_outcomes(
    const State& s) const {
  const Pos pos = parse(s);
  check_contract(pos.kind == NodeKind::kChance,
                 "chance_outcomes: not a chance node");
  std::vector<std::pair<Action, double>> outcomes;
  const auto& h = s.history;
  const int dealt = static_cast<int>(h.size() < 2 ? h.size() : 2);
  const double p = 1.0 / (kNumCards - (pos.round == 0 ? dealt : 2));
  for (int c = 0; c < kNumCards; ++c) {
    bool used = c == (h.size() > 0 ? h[0] : -1) ||
                c == (h.size() > 1 ? h[1] : -1);
    if (!used) outcomes.emplace_back(c, p);
  }
  return outcomes;
}

std::array<double, 2> LeducGame::terminal_returns(const State& s) const {
  const Pos pos = parse(s);
  check_contract(pos.kind == NodeKind::kTerminal,
                 "terminal_returns: not a terminal node");
  std::array<double, 2> r{};
  if (pos.folder >= 0) {
    const int winner = 1 - pos.folder;
    r[winner] = pos.contrib[pos.folder];
    r[pos.folder] = -r[winner];
    return r;
  }
  const int rank0 = s.history[0] / 2;
  const int rank1 = s.history[1] / 2;
  const int rank_pub = pos.public_card / 2;
  int winner;
  if (rank0 == rank_pub) {
    winner = 0;
  } else if (rank1 == rank_pub) {
    winner = 1;
  } else if (rank0 != rank1) {
    winner = rank0 > rank1 ? 0 : 1;
  } else {
    return r;  // split pot
  }
  r[winner] = pos.contrib[1 - winner];
  r[1 - winner] = -r[winner];
  return r;
}

InfosetKey LeducGame::infoset_key(const State& s, int player) const {
  const Pos pos = parse(s);
  check_contract(pos.kind == NodeKind::kDecision,
                 "infoset_key: not a decision node");
  check_contract(player == pos.to_act, "infoset_key: player is not to act");
  InfosetKey key;
  key.player = player;
  key.private_card = s.history[player];
  key.public_card = pos.public_card;
  key.betting = pos.betting;
  return key;
}

}  // namespace efg
