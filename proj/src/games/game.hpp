#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace efg {

enum class NodeKind { kChance, kDecision, kTerminal };

// Dense action id. Decision actions use game-specific semantic ids
// (0 = pass/check/fold side, higher = bet/raise/call side); chance actions
// are outcome ids (e.g. card indices).
using Action = int;

struct GameSpec {
  std::string game_id;
  int num_players = 2;
  int max_actions = 0;        // most legal actions at any decision node
  double utility_bound = 0.0;  // largest |terminal payoff|
};

// A state is the action history from the root; everything else is derived.
struct State {
  std::vector<Action> history;
};

// Canonical description of what the acting player knows.
struct InfosetKey {
  int player = 0;
  int private_card = -1;
  int public_card = -1;  // -1 until revealed (always -1 in Kuhn)
  std::string betting;   // one char per action, '|' between betting rounds

  bool operator==(const InfosetKey&) const = default;
  auto operator<=>(const InfosetKey&) const = default;
  std::string str() const;
};

struct InfosetKeyHash {
  std::size_t operator()(const InfosetKey& k) const;
};

struct InfosetInfo {
  InfosetKey key;
  std::vector<Action> legal_actions;  // semantic ids, deterministic order
  int num_actions() const { return static_cast<int>(legal_actions.size()); }
};

// Immutable two-player zero-sum extensive-form game. Rule queries are pure
// functions of (game, state); the infoset index is built once by exhaustive
// enumeration and shared by all solvers.
class Game {
 public:
  virtual ~Game() = default;

  const GameSpec& spec() const { return spec_; }

  State initial_state() const { return State{}; }

  virtual NodeKind node_kind(const State& s) const = 0;
  virtual int player_to_act(const State& s) const = 0;
  virtual std::vector<Action> legal_actions(const State& s) const = 0;
  virtual std::vector<std::pair<Action, double>> chance_outcomes(
      const State& s) const = 0;
  virtual std::array<double, 2> terminal_returns(const State& s) const = 0;
  virtual InfosetKey infoset_key(const State& s, int player) const = 0;

  // Pure: validates the action and returns the child state.
  State apply_action(const State& s, Action a) const;
  // Same, without the legality check; for traversals that iterate over
  // legal_actions anyway.
  static State child(const State& s, Action a);

  int num_infosets(int player) const {
    return static_cast<int>(infosets_[player].size());
  }
  const std::vector<InfosetInfo>& infosets(int player) const {
    return infosets_[player];
  }
  const InfosetInfo& infoset(int player, int index) const {
    return infosets_[player][index];
  }
  // Index of a key in the enumeration; throws EvalError for unknown keys.
  int infoset_index(const InfosetKey& key) const;
  // Infoset index of the acting player at a decision state.
  int infoset_index(const State& s) const;

 protected:
  GameSpec spec_;
  // Walks the full tree and fills the infoset catalog (first-visit order).
  void build_index();

 private:
  std::array<std::vector<InfosetInfo>, 2> infosets_;
  std::unordered_map<InfosetKey, int, InfosetKeyHash> index_;
};

// Constructs kuhn or leduc poker; throws ConfigError for anything else.
std::unique_ptr<Game> build_game(const std::string& game_id);

}  // namespace efg
