// Copyright 2026 The Hypergame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERGAME_STRATEGY_HPP_
#define HYPERGAME_STRATEGY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypergame/dialogue.hpp"

namespace hypergame {

// A finite strategy stored as its prefix-closed tree of plays. In the
// P-backtracking and black-box games the Opponent never backtracks, so a play
// is its own P-view and the tree doubles as the view function.
class Strategy {
 public:
  Strategy();  // {ε}

  // Prefix closure of the given plays.
  static Strategy from_plays(const std::vector<Dialogue>& plays);

  void add_play(const Dialogue& d);

  bool contains(const Dialogue& d) const;
  // All one-move extensions of d present in the tree.
  std::vector<Move> extensions(const Dialogue& d) const;
  // The unique response to an odd-length play, if any.
  std::optional<Move> respond(const Dialogue& d) const;

  // Every play, ordered by canonical serialization.
  std::vector<Dialogue> plays() const;
  std::vector<Dialogue> maximal_plays() const;
  std::size_t size() const { return plays_.size(); }
  std::size_t depth() const;

  friend bool operator==(const Strategy& a, const Strategy& b) {
    return a.keys() == b.keys();
  }
  friend bool operator!=(const Strategy& a, const Strategy& b) { return !(a == b); }
  friend bool operator<(const Strategy& a, const Strategy& b) {
    return a.keys() < b.keys();
  }

  std::vector<std::string> keys() const;

 private:
  std::map<std::string, Dialogue> plays_;
  std::map<std::string, std::vector<Move>> children_;
};

struct Verdict {
  bool ok = true;
  std::string reason;
  Dialogue witness;
};

// Tree shape, determinism, and membership of every play in the mode's game.
// In black-box mode the plays must also use canonical box names.
Verdict validate_strategy(const TransitionSystem& ts, const Strategy& s, Mode mode);

struct Liveness {
  bool live = true;
  // True when the Opponent's extensions were drawn from a finite universe,
  // so the verdict only holds relative to it.
  bool universe_relative = false;
  Dialogue witness;  // an unanswered stimulus when not live
};

Liveness is_live(const TransitionSystem& ts, const Strategy& s, Mode mode,
                 const MoveOptions& options = {});

bool copycat_ok_strategy(const TransitionSystem& ts, const Strategy& s);

struct EnumerationOptions {
  Mode mode = Mode::kBlackBox;
  int depth_bound = 4;
  MoveOptions moves;
  bool require_copycat = true;
  // Stop after this many strategies (0 = no limit).
  std::size_t limit = 0;
};

// All finite live strategies whose plays have length <= depth_bound, with
// the copycat filter when requested, in a deterministic order.
std::vector<Strategy> enumerate_strategies(const TransitionSystem& ts,
                                           const EnumerationOptions& options);

// Uniform lifting of a black-box strategy: the assigned boxes are replaced
// by concrete types and the strategy plays copycat inside them. The result
// lives in the P-backtracking game and is built up to `depth` moves.
// Implemented by the interaction engine.
Strategy copycat_expand(const TransitionSystem& ts, const Strategy& s,
                        const std::map<std::string, TypeExpr>& assignment,
                        int depth);

}  // namespace hypergame

#endif  // HYPERGAME_STRATEGY_HPP_
