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

#ifndef HYPERGAME_DIALOGUE_HPP_
#define HYPERGAME_DIALOGUE_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypergame/transition.hpp"

namespace hypergame {

// Raised for dialogues that break the pointer discipline, or when an
// operation's precondition on the dialogue does not hold.
class DialogueError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A move points back to an earlier position (1-based); 0 marks a starting
// move.
struct Move {
  int back_ref = 0;
  Label label;

  friend bool operator==(const Move& a, const Move& b) {
    return a.back_ref == b.back_ref && a.label == b.label;
  }
  friend bool operator<(const Move& a, const Move& b) {
    if (a.back_ref != b.back_ref) return a.back_ref < b.back_ref;
    return a.label < b.label;
  }
};

using Dialogue = std::vector<Move>;

// Odd positions belong to the Opponent, even ones to the Player.
inline bool is_opponent_position(int position) { return position % 2 == 1; }

enum class Mode { kFull, kPBacktracking, kBlackBox };

bool is_trace(const TransitionSystem& ts, const std::vector<Label>& labels);

// All traces of length <= max_length with imports drawn from `universe`,
// starting at the initial state. Sorted.
std::set<std::vector<Label>> traces(const TransitionSystem& ts, int max_length,
                                    const std::vector<TypeExpr>& universe = {},
                                    int max_imports = 4);
// The same game seen from the root: traces after the opening move, with the
// opening label dropped. For a quantified root the openings are taken over
// the universe and merged.
std::set<std::vector<Label>> root_traces(const TransitionSystem& ts,
                                         int max_length,
                                         const std::vector<TypeExpr>& universe = {},
                                         int max_imports = 4);

// Writes a label sequence the compact way traces are usually written, e.g.
// "121", with "ε" for the empty trace. Imports are shown when present.
std::string trace_to_string(const std::vector<Label>& labels);

// Checks i - back_ref odd and 0 <= back_ref < i at every position.
bool well_formed(const Dialogue& d);

// Positions (1-based) of the thread ending at `position`, oldest first.
std::vector<int> thread_positions(const Dialogue& d, int position);
std::vector<Label> thread_at(const Dialogue& d, int position);
// All maximal threads.
std::vector<std::vector<Label>> threads(const Dialogue& d);

bool respects(const TransitionSystem& ts, const Dialogue& d);
bool is_p_backtracking(const Dialogue& d);

// The state reached by the move at `position` (1-based), or the initial state
// for position 0. Throws DialogueError if the thread is not a trace.
State state_at(const TransitionSystem& ts, const Dialogue& d, int position);

bool copycat_ok(const TransitionSystem& ts, const Dialogue& d);
bool blackbox_ok(const TransitionSystem& ts, const Dialogue& d);

// Membership of the game for a mode: ↑G, ↾G, or the black-box game.
bool in_game(const TransitionSystem& ts, const Dialogue& d, Mode mode);

// Canonical name of the Opponent's j-th black box (0-based, play order).
std::string box_name(int j);
// Black-box variables introduced by the Opponent in d, in play order.
std::vector<std::string> opponent_boxes(const Dialogue& d);
// Renames the Opponent's black boxes to box_name(0), box_name(1), ... in play
// order, everywhere in d.
Dialogue canonicalize_boxes(const Dialogue& d);

struct MoveOptions {
  std::vector<TypeExpr> universe;
  int max_imports = 4;
  // Black-box mode only: also offer the Player every type over the
  // Opponent's boxes up to this AST size (0 disables).
  int generated_import_size = 0;
};

// One-move extensions of d valid in `mode`. In black-box mode the Opponent's
// imports are forced to the next canonical boxes, and the Player's imports are
// the boxes so far, universe members over those boxes, and generated types.
std::vector<Move> legal_moves(const TransitionSystem& ts, const Dialogue& d,
                              Mode mode, const MoveOptions& options = {});

// Serialization used as a map key; alpha-invariant for imports.
std::string dialogue_key(const Dialogue& d);
std::string move_to_string(const Move& m);

}  // namespace hypergame

#endif  // HYPERGAME_DIALOGUE_HPP_
