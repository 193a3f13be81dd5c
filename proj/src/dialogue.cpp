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

#include "hypergame/dialogue.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace hypergame {

bool is_trace(const TransitionSystem& ts, const std::vector<Label>& labels) {
  return ts.run(labels).has_value();
}

std::set<std::vector<Label>> traces(const TransitionSystem& ts, int max_length,
                                    const std::vector<TypeExpr>& universe,
                                    int max_imports) {
  std::set<std::vector<Label>> out;
  std::vector<Label> cur;
  std::function<void(const State&)> walk = [&](const State& s) {
    out.insert(cur);
    if (static_cast<int>(cur.size()) >= max_length) return;
    for (const auto& l : ts.enumerate_labels(s, universe, max_imports)) {
      cur.push_back(l);
      walk(*ts.step(s, l));
      cur.pop_back();
    }
  };
  walk(State::initial());
  return out;
}

std::set<std::vector<Label>> root_traces(const TransitionSystem& ts,
                                         int max_length,
                                         const std::vector<TypeExpr>& universe,
                                         int max_imports) {
  std::set<std::vector<Label>> out;
  for (const auto& t : traces(ts, max_length + 1, universe, max_imports)) {
    if (t.empty()) continue;
    out.emplace(t.begin() + 1, t.end());
  }
  out.insert({});
  return out;
}

std::string trace_to_string(const std::vector<Label>& labels) {
  if (labels.empty()) return "\xCE\xB5";  // U+03B5
  bool compact = true;
  for (const auto& l : labels)
    if (l.branch > 9 || !l.imports.empty()) compact = false;
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!compact && i) out += ' ';
    out += labels[i].to_string();
  }
  return out;
}

bool well_formed(const Dialogue& d) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    const int a = d[k].back_ref;
    if (a < 0 || a >= i || (i - a) % 2 == 0) return false;
  }
  return true;
}

namespace {

void require_well_formed(const Dialogue& d) {
  if (!well_formed(d)) throw DialogueError("malformed dialogue: bad back-reference");
}

// States reached by each move; nullopt once a thread leaves the game.
std::vector<std::optional<State>> move_states(const TransitionSystem& ts,
                                              const Dialogue& d) {
  std::vector<std::optional<State>> out(d.size() + 1);
  out[0] = State::initial();
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& from = out[static_cast<std::size_t>(d[k].back_ref)];
    if (from) out[k + 1] = ts.step(*from, d[k].label);
  }
  return out;
}

}  // namespace

std::vector<int> thread_positions(const Dialogue& d, int position) {
  require_well_formed(d);
  if (position < 1 || position > static_cast<int>(d.size()))
    throw DialogueError("position out of range: " + std::to_string(position));
  std::vector<int> out;
  for (int p = position; p != 0; p = d[static_cast<std::size_t>(p) - 1].back_ref)
    out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Label> thread_at(const Dialogue& d, int position) {
  std::vector<Label> out;
  for (int p : thread_positions(d, position))
    out.push_back(d[static_cast<std::size_t>(p) - 1].label);
  return out;
}

std::vector<std::vector<Label>> threads(const Dialogue& d) {
  require_well_formed(d);
  std::vector<bool> extended(d.size() + 1, false);
  for (const auto& m : d) extended[static_cast<std::size_t>(m.back_ref)] = true;
  std::vector<std::vector<Label>> out;
  for (std::size_t k = 1; k <= d.size(); ++k)
    if (!extended[k]) out.push_back(thread_at(d, static_cast<int>(k)));
  return out;
}

bool respects(const TransitionSystem& ts, const Dialogue& d) {
  if (!well_formed(d)) return false;
  for (const auto& s : move_states(ts, d))
    if (!s) return false;
  return true;
}

bool is_p_backtracking(const Dialogue& d) {
  for (std::size_t k = 0; k < d.size(); k += 2)
    if (d[k].back_ref != static_cast<int>(k)) return false;
  return true;
}

State state_at(const TransitionSystem& ts, const Dialogue& d, int position) {
  require_well_formed(d);
  if (position < 0 || position > static_cast<int>(d.size()))
    throw DialogueError("position out of range: " + std::to_string(position));
  if (position == 0) return State::initial();
  const auto& m = d[static_cast<std::size_t>(position) - 1];
  auto s = ts.step(state_at(ts, d, m.back_ref), m.label);
  if (!s)
    throw DialogueError("move " + std::to_string(position) +
                        " leaves the game: " + m.label.to_string());
  return *s;
}

bool copycat_ok(const TransitionSystem& ts, const Dialogue& d) {
  if (!respects(ts, d) || !is_p_backtracking(d))
    throw DialogueError("copycat check needs a P-backtracking dialogue of the game");
  const auto states = move_states(ts, d);
  auto head = [&](std::size_t pos) { return resolved_view(states[pos]->type()).head; };
  for (std::size_t pos = 2; pos <= d.size(); pos += 2)
    if (head(pos) != head(pos - 1)) return false;
  return true;
}

bool blackbox_ok(const TransitionSystem& ts, const Dialogue& d) {
  if (!free_vars(ts.root()).empty())
    throw DialogueError("black-box game needs a closed type");
  if (!respects(ts, d) || !is_p_backtracking(d))
    throw DialogueError("black-box check needs a P-backtracking dialogue of the game");
  std::set<std::string> boxes;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& imports = d[k].label.imports;
    if (k % 2 == 0) {
      for (const auto& v : imports) {
        if (!v.is_var() || !boxes.insert(v.name()).second) return false;
      }
    } else {
      for (const auto& v : imports)
        for (const auto& x : free_vars(v))
          if (!boxes.count(x)) return false;
    }
  }
  return true;
}

bool in_game(const TransitionSystem& ts, const Dialogue& d, Mode mode) {
  if (!respects(ts, d)) return false;
  if (mode == Mode::kFull) return true;
  if (!is_p_backtracking(d)) return false;
  if (mode == Mode::kPBacktracking) return true;
  return blackbox_ok(ts, d);
}

std::string box_name(int j) { return "B" + std::to_string(j); }

std::vector<std::string> opponent_boxes(const Dialogue& d) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < d.size(); k += 2)
    for (const auto& v : d[k].label.imports)
      if (v.is_var()) out.push_back(v.name());
  return out;
}

Dialogue canonicalize_boxes(const Dialogue& d) {
  std::vector<std::pair<std::string, TypeExpr>> renaming;
  int j = 0;
  for (const auto& name : opponent_boxes(d))
    renaming.emplace_back(name, TypeExpr::var(box_name(j++)));
  Dialogue out = d;
  for (auto& m : out)
    for (auto& v : m.label.imports) v = substitute_all(v, renaming);
  return out;
}

std::vector<Move> legal_moves(const TransitionSystem& ts, const Dialogue& d,
                              Mode mode, const MoveOptions& options) {
  std::vector<Move> out;
  if (!well_formed(d)) return out;
  const auto states = move_states(ts, d);
  const int next = static_cast<int>(d.size()) + 1;
  const bool opponent = is_opponent_position(next);

  std::vector<int> pointers;
  if (opponent && mode != Mode::kFull) {
    pointers.push_back(next - 1);
  } else {
    for (int j = next - 1; j >= 0; j -= 2) pointers.push_back(j);
    std::reverse(pointers.begin(), pointers.end());
  }

  std::vector<TypeExpr> universe = options.universe;
  const auto boxes = opponent_boxes(d);
  if (mode == Mode::kBlackBox && !opponent) {
    universe.clear();
    std::set<std::string> box_set(boxes.begin(), boxes.end());
    auto add = [&](const TypeExpr& t) {
      if (std::find(universe.begin(), universe.end(), t) == universe.end())
        universe.push_back(t);
    };
    for (const auto& b : boxes) add(TypeExpr::var(b));
    for (const auto& u : options.universe) {
      const auto fv = free_vars(u);
      if (std::includes(box_set.begin(), box_set.end(), fv.begin(), fv.end())) add(u);
    }
    if (options.generated_import_size > 0)
      for (const auto& t :
           enumerate_types(boxes, static_cast<std::size_t>(options.generated_import_size)))
        add(t);
  }

  for (int j : pointers) {
    const auto& s = states[static_cast<std::size_t>(j)];
    if (!s) continue;
    if (mode == Mode::kBlackBox && opponent) {
      std::vector<TypeExpr> branches =
          s->is_initial() ? std::vector<TypeExpr>{ts.root()}
                          : resolved_view(s->type()).branches;
      for (std::size_t b = 0; b < branches.size(); ++b) {
        Label l{static_cast<int>(b) + 1, {}};
        const auto k = available_quantifiers(branches[b]).size();
        for (std::size_t q = 0; q < k; ++q)
          l.imports.push_back(
              TypeExpr::var(box_name(static_cast<int>(boxes.size() + q))));
        out.push_back(Move{j, std::move(l)});
      }
      continue;
    }
    for (auto& l : ts.enumerate_labels(*s, universe, options.max_imports))
      out.push_back(Move{j, std::move(l)});
  }
  return out;
}

std::string move_to_string(const Move& m) {
  return "(" + std::to_string(m.back_ref) + ") " + m.label.to_string();
}

std::string dialogue_key(const Dialogue& d) {
  std::string out;
  for (const auto& m : d) {
    out += std::to_string(m.back_ref) + ":" + std::to_string(m.label.branch) + "[";
    for (const auto& v : m.label.imports) out += v.key() + ",";
    out += "];";
  }
  return out;
}

}  // namespace hypergame
