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

#ifndef HYPERGAME_TRANSITION_HPP_
#define HYPERGAME_TRANSITION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hypergame/type.hpp"

namespace hypergame {

// A transition label: branch choice (>= 1) plus imported types.
struct Label {
  int branch = 1;
  std::vector<TypeExpr> imports;

  // "2" or "2⟨forall Y. Y, Z1 -> Z⟩".
  std::string to_string() const;

  friend bool operator==(const Label& a, const Label& b) {
    return a.branch == b.branch && a.imports == b.imports;
  }
  friend bool operator<(const Label& a, const Label& b);
};

// Either the initial state or a resolved type.
class State {
 public:
  static State initial() { return State(); }
  static State resolved(TypeExpr t);

  bool is_initial() const { return !type_.has_value(); }
  const TypeExpr& type() const { return *type_; }
  std::string to_string() const;

  friend bool operator==(const State& a, const State& b) {
    return a.type_ == b.type_;
  }

 private:
  State() = default;
  std::optional<TypeExpr> type_;
};

// The lazy transition system of a type. Nothing is materialized: the label
// set is infinite once quantifiers are involved, so steps are computed on
// demand.
//
// kPrenex is the strict variant where every state is kept in prenex form and
// importation goes through import_prenex; the two are trace-isomorphic.
class TransitionSystem {
 public:
  enum class Style { kLazy, kPrenex };

  explicit TransitionSystem(TypeExpr root, Style style = Style::kLazy)
      : root_(style == Style::kPrenex ? prenex(root) : std::move(root)),
        style_(style) {}

  const TypeExpr& root() const { return root_; }
  Style style() const { return style_; }

  // The target of `label` from `state`, if that transition exists. From the
  // initial state only branch 1 is allowed, and its imports must resolve the
  // root type. From a resolved state the imports must exactly resolve the
  // chosen branch.
  std::optional<State> step(const State& state, const Label& label) const;

  // All labels leaving `state` whose imports are drawn from `universe`,
  // ordered by branch and then lexicographically by import indices. At most
  // `max_imports` imports per label, which keeps import chains that
  // regenerate quantifiers finite.
  std::vector<Label> enumerate_labels(const State& state,
                                      const std::vector<TypeExpr>& universe,
                                      int max_imports = 4) const;

  // Head variable of the target of a defined transition.
  std::string colour(const State& state, const Label& label) const;

  // Follows a label sequence from the initial state.
  std::optional<State> run(const std::vector<Label>& labels) const;

  struct Edge {
    int source;
    int target;
    Label label;
  };
  struct Fragment {
    std::vector<State> states;  // states[0] is the initial state
    std::vector<Edge> edges;
  };
  // Breadth-first reachable fragment up to `depth` transitions.
  Fragment reachable(int depth, const std::vector<TypeExpr>& universe,
                     int max_imports = 4) const;

 private:
  std::optional<TypeExpr> resolve_with(const TypeExpr& t,
                                       const std::vector<TypeExpr>& imports) const;
  TypeExpr import_one(const TypeExpr& t, const TypeExpr& v) const;

  TypeExpr root_;
  Style style_;
};

TransitionSystem build(const TypeExpr& t);

// Projection onto the untyped single-state system: drops the imports.
inline int erase_imports(const Label& l) { return l.branch; }

// Graphviz rendering of a fragment.
std::string to_dot(const TransitionSystem::Fragment& fragment);

}  // namespace hypergame

#endif  // HYPERGAME_TRANSITION_HPP_
