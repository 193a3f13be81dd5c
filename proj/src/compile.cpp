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

// Terms to strategies and back.

#include <set>

#include "hypergame/semantics.hpp"

namespace hypergame {

Mode game_mode(const TypeExpr& ty) {
  return free_vars(ty).empty() ? Mode::kBlackBox : Mode::kPBacktracking;
}

const char* party_name(Party p) {
  switch (p) {
    case Party::kExternal: return "ext";
    case Party::kFunction: return "fun";
    case Party::kArgument: return "arg";
  }
  return "?";
}

namespace {

std::vector<TypeExpr> fresh_boxes(int first, std::size_t count) {
  std::vector<TypeExpr> out;
  for (std::size_t q = 0; q < count; ++q)
    out.push_back(TypeExpr::var(box_name(first + static_cast<int>(q))));
  return out;
}

int count_boxes(const Dialogue& d) {
  int n = 0;
  for (std::size_t k = 0; k < d.size(); k += 2) n += static_cast<int>(d[k].label.imports.size());
  return n;
}

class Compiler {
 public:
  explicit Compiler(const TypeExpr& ty) : ts_(ty) {}

  Strategy run(const Term& t) {
    const auto boxes = fresh_boxes(0, available_quantifiers(ts_.root()).size());
    Move open{0, Label{1, boxes}};
    auto s = ts_.step(State::initial(), open.label);
    answer({open}, {*s}, t, {}, {});
    return out_;
  }

 private:
  using VarScope = std::vector<std::pair<std::string, std::pair<int, int>>>;
  using TypeScope = std::vector<std::pair<std::string, TypeExpr>>;

  // d ends with an O-move whose target is states.back(); u is the term
  // answering it.
  void answer(const Dialogue& d, const std::vector<State>& states, const Term& u,
              VarScope vars, TypeScope types) {
    const int pos = static_cast<int>(d.size());
    const auto& imports = d.back().label.imports;
    std::size_t q = 0;
    int branch = 0;
    const Term* cur = &u;
    while (true) {
      if (cur->kind() == Term::Kind::kTyAbs) {
        if (q >= imports.size()) throw InteractionError("term is not eta-long: " + u.to_string(), d);
        types.emplace_back(cur->name(), imports[q++]);
      } else if (cur->kind() == Term::Kind::kAbs) {
        vars.push_back({cur->name(), {pos, ++branch}});
      } else {
        break;
      }
      cur = &cur->body();
    }
    const ResolvedView here = resolved_view(states.back().type());
    if (q != imports.size() || static_cast<std::size_t>(branch) != here.branches.size())
      throw InteractionError("term is not eta-long: " + u.to_string(), d);

    const Spine sp = spine_of(*cur);
    std::optional<std::pair<int, int>> target;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == sp.head) {
        target = it->second;
        break;
      }
    if (!target) throw InteractionError("head is not a bound variable: " + sp.head, d);

    std::vector<std::pair<std::string, TypeExpr>> assignment;
    std::set<std::string> seen;
    for (auto it = types.rbegin(); it != types.rend(); ++it)
      if (seen.insert(it->first).second) assignment.push_back(*it);
    Label label{target->second, {}};
    std::vector<const Term*> term_args;
    for (const auto& a : sp.args) {
      if (a.is_type) {
        label.imports.push_back(substitute_all(a.type, assignment));
      } else {
        term_args.push_back(&*a.term);
      }
    }
    const Move p{target->first, label};
    auto next = ts_.step(states[static_cast<std::size_t>(target->first) - 1], label);
    if (!next) throw InteractionError("ill-typed head application in " + cur->to_string(), d);
    const ResolvedView there = resolved_view(next->type());
    if (there.branches.size() != term_args.size())
      throw InteractionError("term is not eta-long: " + cur->to_string(), d);

    Dialogue dp = d;
    dp.push_back(p);
    std::vector<State> sp_states = states;
    sp_states.push_back(*next);
    if (term_args.empty()) {
      out_.add_play(dp);
      return;
    }
    const int first = count_boxes(d);
    for (std::size_t j = 0; j < term_args.size(); ++j) {
      const auto n = available_quantifiers(there.branches[j]).size();
      Move o{pos + 1, Label{static_cast<int>(j) + 1, fresh_boxes(first, n)}};
      auto s = ts_.step(*next, o.label);
      Dialogue dq = dp;
      dq.push_back(o);
      std::vector<State> sq = sp_states;
      sq.push_back(*s);
      answer(dq, sq, *term_args[j], vars, types);
    }
  }

  TransitionSystem ts_;
  Strategy out_;
};

std::string fresh(const std::string& hint, const std::set<std::string>& avoid) {
  if (!avoid.count(hint)) return hint;
  std::string n = hint;
  while (avoid.count(n)) n += '\'';
  return n;
}

const char* const kTermNames[] = {"x", "y", "z", "w", "u", "v"};

class Reader {
 public:
  Reader(const Strategy& s, const TypeExpr& ty) : s_(s), ts_(ty) {
    for (const auto& v : free_vars(ty)) constants_.insert(v);
  }

  Term run() {
    const auto boxes = fresh_boxes(0, available_quantifiers(ts_.root()).size());
    Move open{0, Label{1, boxes}};
    if (!s_.contains({open})) throw InteractionError("strategy has no opening", {});
    auto st = ts_.step(State::initial(), open.label);
    return read({open}, {*st}, ts_.root(), {}, {});
  }

 private:
  struct VarEntry {
    std::string name;
    int pos;
    int branch;
  };

  std::string term_name(const std::vector<VarEntry>& vars) const {
    std::set<std::string> avoid;
    for (const auto& v : vars) avoid.insert(v.name);
    for (int round = 0;; ++round)
      for (const char* base : kTermNames) {
        std::string n = round ? base + std::to_string(round) : base;
        if (!avoid.count(n)) return n;
      }
  }

  // `branch_type` is the type the last O-move chose, before its imports.
  Term read(const Dialogue& d, const std::vector<State>& states, TypeExpr branch_type,
            std::vector<VarEntry> vars, std::vector<std::pair<std::string, TypeExpr>> names) {
    const int pos = static_cast<int>(d.size());
    const auto& imports = d.back().label.imports;
    struct Binder {
      bool is_type;
      std::string name;
      TypeExpr annotation;
    };
    std::vector<Binder> binders;
    std::size_t q = 0;
    int branch = 0;
    TypeExpr cur = branch_type;
    while (true) {
      if (cur.is_forall()) {
        std::set<std::string> avoid = constants_;
        for (const auto& n : names) avoid.insert(n.second.name());
        const std::string y = fresh(cur.name(), avoid);
        names.emplace_back(imports[q].name(), TypeExpr::var(y));
        binders.push_back({true, y, {}});
        cur = detail::open(cur.body(), imports[q++]);
      } else if (cur.is_arrow()) {
        const std::string x = term_name(vars);
        vars.push_back({x, pos, ++branch});
        binders.push_back({false, x, substitute_all(cur.domain(), names)});
        cur = cur.codomain();
      } else {
        break;
      }
    }

    auto p = s_.respond(d);
    if (!p) throw InteractionError("strategy has no response", d);
    const VarEntry* head = nullptr;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->pos == p->back_ref && it->branch == p->label.branch) {
        head = &*it;
        break;
      }
    if (!head) throw InteractionError("response does not point at an Opponent branch", d);
    const State& from = states[static_cast<std::size_t>(p->back_ref) - 1];
    auto next = ts_.step(from, p->label);
    if (!next) throw InteractionError("response is not a move of the game", d);
    const ResolvedView there = resolved_view(next->type());
    if (there.head != resolved_view(states.back().type()).head)
      throw InteractionError("strategy is not copycat", d);

    const TypeExpr head_type =
        resolved_view(from.type()).branches[static_cast<std::size_t>(p->label.branch) - 1];
    Term body = Term::var(head->name);
    Dialogue dp = d;
    dp.push_back(*p);
    std::vector<State> sp_states = states;
    sp_states.push_back(*next);
    const int first = count_boxes(d);
    std::size_t ti = 0;
    int tj = 0;
    for (SpineStep step : spine_steps(head_type, p->label.imports)) {
      if (step == SpineStep::kType) {
        body = Term::tyapp(body, substitute_all(p->label.imports[ti++], names));
        continue;
      }
      const TypeExpr& bt = there.branches[static_cast<std::size_t>(tj)];
      Move o{pos + 1, Label{++tj, fresh_boxes(first, available_quantifiers(bt).size())}};
      Dialogue dq = dp;
      dq.push_back(o);
      if (!s_.contains(dq)) throw InteractionError("strategy is not total on a stimulus", dq);
      std::vector<State> sq = sp_states;
      sq.push_back(*ts_.step(*next, o.label));
      body = Term::app(body, read(dq, sq, bt, vars, names));
    }
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      body = it->is_type ? Term::tyabs(it->name, body)
                         : Term::abs(it->name, it->annotation, body);
    return body;
  }

  const Strategy& s_;
  TransitionSystem ts_;
  std::set<std::string> constants_;
};

}  // namespace

Strategy term_to_strategy(const Term& t, const TypeExpr& ty) {
  const TypeExpr actual = typecheck(t);
  if (actual != ty)
    throw TermTypeError("term has type " + actual.to_string() + ", expected " + ty.to_string());
  return Compiler(ty).run(eta_long(t, ty));
}

Term strategy_to_term(const Strategy& s, const TypeExpr& ty) {
  return Reader(s, ty).run();
}

}  // namespace hypergame
