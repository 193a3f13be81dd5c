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

// The interaction engine behind composition and instantiation.
//
// Every participant sees its own game. Types imported into it by the other
// side are abstracted to fresh boxes, and the box-to-type environment travels
// with the participant's view. When a type behind a box is itself an arrow or
// a quantifier, the concrete game has branches the participant cannot see.
// Moves landing there are forwarded by copycat: a participant's P-move ends
// in the same box as the O-move it answers, so the hidden branches of the two
// coincide and a move in one is copied to the other verbatim.

#include <algorithm>
#include <limits>
#include <memory>

#include "hypergame/semantics.hpp"

namespace hypergame {

namespace {

struct Link {
  int target = -1;  // local move the hidden branches are copied to
  int offset_p = 0;
  int offset_o = 0;
};

struct LocalMove {
  int event = -1;
  bool own = false;
  bool copy = false;
  int justifier = -1;  // local index, -1 for the opening
  Label label;
  std::optional<State> state;
  int view_parent = -1;
  int view_pos = 0;
  int box_count = 0;
  std::vector<std::pair<std::string, TypeExpr>> boxes;
  std::vector<TypeExpr> suffix;  // imports consumed beyond the local game
  std::size_t branches = 0;
  Link link;
};

struct Participant {
  std::vector<LocalMove> moves;
  std::map<int, int> by_event;
};

struct Event {
  Party mover;
  Party receiver;
  int justifier;  // -1 when the move opens the receiver's game
  Label label;    // in the receiver's frame
};

struct World {
  std::vector<Event> events;
  Participant fun;
  Participant arg;
  Dialogue ext_play;
  std::vector<State> ext_states;
  std::vector<int> ext_events;  // event of each ext position
  std::vector<TypeExpr> root_imports;
  int ext_boxes = 0;
};

enum class Op { kCompose, kInstantiate };

class Engine {
 public:
  Engine(Op op, const ContextShape& ctx, const InteractionOptions& options,
         const TypeExpr& result_type, std::size_t max_length, Transcript* transcript)
      : op_(op), ctx_(ctx), options_(options), result_(result_type),
        max_length_(max_length), transcript_(transcript) {}

  void set_fun(const Strategy& s, const TypeExpr& ty) {
    fun_s_ = &s;
    fun_ts_ = std::make_unique<TransitionSystem>(ty);
  }
  void set_arg(const Strategy& s, const TypeExpr& ty) {
    arg_s_ = &s;
    arg_ts_ = std::make_unique<TransitionSystem>(ty);
  }
  void set_instance(TypeExpr v) { v_ = std::move(v); }

  Strategy run() {
    World w;
    const auto k = available_quantifiers(result_.root()).size();
    Label open{1, {}};
    for (std::size_t q = 0; q < k; ++q) open.imports.push_back(TypeExpr::var(box_name(static_cast<int>(q))));
    w.ext_boxes = static_cast<int>(k);
    w.root_imports = open.imports;
    w.ext_play.push_back(Move{0, open});
    w.ext_states.push_back(*result_.step(State::initial(), open));

    Label fun_open{1, {}};
    if (op_ == Op::kCompose) {
      fun_open = open;
    } else {
      const std::size_t c = ctx_.type_vars.size();
      std::vector<std::pair<std::string, TypeExpr>> env;
      for (std::size_t i = 0; i < c; ++i) env.emplace_back(ctx_.type_vars[i], open.imports[i]);
      fun_open.imports.assign(open.imports.begin(), open.imports.begin() + static_cast<long>(c));
      fun_open.imports.push_back(substitute_all(*v_, env));
      fun_open.imports.insert(fun_open.imports.end(), open.imports.begin() + static_cast<long>(c),
                              open.imports.end());
    }
    const int e0 = add_event(w, Event{Party::kExternal, Party::kFunction, -1, fun_open});
    w.ext_events.push_back(e0);
    drive(w, e0);
    explore(w);
    return out_;
  }

 private:
  Participant& part(World& w, Party p) { return p == Party::kFunction ? w.fun : w.arg; }
  const Strategy& strat(Party p) const { return p == Party::kFunction ? *fun_s_ : *arg_s_; }
  const TransitionSystem& sys(Party p) const { return p == Party::kFunction ? *fun_ts_ : *arg_ts_; }

  std::vector<TranscriptEntry> log(const World& w) const {
    std::vector<TranscriptEntry> out;
    for (const auto& e : w.events) out.push_back({e.mover, e.justifier + 1, e.label});
    return out;
  }

  int add_event(World& w, Event e) {
    if (++steps_ > options_.budget) {
      w.events.push_back(std::move(e));
      throw BudgetExceeded(options_.budget, log(w));
    }
    w.events.push_back(std::move(e));
    return static_cast<int>(w.events.size()) - 1;
  }

  // Passes moves between the participants until one reaches the outside.
  void drive(World& w, int e) {
    while (w.events[static_cast<std::size_t>(e)].receiver != Party::kExternal)
      e = respond(w, w.events[static_cast<std::size_t>(e)].receiver, e);
    receive_external(w, e);
  }

  void receive_external(World& w, int e) {
    const Event& ev = w.events[static_cast<std::size_t>(e)];
    int pos = 0;
    for (std::size_t i = 0; i < w.ext_events.size(); ++i)
      if (w.ext_events[i] == ev.justifier) pos = static_cast<int>(i) + 1;
    if (pos == 0) throw InteractionError("move escapes to an unknown position", w.ext_play);
    auto next = result_.step(w.ext_states[static_cast<std::size_t>(pos) - 1], ev.label);
    Dialogue d = w.ext_play;
    d.push_back(Move{pos, ev.label});
    if (!next) throw InteractionError("interaction produced an ill-typed move", d);
    w.ext_play = std::move(d);
    w.ext_states.push_back(*next);
    w.ext_events.push_back(e);
  }

  void explore(World& w) {
    const ResolvedView here = resolved_view(w.ext_states.back().type());
    if (here.branches.empty() || (max_length_ && w.ext_play.size() + 2 > max_length_)) {
      out_.add_play(w.ext_play);
      if (transcript_) transcript_->push_back(log(w));
      return;
    }
    const int last = static_cast<int>(w.ext_play.size());
    const int last_event = w.ext_events.back();
    for (std::size_t j = 0; j < here.branches.size(); ++j) {
      World v = w;
      Label l{static_cast<int>(j) + 1, {}};
      const auto k = available_quantifiers(here.branches[j]).size();
      for (std::size_t q = 0; q < k; ++q) l.imports.push_back(TypeExpr::var(box_name(v.ext_boxes++)));
      v.ext_play.push_back(Move{last, l});
      v.ext_states.push_back(*result_.step(w.ext_states.back(), l));
      const Party to = w.events[static_cast<std::size_t>(last_event)].mover;
      const int e = add_event(v, Event{Party::kExternal, to, last_event, l});
      v.ext_events.push_back(e);
      drive(v, e);
      explore(v);
    }
  }

  std::vector<std::pair<std::string, TypeExpr>> env(const Participant& p, int idx) const {
    std::vector<std::pair<std::string, TypeExpr>> out;
    for (int i = idx; i >= 0; i = p.moves[static_cast<std::size_t>(i)].view_parent)
      for (const auto& b : p.moves[static_cast<std::size_t>(i)].boxes) out.push_back(b);
    return out;
  }

  Dialogue view(const Participant& p, int idx, std::vector<int>& ids) const {
    ids.clear();
    for (int i = idx; i >= 0; i = p.moves[static_cast<std::size_t>(i)].view_parent) ids.push_back(i);
    std::reverse(ids.begin(), ids.end());
    Dialogue d;
    for (int i : ids) {
      const LocalMove& m = p.moves[static_cast<std::size_t>(i)];
      int back = 0;
      if (m.justifier >= 0) {
        back = p.moves[static_cast<std::size_t>(m.justifier)].view_pos;
        if (back < 1 || ids[static_cast<std::size_t>(back) - 1] != m.justifier)
          throw InteractionError("strategy points outside its view", d);
      }
      d.push_back(Move{back, m.label});
    }
    return d;
  }

  bool typed() const { return !options_.untyped; }

  // Receives event e into participant `who`, answers it, and returns the
  // answering event.
  int respond(World& w, Party who, int e) {
    Participant& p = part(w, who);
    const Event ev = w.events[static_cast<std::size_t>(e)];
    const TransitionSystem& ts = sys(who);
    LocalMove m;
    m.event = e;
    const int idx = static_cast<int>(p.moves.size());

    if (ev.justifier < 0) {
      const auto k = typed() ? available_quantifiers(ts.root()).size() : 0;
      absorb(m, ts, State::initial(), 1, ev.label.imports, k, 0);
      m.view_pos = 1;
    } else {
      const int j = p.by_event.at(ev.justifier);
      const LocalMove& jm = p.moves[static_cast<std::size_t>(j)];
      if (jm.copy || static_cast<std::size_t>(ev.label.branch) > jm.branches) {
        const Link link = jm.link;
        m.copy = true;
        m.justifier = j;
        p.moves.push_back(m);
        p.by_event[e] = idx;
        LocalMove c;
        c.own = true;
        c.copy = true;
        c.justifier = link.target;
        c.link = Link{idx, 0, 0};
        const int branch = link.offset_o + (ev.label.branch - link.offset_p);
        return emit(w, who, std::move(c), branch, ev.label.imports);
      }
      std::size_t k = 0;
      if (typed()) {
        const auto bt = resolved_view(jm.state->type()).branches[static_cast<std::size_t>(ev.label.branch) - 1];
        k = available_quantifiers(bt).size();
      }
      absorb(m, ts, typed() ? *jm.state : State::initial(), ev.label.branch, ev.label.imports, k,
             jm.box_count);
      m.justifier = j;
      m.view_parent = j;
      m.view_pos = jm.view_pos + 1;
    }
    p.moves.push_back(m);
    p.by_event[e] = idx;

    std::vector<int> ids;
    const Dialogue d = view(p, idx, ids);
    auto r = strat(who).respond(d);
    if (!r) throw InteractionError(std::string(party_name(who)) + " strategy has no response", d);
    if (r->back_ref < 1 || r->back_ref > static_cast<int>(ids.size()))
      throw InteractionError("response points outside the view", d);
    LocalMove a;
    a.own = true;
    a.justifier = ids[static_cast<std::size_t>(r->back_ref) - 1];
    a.label = r->label;
    a.view_parent = idx;
    a.view_pos = m.view_pos + 1;
    a.box_count = m.box_count;
    std::vector<TypeExpr> imports;
    if (typed()) {
      const LocalMove& jm = p.moves[static_cast<std::size_t>(a.justifier)];
      a.state = ts.step(*jm.state, a.label);
      if (!a.state) throw InteractionError("response is not a move of the game", d);
      const ResolvedView rv = resolved_view(a.state->type());
      if (rv.head != resolved_view(m.state->type()).head)
        throw InteractionError(std::string(party_name(who)) + " strategy is not copycat", d);
      a.branches = rv.branches.size();
      a.link = Link{idx, static_cast<int>(a.branches), static_cast<int>(m.branches)};
      const auto e_env = env(p, idx);
      for (const auto& t : a.label.imports) imports.push_back(substitute_all(t, e_env));
      imports.insert(imports.end(), m.suffix.begin(), m.suffix.end());
    } else {
      a.branches = std::numeric_limits<std::size_t>::max();
    }
    const int branch = a.label.branch;
    return emit(w, who, std::move(a), branch, imports);
  }

  // Abstracts the first k concrete imports to fresh local boxes.
  void absorb(LocalMove& m, const TransitionSystem& ts, const State& from, int branch,
              const std::vector<TypeExpr>& concrete, std::size_t k, int box_count) const {
    m.label.branch = branch;
    m.box_count = box_count;
    if (!typed()) {
      m.branches = std::numeric_limits<std::size_t>::max();
      return;
    }
    if (concrete.size() < k) throw InteractionError("too few imports for the local game");
    for (std::size_t q = 0; q < k; ++q) {
      const std::string b = box_name(box_count + static_cast<int>(q));
      m.label.imports.push_back(TypeExpr::var(b));
      m.boxes.emplace_back(b, concrete[q]);
    }
    m.box_count += static_cast<int>(k);
    m.suffix.assign(concrete.begin() + static_cast<long>(k), concrete.end());
    m.state = ts.step(from, m.label);
    if (!m.state) throw InteractionError("received move is not in the local game");
    m.branches = resolved_view(m.state->type()).branches.size();
  }

  // Sends a P-move of `who` (local branch numbering) to whoever sits behind
  // its justifier.
  int emit(World& w, Party who, LocalMove a, int branch, std::vector<TypeExpr> imports) {
    Participant& p = part(w, who);
    const LocalMove& jm = p.moves[static_cast<std::size_t>(a.justifier)];
    Event ev{who, Party::kExternal, -1, Label{branch, std::move(imports)}};
    const int root_event = w.ext_events.front();
    if (jm.justifier >= 0 || jm.own) {
      ev.receiver = w.events[static_cast<std::size_t>(jm.event)].mover;
      ev.justifier = jm.event;
    } else if (op_ == Op::kInstantiate) {
      ev.justifier = root_event;
    } else {
      const int g = ctx_.term_vars;
      if (who == Party::kFunction) {
        ev.justifier = root_event;
        if (branch == g + 1) {
          ev.receiver = Party::kArgument;
          ev.justifier = -1;
          ev.label.branch = 1;
          const auto c = static_cast<long>(ctx_.type_vars.size());
          std::vector<TypeExpr> all(w.root_imports.begin(), w.root_imports.begin() + c);
          all.insert(all.end(), ev.label.imports.begin(), ev.label.imports.end());
          ev.label.imports = std::move(all);
        } else if (branch > g + 1) {
          ev.label.branch = branch - 1;
        }
      } else if (branch <= g) {
        ev.justifier = root_event;
      } else {
        ev.receiver = Party::kFunction;
        ev.justifier = jm.event;
        ev.label.branch = branch - g;
      }
    }
    const int idx = static_cast<int>(p.moves.size());
    const int e = add_event(w, std::move(ev));
    a.event = e;
    p.moves.push_back(std::move(a));
    p.by_event[e] = idx;
    return e;
  }

  Op op_;
  ContextShape ctx_;
  InteractionOptions options_;
  TransitionSystem result_;
  std::size_t max_length_;
  Transcript* transcript_;
  const Strategy* fun_s_ = nullptr;
  const Strategy* arg_s_ = nullptr;
  std::unique_ptr<TransitionSystem> fun_ts_;
  std::unique_ptr<TransitionSystem> arg_ts_;
  std::optional<TypeExpr> v_;
  std::size_t steps_ = 0;
  Strategy out_;
};

}  // namespace

Strategy compose_in_context(const ContextShape& ctx, const Strategy& fun,
                            const TypeExpr& fun_type, const Strategy& arg,
                            const TypeExpr& arg_type, const TypeExpr& result_type,
                            const InteractionOptions& options, Transcript* transcript) {
  Engine engine(Op::kCompose, ctx, options, result_type, 0, transcript);
  engine.set_fun(fun, fun_type);
  engine.set_arg(arg, arg_type);
  return engine.run();
}

Strategy compose(const Strategy& fun, const TypeExpr& fun_type, const Strategy& arg,
                 const TypeExpr& arg_type, const InteractionOptions& options,
                 Transcript* transcript) {
  if (!fun_type.is_arrow() || fun_type.domain() != arg_type)
    throw TypeError("cannot compose " + fun_type.to_string() + " with " + arg_type.to_string());
  return compose_in_context({}, fun, fun_type, arg, arg_type, fun_type.codomain(), options,
                            transcript);
}

Strategy instantiate_in_context(const ContextShape& ctx, const Strategy& s,
                                const TypeExpr& type, const TypeExpr& v,
                                const TypeExpr& result_type,
                                const InteractionOptions& options, Transcript* transcript) {
  Engine engine(Op::kInstantiate, ctx, options, result_type, 0, transcript);
  engine.set_fun(s, type);
  engine.set_instance(v);
  return engine.run();
}

Strategy instantiate(const Strategy& s, const TypeExpr& type, const TypeExpr& v,
                     const InteractionOptions& options, Transcript* transcript) {
  if (!type.is_forall()) throw TypeError("cannot instantiate " + type.to_string());
  return instantiate_in_context({}, s, type, v, detail::open(type.body(), v), options,
                                transcript);
}

}  // namespace hypergame
