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

#include <algorithm>
#include <set>
#include <sstream>

#include "hypergame/semantics.hpp"

namespace hypergame {

namespace {

const TypeExpr* assigned(const std::map<std::string, TypeExpr>& a, int slot) {
  auto it = a.find(box_name(slot));
  return it == a.end() ? nullptr : &it->second;
}

TypeExpr expand(const TypeExpr& t, int& slot, const std::map<std::string, TypeExpr>& a) {
  if (t.is_arrow()) return TypeExpr::arrow(t.domain(), expand(t.codomain(), slot, a));
  if (!t.is_forall()) return t;
  const int me = slot++;
  const std::string name = box_name(me);
  const TypeExpr body = expand(detail::open(t.body(), TypeExpr::var(name)), slot, a);
  if (const TypeExpr* v = assigned(a, me)) return substitute_raw(body, name, *v);
  std::string hint = t.name();
  const auto used = free_vars(body);
  while (used.count(hint)) hint += '\'';
  return TypeExpr::forall(hint, substitute_raw(body, name, TypeExpr::var(hint)));
}

int slot_of(const std::string& box) {
  if (box.size() < 2 || box[0] != 'B' ||
      !std::all_of(box.begin() + 1, box.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return -1;
  return std::stoi(box.substr(1));
}

}  // namespace

TypeExpr expanded_type(const TypeExpr& ty, const std::map<std::string, TypeExpr>& assignment) {
  int slot = 0;
  return expand(ty, slot, assignment);
}

Strategy copycat_expand(const TransitionSystem& ts, const Strategy& s,
                        const std::map<std::string, TypeExpr>& assignment, int depth) {
  const int opening = static_cast<int>(available_quantifiers(ts.root()).size());
  std::vector<int> slots;
  for (const auto& [box, v] : assignment) {
    const int j = slot_of(box);
    if (j < 0 || j >= opening)
      throw DialogueError(box + " is not a black box of the opening move");
    slots.push_back(j);
  }
  std::sort(slots.rbegin(), slots.rend());
  TypeExpr cur = ts.root();
  Strategy out = s;
  for (int j : slots) {
    ContextShape ctx;
    for (int i = 0; i < j; ++i) ctx.type_vars.push_back(box_name(i));
    const TypeExpr& v = assignment.at(box_name(j));
    const TypeExpr next = expanded_type(cur, {{box_name(j), v}});
    out = instantiate_in_context(ctx, out, cur, v, next);
    cur = next;
  }
  if (depth <= 0) return out;
  Strategy cut;
  for (const auto& d : out.plays())
    if (static_cast<int>(d.size()) <= depth) cut.add_play(d);
  return cut;
}

namespace {

// Context entries of the interpretation: type variables and typed term
// variables, outermost first.
struct Entry {
  bool is_type;
  std::string name;
  TypeExpr type;
};
using Env = std::vector<Entry>;

TypeExpr closure(const Env& env, TypeExpr body) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    body = it->is_type ? TypeExpr::forall(it->name, body) : TypeExpr::arrow(it->type, body);
  return body;
}

Term close_term(const Env& env, Term body) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    body = it->is_type ? Term::tyabs(it->name, body) : Term::abs(it->name, it->type, body);
  return body;
}

Context term_context(const Env& env) {
  Context ctx;
  for (const auto& e : env)
    if (!e.is_type) ctx.emplace_back(e.name, e.type);
  return ctx;
}

ContextShape shape(const Env& env) {
  ContextShape s;
  for (const auto& e : env) {
    if (e.is_type) {
      s.type_vars.push_back(e.name);
    } else {
      ++s.term_vars;
    }
  }
  return s;
}

// Gives every binder a distinct name so that contexts never shadow.
class Renamer {
 public:
  Term run(const Term& t) { return go(t, {}, {}); }

 private:
  using Map = std::vector<std::pair<std::string, std::string>>;

  static std::string find(const Map& m, const std::string& x) {
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      if (it->first == x) return it->second;
    return x;
  }
  static TypeExpr retype(const TypeExpr& t, const Map& ty) {
    std::vector<std::pair<std::string, TypeExpr>> a;
    std::set<std::string> seen;
    for (auto it = ty.rbegin(); it != ty.rend(); ++it)
      if (seen.insert(it->first).second) a.emplace_back(it->first, TypeExpr::var(it->second));
    return substitute_all(t, a);
  }

  Term go(const Term& t, Map tm, Map ty) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return Term::var(find(tm, t.name()));
      case Term::Kind::kAbs: {
        const std::string x = "x#" + std::to_string(next_++);
        const TypeExpr a = retype(t.annotation(), ty);
        tm.emplace_back(t.name(), x);
        return Term::abs(x, a, go(t.body(), tm, ty));
      }
      case Term::Kind::kTyAbs: {
        const std::string y = "T#" + std::to_string(next_++);
        ty.emplace_back(t.name(), y);
        return Term::tyabs(y, go(t.body(), tm, ty));
      }
      case Term::Kind::kApp:
        return Term::app(go(t.fun(), tm, ty), go(t.arg(), tm, ty));
      case Term::Kind::kTyApp:
        return Term::tyapp(go(t.fun(), tm, ty), retype(t.type_arg(), ty));
    }
    return t;
  }

  int next_ = 0;
};

class Interpreter {
 public:
  Interpreter(const InteractionOptions& options, Transcript* transcript)
      : options_(options), transcript_(transcript) {}

  Strategy run(Env& env, const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar: {
        const TypeExpr ty = typecheck(term_context(env), t);
        return term_to_strategy(close_term(env, t), closure(env, ty));
      }
      case Term::Kind::kAbs: {
        env.push_back({false, t.name(), t.annotation()});
        Strategy s = run(env, t.body());
        env.pop_back();
        return s;
      }
      case Term::Kind::kTyAbs: {
        env.push_back({true, t.name(), {}});
        Strategy s = run(env, t.body());
        env.pop_back();
        return s;
      }
      case Term::Kind::kApp: {
        const TypeExpr f = typecheck(term_context(env), t.fun());
        const Strategy sf = run(env, t.fun());
        const Strategy sa = run(env, t.arg());
        return compose_in_context(shape(env), sf, closure(env, f), sa, closure(env, f.domain()),
                                  closure(env, f.codomain()), options_, transcript_);
      }
      case Term::Kind::kTyApp: {
        const TypeExpr f = typecheck(term_context(env), t.fun());
        const Strategy sf = run(env, t.fun());
        const TypeExpr result = detail::open(f.body(), t.type_arg());
        return instantiate_in_context(shape(env), sf, closure(env, f), t.type_arg(),
                                      closure(env, result), options_, transcript_);
      }
    }
    throw InteractionError("unknown term form");
  }

 private:
  InteractionOptions options_;
  Transcript* transcript_;
};

}  // namespace

Term normalize_via_games(const Term& t, const InteractionOptions& options, Transcript* transcript) {
  const TypeExpr ty = typecheck(t);
  const Term renamed = Renamer().run(t);
  Env env;
  const Strategy s = Interpreter(options, transcript).run(env, renamed);
  return strategy_to_term(s, ty);
}

std::string BijectionReport::summary() const {
  std::ostringstream os;
  os << "terms: " << terms.size();
  if (mode == Mode::kBlackBox) {
    os << ", strategies: " << strategies.size();
  } else {
    os << ", strategies(live): " << live_strategies << ", copycat: " << strategies.size();
  }
  if (terms.empty() && strategies.empty() && live_strategies == 0 && ok()) return os.str();
  os << ", bijection: " << (ok() ? "OK" : "FAILED");
  if (truncated_terms || truncated_strategies)
    os << " (beyond bounds: " << truncated_terms << " terms, " << truncated_strategies
       << " strategies)";
  return os.str();
}

BijectionReport check_bijection(const TypeExpr& ty, std::size_t term_size_bound, int depth_bound,
                                const MoveOptions& moves) {
  BijectionReport r;
  r.type = ty;
  r.mode = game_mode(ty);
  r.term_size_bound = term_size_bound;
  r.depth_bound = depth_bound;
  const TransitionSystem ts(ty);

  EnumerationOptions eo;
  eo.mode = r.mode;
  eo.depth_bound = depth_bound;
  eo.moves = moves;
  eo.require_copycat = true;
  r.strategies = enumerate_strategies(ts, eo);
  if (r.mode == Mode::kBlackBox) {
    r.live_strategies = r.strategies.size();
  } else {
    eo.require_copycat = false;
    r.live_strategies = enumerate_strategies(ts, eo).size();
  }
  r.terms = enumerate_normal_terms(ty, term_size_bound);

  std::set<std::vector<std::string>> strategy_keys;
  for (const auto& s : r.strategies) strategy_keys.insert(s.keys());

  for (const auto& t : r.terms) {
    try {
      const Strategy s = term_to_strategy(t, ty);
      if (static_cast<int>(s.depth()) > depth_bound) {
        ++r.truncated_terms;
        continue;
      }
      if (!strategy_keys.count(s.keys()))
        r.failures.push_back("term " + t.to_string() + " has no enumerated strategy");
      else if (strategy_to_term(s, ty) != t)
        r.failures.push_back("term " + t.to_string() + " does not round-trip");
    } catch (const std::exception& e) {
      r.failures.push_back("term " + t.to_string() + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < r.strategies.size(); ++i) {
    const Strategy& s = r.strategies[i];
    try {
      const Term t = strategy_to_term(s, ty);
      if (t.size() > term_size_bound) {
        ++r.truncated_strategies;
        continue;
      }
      bool found = false;
      for (const auto& u : r.terms) found = found || u == t;
      if (!found)
        r.failures.push_back("strategy #" + std::to_string(i + 1) + " reads back to " +
                             t.to_string() + ", which was not enumerated");
      else if (term_to_strategy(t, ty) != s)
        r.failures.push_back("strategy #" + std::to_string(i + 1) + " does not round-trip");
    } catch (const std::exception& e) {
      r.failures.push_back("strategy #" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return r;
}

}  // namespace hypergame
