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

// Typing, normalization, η-expansion and enumeration of normal forms.

#include <algorithm>
#include <functional>

#include "hypergame/term.hpp"

namespace hypergame {

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += "'";
  return n;
}

const TypeExpr* lookup(const Context& ctx, const std::string& x) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (it->first == x) return &it->second;
  return nullptr;
}

std::set<std::string> context_type_vars(const Context& ctx) {
  std::set<std::string> out;
  for (const auto& [x, t] : ctx)
    for (const auto& v : free_vars(t)) out.insert(v);
  return out;
}

std::string short_text(const Term& t) {
  std::string s = t.to_string();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

}  // namespace

TypeExpr typecheck(const Context& ctx, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      if (const TypeExpr* ty = lookup(ctx, t.name())) return *ty;
      throw TermTypeError("unbound variable " + t.name());
    }
    case Term::Kind::kAbs: {
      Context inner = ctx;
      inner.emplace_back(t.name(), t.annotation());
      return TypeExpr::arrow(t.annotation(), typecheck(inner, t.body()));
    }
    case Term::Kind::kApp: {
      const TypeExpr f = typecheck(ctx, t.fun());
      if (!f.is_arrow())
        throw TermTypeError("applying a non-function of type " + f.to_string() +
                            " in " + short_text(t));
      const TypeExpr a = typecheck(ctx, t.arg());
      if (a != f.domain())
        throw TermTypeError("argument of type " + a.to_string() + " where " +
                            f.domain().to_string() + " is expected in " + short_text(t));
      return f.codomain();
    }
    case Term::Kind::kTyAbs: {
      const auto taken = context_type_vars(ctx);
      if (!taken.count(t.name()))
        return TypeExpr::forall(t.name(), typecheck(ctx, t.body()));
      std::set<std::string> avoid = taken;
      for (const auto& v : free_type_vars(t.body())) avoid.insert(v);
      const std::string y = fresh_name(t.name(), avoid);
      const Term body = subst_type(t.body(), t.name(), TypeExpr::var(y));
      return TypeExpr::forall(y, typecheck(ctx, body));
    }
    case Term::Kind::kTyApp: {
      const TypeExpr f = typecheck(ctx, t.fun());
      if (!f.is_forall())
        throw TermTypeError("type application to a term of type " + f.to_string() +
                            " in " + short_text(t));
      return detail::open(f.body(), t.type_arg());
    }
  }
  throw TermTypeError("unknown term");
}

Term beta_normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t;
    case Term::Kind::kAbs:
      return Term::abs(t.name(), t.annotation(), beta_normalize(t.body()));
    case Term::Kind::kTyAbs:
      return Term::tyabs(t.name(), beta_normalize(t.body()));
    case Term::Kind::kApp: {
      Term f = beta_normalize(t.fun());
      if (f.kind() == Term::Kind::kAbs)
        return beta_normalize(subst_term(f.body(), f.name(), t.arg()));
      return Term::app(f, beta_normalize(t.arg()));
    }
    case Term::Kind::kTyApp: {
      Term f = beta_normalize(t.fun());
      if (f.kind() == Term::Kind::kTyAbs)
        return beta_normalize(subst_type(f.body(), f.name(), t.type_arg()));
      return Term::tyapp(f, t.type_arg());
    }
  }
  return t;
}

Spine spine_of(const Term& t) {
  Spine s;
  const Term* cur = &t;
  while (cur->kind() == Term::Kind::kApp || cur->kind() == Term::Kind::kTyApp) {
    Spine::Arg a;
    if (cur->kind() == Term::Kind::kApp) {
      a.term = cur->arg();
    } else {
      a.is_type = true;
      a.type = cur->type_arg();
    }
    s.args.push_back(std::move(a));
    cur = &cur->fun();
  }
  if (cur->kind() != Term::Kind::kVar)
    throw TermTypeError("not a neutral term: " + short_text(t));
  s.head = cur->name();
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

namespace {

std::set<std::string> term_names(const Term& t, const Context& ctx) {
  std::set<std::string> out = free_term_vars(t);
  for (const auto& [x, ty] : ctx) out.insert(x);
  return out;
}

Term eta(const Term& t, const TypeExpr& ty, const Context& ctx) {
  if (ty.is_forall()) {
    std::set<std::string> avoid = context_type_vars(ctx);
    for (const auto& v : free_vars(ty)) avoid.insert(v);
    if (t.kind() == Term::Kind::kTyAbs) {
      std::string y = t.name();
      Term body = t.body();
      if (avoid.count(y)) {
        for (const auto& v : free_type_vars(body)) avoid.insert(v);
        y = fresh_name(y, avoid);
        body = subst_type(body, t.name(), TypeExpr::var(y));
      }
      return Term::tyabs(y, eta(body, detail::open(ty.body(), TypeExpr::var(y)), ctx));
    }
    for (const auto& v : free_type_vars(t)) avoid.insert(v);
    const std::string y = fresh_name(ty.name().empty() ? "X" : ty.name(), avoid);
    const TypeExpr yv = TypeExpr::var(y);
    return Term::tyabs(y, eta(Term::tyapp(t, yv), detail::open(ty.body(), yv), ctx));
  }
  if (ty.is_arrow()) {
    if (t.kind() == Term::Kind::kAbs) {
      if (t.annotation() != ty.domain())
        throw TermTypeError("annotation " + t.annotation().to_string() +
                            " does not match " + ty.domain().to_string());
      Context inner = ctx;
      inner.emplace_back(t.name(), t.annotation());
      return Term::abs(t.name(), t.annotation(), eta(t.body(), ty.codomain(), inner));
    }
    const std::string x = fresh_name("x", term_names(t, ctx));
    Context inner = ctx;
    inner.emplace_back(x, ty.domain());
    return Term::abs(x, ty.domain(),
                     eta(Term::app(t, Term::var(x)), ty.codomain(), inner));
  }
  const Spine s = spine_of(t);
  const TypeExpr* head = lookup(ctx, s.head);
  if (!head) throw TermTypeError("unbound variable " + s.head);
  TypeExpr cur = *head;
  Term out = Term::var(s.head);
  for (const auto& a : s.args) {
    if (a.is_type) {
      if (!cur.is_forall()) throw TermTypeError("type application mismatch in " + short_text(t));
      cur = detail::open(cur.body(), a.type);
      out = Term::tyapp(out, a.type);
    } else {
      if (!cur.is_arrow()) throw TermTypeError("application mismatch in " + short_text(t));
      out = Term::app(out, eta(*a.term, cur.domain(), ctx));
      cur = cur.codomain();
    }
  }
  if (cur != ty)
    throw TermTypeError("term " + short_text(t) + " has type " + cur.to_string() +
                        ", expected " + ty.to_string());
  return out;
}

}  // namespace

Term eta_long(const Term& t, const TypeExpr& ty, const Context& ctx) {
  return eta(t, ty, ctx);
}

namespace {

class NormalEnumerator {
 public:
  explicit NormalEnumerator(std::vector<std::string> type_scope)
      : type_scope_(std::move(type_scope)) {}

  std::vector<Term> gen(const Context& ctx, const TypeExpr& ty, std::size_t budget) {
    std::vector<Term> out;
    if (budget == 0) return out;
    if (ty.is_forall()) {
      std::set<std::string> avoid = context_type_vars(ctx);
      avoid.insert(type_scope_.begin(), type_scope_.end());
      for (const auto& v : free_vars(ty)) avoid.insert(v);
      const std::string y = fresh_name(ty.name().empty() ? "X" : ty.name(), avoid);
      type_scope_.push_back(y);
      for (auto& b : gen(ctx, detail::open(ty.body(), TypeExpr::var(y)), budget - 1))
        out.push_back(Term::tyabs(y, std::move(b)));
      type_scope_.pop_back();
      return out;
    }
    if (ty.is_arrow()) {
      const std::string x = next_term_name(ctx);
      Context inner = ctx;
      inner.emplace_back(x, ty.domain());
      for (auto& b : gen(inner, ty.codomain(), budget - 1))
        out.push_back(Term::abs(x, ty.domain(), std::move(b)));
      return out;
    }
    std::set<std::string> shadowed;
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
      if (!shadowed.insert(it->first).second) continue;
      spine(ctx, ty, Term::var(it->first), 1, it->second, budget, out);
    }
    return out;
  }

 private:
  void spine(const Context& ctx, const TypeExpr& goal, const Term& acc, std::size_t used,
             const TypeExpr& cur, std::size_t budget, std::vector<Term>& out) {
    if (used > budget) return;
    if (cur.is_var()) {
      if (cur == goal) out.push_back(acc);
      return;
    }
    if (used + 2 > budget) return;
    if (cur.is_arrow()) {
      for (auto& a : gen(ctx, cur.domain(), budget - used - 1)) {
        const std::size_t s = used + 1 + a.size();
        spine(ctx, goal, Term::app(acc, std::move(a)), s, cur.codomain(), budget, out);
      }
      return;
    }
    for (const auto& v : enumerate_types(type_scope_, budget - used - 1)) {
      const std::size_t s = used + 1 + v.size();
      spine(ctx, goal, Term::tyapp(acc, v), s, detail::open(cur.body(), v), budget, out);
    }
  }

  static std::string next_term_name(const Context& ctx) {
    static const char* kNames[] = {"x", "y", "z", "w", "u", "v"};
    std::set<std::string> avoid;
    for (const auto& [x, t] : ctx) avoid.insert(x);
    const std::size_t n = ctx.size();
    const std::string base = n < 6 ? kNames[n] : "x" + std::to_string(n);
    return fresh_name(base, avoid);
  }

  std::vector<std::string> type_scope_;
};

}  // namespace

std::vector<Term> enumerate_normal_terms(const TypeExpr& ty, std::size_t size_bound,
                                         const Context& ctx) {
  std::set<std::string> free = context_type_vars(ctx);
  for (const auto& v : free_vars(ty)) free.insert(v);
  NormalEnumerator e(std::vector<std::string>(free.begin(), free.end()));
  auto out = e.gen(ctx, ty, size_bound);
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_string() < b.to_string();
  });
  return out;
}

}  // namespace hypergame
