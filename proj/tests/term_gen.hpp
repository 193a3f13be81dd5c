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

// Random well-typed System F terms with β-redexes of both kinds.

#ifndef HYPERGAME_TESTS_TERM_GEN_HPP_
#define HYPERGAME_TESTS_TERM_GEN_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypergame/term.hpp"

namespace termgen {

using hypergame::Context;
using hypergame::Term;
using hypergame::TypeExpr;

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  // Closed types with quantifier nesting <= 2 that have inhabitants.
  static const std::vector<TypeExpr>& closed_types() {
    static const std::vector<TypeExpr> types = make_closed_types();
    return types;
  }

  // A closed term of type ty with size about `fuel`, or nullopt on a dead end.
  std::optional<Term> closed_term(const TypeExpr& ty, int fuel) {
    scope_.clear();
    counter_ = 0;
    return gen({}, ty, fuel);
  }

  std::mt19937& rng() { return rng_; }

 private:
  static std::vector<TypeExpr> make_closed_types() {
    std::vector<TypeExpr> out;
    for (const char* s :
         {"forall X. X -> X", "forall X. X -> X -> X", "forall X. (X -> X) -> X -> X",
          "(forall G. G -> G) -> forall G. G -> G",
          "forall X. forall Y. X -> Y -> X", "forall X. forall Y. (X -> Y) -> X -> Y",
          "forall X. (forall Y. Y -> Y) -> X -> X",
          "(forall X. X -> X -> X) -> forall X. X -> X -> X",
          "forall X. X -> (X -> X) -> X"})
      out.push_back(hypergame::parse_type(s));
    return out;
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string fresh(const char* base) { return base + std::to_string(counter_++); }

  // A small type over the type variables in scope.
  TypeExpr small_type(int depth = 0) {
    const int n = static_cast<int>(scope_.size());
    const int r = pick(depth > 1 ? 1 : 4);
    if (r == 0 && n > 0) return TypeExpr::var(scope_[static_cast<std::size_t>(pick(n))]);
    if (r == 1) return TypeExpr::arrow(small_type(depth + 1), small_type(depth + 1));
    if (r == 2) return hypergame::parse_type("forall Q. Q -> Q");
    if (n > 0) return TypeExpr::var(scope_[static_cast<std::size_t>(pick(n))]);
    return hypergame::parse_type("forall Q. Q -> Q");
  }

  std::optional<Term> gen(const Context& ctx, const TypeExpr& ty, int fuel) {
    if (fuel < -4) return std::nullopt;
    if (fuel > 3 && coin(0.3)) {
      if (auto t = redex(ctx, ty, fuel)) return t;
    }
    if (ty.is_forall()) {
      const std::string x = fresh("T");
      scope_.push_back(x);
      auto b = gen(ctx, hypergame::detail::open(ty.body(), TypeExpr::var(x)), fuel - 1);
      scope_.pop_back();
      if (!b) return std::nullopt;
      return Term::tyabs(x, *b);
    }
    if (ty.is_arrow() && (!coin(0.2) || fuel < 3)) {
      const std::string x = fresh("v");
      Context inner = ctx;
      inner.emplace_back(x, ty.domain());
      auto b = gen(inner, ty.codomain(), fuel - 1);
      if (!b) return std::nullopt;
      return Term::abs(x, ty.domain(), *b);
    }
    return neutral(ctx, ty, fuel);
  }

  // A variable applied to arguments until its type becomes ty.
  std::optional<Term> neutral(const Context& ctx, const TypeExpr& ty, int fuel) {
    std::vector<std::size_t> order(ctx.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    for (std::size_t i : order) {
      for (int attempt = 0; attempt < 3; ++attempt) {
        if (auto t = spine(ctx, ty, Term::var(ctx[i].first), ctx[i].second, fuel - 1))
          return t;
      }
    }
    return std::nullopt;
  }

  std::optional<Term> spine(const Context& ctx, const TypeExpr& goal, const Term& acc,
                            const TypeExpr& cur, int fuel) {
    if (cur == goal && (fuel <= 0 || coin(0.7))) return acc;
    if (cur.is_var() || fuel < -6) return std::nullopt;
    if (cur.is_arrow()) {
      const int share = std::max(0, fuel / 2);
      auto a = gen(ctx, cur.domain(), std::min(fuel - 1, share));
      if (!a) return std::nullopt;
      return spine(ctx, goal, Term::app(acc, *a), cur.codomain(), fuel - 1 - share);
    }
    // Prefer instantiating with the goal when that finishes the spine.
    TypeExpr v = goal.is_var() && coin(0.6) ? goal : small_type();
    return spine(ctx, goal, Term::tyapp(acc, v), hypergame::detail::open(cur.body(), v),
                 fuel - 1);
  }

  std::optional<Term> redex(const Context& ctx, const TypeExpr& ty, int fuel) {
    if (coin(0.5) || scope_.empty()) {
      // (\x:A. body) arg
      const auto& pool = closed_types();
      const TypeExpr a = coin(0.5) ? small_type()
                                   : pool[static_cast<std::size_t>(pick(static_cast<int>(pool.size())))];
      const std::string x = fresh("r");
      Context inner = ctx;
      inner.emplace_back(x, a);
      auto body = gen(inner, ty, fuel / 2);
      if (!body) return std::nullopt;
      auto arg = gen(ctx, a, fuel / 2);
      if (!arg) return std::nullopt;
      return Term::app(Term::abs(x, a, *body), *arg);
    }
    // (/\X. body) [V] where body's type abstracts V out of ty.
    const TypeExpr v = TypeExpr::var(scope_[static_cast<std::size_t>(pick(static_cast<int>(scope_.size())))]);
    const std::string x = fresh("T");
    const TypeExpr b = abstract(ty, v, x);
    scope_.push_back(x);
    auto body = gen(ctx, b, fuel - 2);
    scope_.pop_back();
    if (!body) return std::nullopt;
    return Term::tyapp(Term::tyabs(x, *body), v);
  }

  // Replaces some occurrences of the variable v in t by x.
  TypeExpr abstract(const TypeExpr& t, const TypeExpr& v, const std::string& x) {
    switch (t.kind()) {
      case TypeExpr::Kind::kVar:
        return t == v && coin(0.7) ? TypeExpr::var(x) : t;
      case TypeExpr::Kind::kBound:
        return t;
      case TypeExpr::Kind::kArrow:
        return TypeExpr::arrow(abstract(t.domain(), v, x), abstract(t.codomain(), v, x));
      case TypeExpr::Kind::kForall:
        return TypeExpr::forall_raw(t.name(), abstract(t.body(), v, x));
    }
    return t;
  }

  std::mt19937 rng_;
  std::vector<std::string> scope_;
  int counter_ = 0;
};

}  // namespace termgen

#endif  // HYPERGAME_TESTS_TERM_GEN_HPP_
