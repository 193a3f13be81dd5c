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

#include <optional>

#include "doctest.h"
#include "hypergame/term.hpp"
#include "term_gen.hpp"

using namespace hypergame;

namespace {
TypeExpr T(const char* s) { return parse_type(s); }
Term P(const char* s) { return parse_term(s); }

// Leftmost-outermost single steps, used as an independent reference for
// beta_normalize.
std::optional<Term> step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return std::nullopt;
    case Term::Kind::kAbs:
      if (auto b = step(t.body())) return Term::abs(t.name(), t.annotation(), *b);
      return std::nullopt;
    case Term::Kind::kTyAbs:
      if (auto b = step(t.body())) return Term::tyabs(t.name(), *b);
      return std::nullopt;
    case Term::Kind::kApp:
      if (t.fun().kind() == Term::Kind::kAbs)
        return subst_term(t.fun().body(), t.fun().name(), t.arg());
      if (auto f = step(t.fun())) return Term::app(*f, t.arg());
      if (auto a = step(t.arg())) return Term::app(t.fun(), *a);
      return std::nullopt;
    case Term::Kind::kTyApp:
      if (t.fun().kind() == Term::Kind::kTyAbs)
        return subst_type(t.fun().body(), t.fun().name(), t.type_arg());
      if (auto f = step(t.fun())) return Term::tyapp(*f, t.type_arg());
      return std::nullopt;
  }
  return std::nullopt;
}

Term reduce(Term t) {
  while (auto next = step(t)) t = *next;
  return t;
}
}  // namespace

TEST_CASE("parse and print") {
  const Term k = P("/\\G. \\k:G. \\f:G. k");
  CHECK(k.to_string() == "/\\G. \\k:G. \\f:G. k");
  CHECK(P("ΛG. λk:G. λf:G. k") == k);
  CHECK(P("f x y") == Term::app(Term::app(Term::var("f"), Term::var("x")), Term::var("y")));
  CHECK(P("h [G -> G] (\\x:G. x) g").to_string() == "h [G -> G] (\\x:G. x) g");
  CHECK(P("\\h:(forall G. G -> G). h").annotation() == T("forall G. G -> G"));
  CHECK(parse_term(P("(\\x:X. x) (\\y:(forall Q. Q). y)").to_string()) ==
        P("(\\x:X. x) (\\y:(forall Q. Q). y)"));
  CHECK_THROWS_AS(parse_term("\\x X. x"), ParseError);
  CHECK_THROWS_AS(parse_term("(f x"), ParseError);
}

TEST_CASE("alpha-equivalence") {
  CHECK(P("\\x:X. x") == P("\\y:X. y"));
  CHECK(P("/\\A. \\x:A. x") == P("/\\B. \\y:B. y"));
  CHECK(P("/\\A. \\x:A. x") != P("/\\B. \\y:A. y"));
  CHECK(P("\\x:X. \\y:X. x") != P("\\x:X. \\y:X. y"));
  CHECK(P("\\x:X. z") != P("\\x:X. w"));
}

TEST_CASE("typing") {
  CHECK(typecheck(P("/\\G. \\k:G. \\f:G. k")) == T("forall G. G -> G -> G"));
  const char* tau = "\\h:(forall G. G -> G). /\\G. \\g:G. h [G -> G] (\\x:G. x) g";
  CHECK(typecheck(P(tau)) ==
        T("(forall G. G -> G) -> forall G. G -> G"));
  CHECK(typecheck(P("\\x:X. x")) == T("X -> X"));
  CHECK_THROWS_AS(typecheck(P("\\x:X. y")), TermTypeError);
  CHECK_THROWS_AS(typecheck(P("\\x:X. x x")), TermTypeError);
  CHECK_THROWS_AS(typecheck(P("\\x:X. x [Y]")), TermTypeError);
  // Instantiation keeps the shape of the type.
  CHECK(typecheck({{"f", T("forall X. X -> X")}}, P("f [forall Y. Y]")) ==
        T("(forall Y. Y) -> forall Y. Y"));
  // Eigenvariable clash is renamed, not captured.
  CHECK(typecheck({{"x", T("A")}}, P("/\\A. \\y:A. x")) == T("forall B. B -> A"));
}

TEST_CASE("beta normalization") {
  CHECK(beta_normalize(P("(\\x:X. x) y")) == P("y"));
  CHECK(beta_normalize(P("(/\\G. \\g:G. g) [Z] z")) == P("z"));
  const Term app = P(
      "(\\h:(forall G. G -> G). /\\G. \\g:G. h [G -> G] (\\x:G. x) g) "
      "(/\\G. \\g:G. g)");
  CHECK(beta_normalize(app) == P("/\\G. \\g:G. g"));
  // Capture avoidance.
  CHECK(beta_normalize(P("(\\x:X. \\y:X. x) y")) == P("\\z:X. y"));
  CHECK(beta_normalize(P("(/\\A. \\x:B. /\\B. x) [B]")) ==
        P("\\x:B. /\\C. x"));
}

TEST_CASE("eta-long forms") {
  const TypeExpr hh = T("(forall G. G -> G) -> forall G. G -> G");
  CHECK(eta_long(P("\\h:(forall G. G -> G). h"), hh) ==
        P("\\h:(forall G. G -> G). /\\G. \\g:G. h [G] g"));
  CHECK(eta_long(P("\\x:X. x"), T("X -> X")) == P("\\x:X. x"));
  CHECK(eta_long(P("f"), T("X -> X"), {{"f", T("X -> X")}}) == P("\\x:X. f x"));
  CHECK_THROWS_AS(eta_long(P("\\x:X. x"), T("Y -> Y")), TermTypeError);
}

TEST_CASE("sizes") {
  CHECK(P("/\\G. \\k:G. \\f:G. k").size() == 4);
  CHECK(P("/\\X. \\f:X -> X. \\x:X. f (f x)").size() == 8);
  CHECK(P("\\h:(forall G. G -> G). /\\G. \\g:G. h [G] g").size() == 8);
  CHECK(P("\\h:(forall G. G -> G). /\\G. \\g:G. h [G -> G] (\\x:G. x) g").size() == 13);
}

TEST_CASE("enumeration of normal forms") {
  auto two = enumerate_normal_terms(T("forall G. G -> G -> G"), 10);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == P("/\\G. \\k:G. \\f:G. k"));
  CHECK(two[1] == P("/\\G. \\k:G. \\f:G. f"));

  auto nats = enumerate_normal_terms(T("X -> (X -> X) -> X"), 7);
  REQUIRE(nats.size() == 3);
  CHECK(nats[0] == P("\\x:X. \\f:X -> X. x"));
  CHECK(nats[1] == P("\\x:X. \\f:X -> X. f x"));
  CHECK(nats[2] == P("\\x:X. \\f:X -> X. f (f x)"));

  CHECK(enumerate_normal_terms(T("forall Y. Y"), 12).empty());
  CHECK(enumerate_normal_terms(T("forall X. (X -> X) -> X -> X"), 13).size() == 5);

  for (const auto& t : enumerate_normal_terms(T("(forall G. G -> G) -> forall G. G -> G"), 13)) {
    CAPTURE(t.to_string());
    CHECK(typecheck(t) == T("(forall G. G -> G) -> forall G. G -> G"));
    CHECK(eta_long(beta_normalize(t), typecheck(t)) == t);
  }
}

TEST_CASE("property: normalization agrees with stepping and preserves types") {
  termgen::Generator gen(42);
  const auto& types = termgen::Generator::closed_types();
  int done = 0;
  for (int i = 0; done < 1000 && i < 20000; ++i) {
    const TypeExpr& ty = types[static_cast<std::size_t>(i) % types.size()];
    auto t = gen.closed_term(ty, 6 + i % 14);
    if (!t) continue;
    ++done;
    CAPTURE(t->to_string());
    REQUIRE(typecheck(*t) == ty);
    const Term n = beta_normalize(*t);
    CHECK(typecheck(n) == ty);
    CHECK(n == reduce(*t));
    const Term e = eta_long(n, ty);
    CHECK(typecheck(e) == ty);
    CHECK(eta_long(e, ty) == e);
    CHECK(beta_normalize(e) == e);
    CHECK(parse_term(t->to_string()) == *t);
  }
  CHECK(done == 1000);
}
