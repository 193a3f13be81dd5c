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

#include <doctest.h>

#include <algorithm>

#include "hypergame/strategy.hpp"

using namespace hypergame;

namespace {

TypeExpr Ty(const char* s) { return parse_type(s); }
TypeExpr V(const char* s) { return TypeExpr::var(s); }
Move M(int back, int branch, std::vector<TypeExpr> imports = {}) {
  return Move{back, Label{branch, std::move(imports)}};
}

}  // namespace

TEST_CASE("tree operations") {
  Strategy s = Strategy::from_plays({{M(0, 1), M(1, 1)}, {M(0, 1), M(1, 2)}});
  CHECK(s.size() == 4);  // ε, the opening, and both answers
  CHECK(s.contains({M(0, 1)}));
  CHECK(s.extensions({M(0, 1)}).size() == 2);
  CHECK_FALSE(s.respond({M(0, 2)}).has_value());
  CHECK(s.maximal_plays().size() == 2);
  CHECK(s.depth() == 2);
  CHECK(Strategy() == Strategy::from_plays({}));
}

TEST_CASE("validation catches the usual mistakes") {
  const TransitionSystem ts(Ty("X -> Y -> X"));
  SUBCASE("two answers to one stimulus") {
    Strategy s = Strategy::from_plays({{M(0, 1), M(1, 1)}, {M(0, 1), M(1, 2)}});
    const Verdict v = validate_strategy(ts, s, Mode::kPBacktracking);
    CHECK_FALSE(v.ok);
    CHECK(v.witness == Dialogue{M(0, 1)});
  }
  SUBCASE("move outside the game") {
    Strategy s = Strategy::from_plays({{M(0, 1), M(1, 3)}});
    CHECK_FALSE(validate_strategy(ts, s, Mode::kPBacktracking).ok);
  }
  SUBCASE("non-canonical black boxes") {
    const TransitionSystem bb(Ty("forall G. G -> G"));
    Strategy good = Strategy::from_plays({{M(0, 1, {V("B0")}), M(1, 1)}});
    Strategy bad = Strategy::from_plays({{M(0, 1, {V("Q")}), M(1, 1)}});
    CHECK(validate_strategy(bb, good, Mode::kBlackBox).ok);
    CHECK_FALSE(validate_strategy(bb, bad, Mode::kBlackBox).ok);
  }
}

TEST_CASE("liveness") {
  const TransitionSystem ts(Ty("forall X. (X -> X) -> X -> X"));
  // The Opponent may ask about the argument of f, which is never answered.
  Strategy partial = Strategy::from_plays({{M(0, 1, {V("B0")}), M(1, 1), M(2, 1)}});
  const Liveness l = is_live(ts, partial, Mode::kBlackBox);
  CHECK_FALSE(l.live);
  CHECK_FALSE(l.universe_relative);
  CHECK(l.witness.size() == 3);
  Strategy full = Strategy::from_plays({{M(0, 1, {V("B0")}), M(1, 1), M(2, 1), M(1, 2)}});
  CHECK(is_live(ts, full, Mode::kBlackBox).live);

  const TransitionSystem open(Ty("X -> X"));
  const Liveness rel = is_live(open, Strategy::from_plays({{M(0, 1), M(1, 1)}}),
                               Mode::kPBacktracking, MoveOptions{{V("Z")}, 2, 0});
  CHECK(rel.live);
}

TEST_CASE("enumeration counts") {
  SUBCASE("two live strategies, one copycat") {
    const TransitionSystem ts(Ty("X -> Y -> X"));
    EnumerationOptions eo;
    eo.mode = Mode::kPBacktracking;
    eo.depth_bound = 2;
    eo.require_copycat = false;
    CHECK(enumerate_strategies(ts, eo).size() == 2);
    eo.require_copycat = true;
    const auto cc = enumerate_strategies(ts, eo);
    REQUIRE(cc.size() == 1);
    CHECK(cc[0].respond({M(0, 1)}) == M(1, 1));
  }
  SUBCASE("booleans") {
    const TransitionSystem ts(Ty("forall X. X -> X -> X"));
    EnumerationOptions eo;
    CHECK(enumerate_strategies(ts, eo).size() == 2);
  }
  SUBCASE("a bare variable has no strategy") {
    for (Mode m : {Mode::kFull, Mode::kPBacktracking}) {
      EnumerationOptions eo;
      eo.mode = m;
      eo.depth_bound = 3;
      CHECK(enumerate_strategies(TransitionSystem(Ty("X")), eo).empty());
    }
  }
  SUBCASE("limit") {
    EnumerationOptions eo;
    eo.mode = Mode::kPBacktracking;
    eo.depth_bound = 8;
    eo.limit = 2;
    CHECK(enumerate_strategies(TransitionSystem(Ty("X -> (X -> X) -> X")), eo).size() == 2);
  }
}

TEST_CASE("property: enumerated strategies are valid, live, copycat, and monotone in depth") {
  struct Case {
    const char* type;
    Mode mode;
  };
  const Case cases[] = {
      {"X -> (X -> X) -> X", Mode::kPBacktracking},
      {"((X -> Y) -> X) -> X", Mode::kPBacktracking},
      {"(X -> X -> X) -> X -> X", Mode::kPBacktracking},
      {"forall X. (X -> X) -> X -> X", Mode::kBlackBox},
      {"forall X. (forall Y. Y -> X) -> X", Mode::kBlackBox},
      {"forall X. ((X -> X) -> X) -> X", Mode::kBlackBox},
  };
  std::size_t total = 0;
  for (const auto& c : cases) {
    CAPTURE(c.type);
    const TransitionSystem ts(Ty(c.type));
    std::vector<std::string> previous;
    for (int depth = 2; depth <= 8; depth += 2) {
      EnumerationOptions eo;
      eo.mode = c.mode;
      eo.depth_bound = depth;
      const auto all = enumerate_strategies(ts, eo);
      std::vector<std::string> now;
      for (const auto& s : all) {
        CHECK(validate_strategy(ts, s, c.mode).ok);
        CHECK(is_live(ts, s, c.mode).live);
        CHECK(copycat_ok_strategy(ts, s));
        CHECK(static_cast<int>(s.depth()) <= depth);
        std::string k;
        for (const auto& p : s.keys()) k += p + ";";
        now.push_back(k);
        ++total;
      }
      std::sort(now.begin(), now.end());
      CHECK(std::includes(now.begin(), now.end(), previous.begin(), previous.end()));
      previous = now;
    }
  }
  CHECK(total > 30);
}

TEST_CASE("property: black-box names are canonical after renaming") {
  const TransitionSystem ts(Ty("forall X. (forall Y. Y -> X) -> X"));
  EnumerationOptions eo;
  eo.depth_bound = 6;
  for (const auto& s : enumerate_strategies(ts, eo)) {
    for (const auto& d : s.maximal_plays()) {
      Dialogue renamed = d;
      for (auto& m : renamed)
        for (auto& v : m.label.imports)
          v = substitute_all(v, {{"B0", V("P")}, {"B1", V("Q")}, {"B2", V("R")}});
      CHECK(canonicalize_boxes(renamed) == d);
    }
  }
}
