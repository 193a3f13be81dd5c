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

#include "hypergame/trace_io.hpp"

using namespace hypergame;

TEST_CASE("dialogue lines") {
  const Dialogue d{Move{0, Label{1, {TypeExpr::var("B0")}}},
                   Move{1, Label{2, {parse_type("forall Y. Y -> B0"), TypeExpr::var("B0")}}}};
  const std::string text = write_dialogue(d);
  CHECK(text ==
        "1: (0) branch=1 imports=[B0]\n"
        "2: (1) branch=2 imports=[forall Y. Y -> B0;B0]\n");
  CHECK(read_dialogue(text) == d);
  CHECK(read_dialogue("# comment\n\n1: (0) branch=1 imports=[]\n").size() == 1);
  CHECK(read_dialogue("").empty());
}

TEST_CASE("malformed dialogue text") {
  CHECK_THROWS_AS(read_dialogue("1: (0) branch=1"), ParseError);
  CHECK_THROWS_AS(read_dialogue("2: (0) branch=1 imports=[]"), ParseError);
  CHECK_THROWS_AS(read_dialogue("1: (0) branch=1 imports=[->]"), ParseError);
  CHECK_THROWS_AS(read_dialogue("1: (0) branch=1 imports=[]\n2: (0) branch=1 imports=[]"),
                  ParseError);
  CHECK_THROWS_AS(read_dialogue("1: (0) branch=1 imports=[] by=fun"), ParseError);
  try {
    read_dialogue("1: (0) branch=x imports=[]");
  } catch (const ParseError& e) {
    CHECK(e.position() == 14);
  }
}

TEST_CASE("property: strategies and transcripts survive a write/read cycle") {
  const char* terms[][2] = {
      {"forall X. (X -> X) -> X -> X", "/\\X. \\f:X -> X. \\x:X. f (f x)"},
      {"forall X. (forall Y. (Y -> Y) -> X) -> X",
       "/\\X. \\k:(forall Y. (Y -> Y) -> X). k [X -> X] (\\f:X -> X. f)"},
      {"X -> (X -> X) -> X", "\\x:X. \\f:X -> X. f (f (f x))"},
  };
  for (auto& c : terms) {
    CAPTURE(c[1]);
    const TypeExpr ty = parse_type(c[0]);
    const Strategy s = term_to_strategy(parse_term(c[1]), ty);
    CHECK(read_strategy(write_strategy(s)) == s);
  }
  CHECK(read_strategy("") == Strategy());

  Transcript t;
  const Term app = parse_term(
      "(/\\X. \\f:X -> X. \\x:X. f (f x)) [forall Y. Y -> Y] (\\i:(forall Y. Y -> Y). i [forall Y. Y -> Y] i)");
  normalize_via_games(app, {}, &t);
  REQUIRE(!t.empty());
  const Transcript back = read_transcript(write_transcript(t));
  REQUIRE(back.size() == t.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    REQUIRE(back[r].size() == t[r].size());
    for (std::size_t k = 0; k < t[r].size(); ++k) {
      CHECK(back[r][k].by == t[r][k].by);
      CHECK(back[r][k].justifier == t[r][k].justifier);
      CHECK(back[r][k].label == t[r][k].label);
    }
  }
}
