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

// Random simply typed closed terms with redexes, over base types X and Y.
// Built by applying enumerated normal forms to each other.

#ifndef HYPERGAME_TESTS_LAMBDA_GEN_HPP_
#define HYPERGAME_TESTS_LAMBDA_GEN_HPP_

#include <map>
#include <random>

#include "hypergame/term.hpp"

namespace lambdagen {

using hypergame::parse_type;
using hypergame::Term;
using hypergame::TypeExpr;

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  static const std::vector<TypeExpr>& types() {
    static const std::vector<TypeExpr> t = {
        parse_type("X -> X"),          parse_type("(X -> X) -> X -> X"),
        parse_type("X -> Y -> X"),     parse_type("(Y -> X) -> Y -> X"),
        parse_type("X -> (X -> X) -> X"), parse_type("((X -> X) -> X) -> X"),
    };
    return t;
  }

  // A term of type `ty` with up to `depth` nested applications.
  std::optional<Term> term(const TypeExpr& ty, int depth) {
    if (depth <= 0 || coin(3)) return normal(ty);
    const TypeExpr& a = types()[pick(types().size())];
    auto f = normal(TypeExpr::arrow(a, ty));
    if (!f) return normal(ty);
    auto x = term(a, depth - 1);
    if (!x) return normal(ty);
    return Term::app(*f, *x);
  }

 private:
  std::optional<Term> normal(const TypeExpr& ty) {
    auto it = cache_.find(ty.key());
    if (it == cache_.end())
      it = cache_.emplace(ty.key(), hypergame::enumerate_normal_terms(ty, 9)).first;
    if (it->second.empty()) return std::nullopt;
    return it->second[pick(it->second.size())];
  }
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool coin(int n) { return pick(static_cast<std::size_t>(n)) == 0; }

  std::mt19937 rng_;
  std::map<std::string, std::vector<Term>> cache_;
};

}  // namespace lambdagen

#endif  // HYPERGAME_TESTS_LAMBDA_GEN_HPP_
