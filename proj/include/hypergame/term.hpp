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

#ifndef HYPERGAME_TERM_HPP_
#define HYPERGAME_TERM_HPP_

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypergame/type.hpp"

namespace hypergame {

class TermTypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// System F terms with named binders. Type variables bound by a type
// abstraction appear as free variables of the annotations below it.
class Term {
 public:
  enum class Kind { kVar, kAbs, kApp, kTyAbs, kTyApp };

  static Term var(std::string name);
  static Term abs(std::string name, TypeExpr annotation, Term body);
  static Term app(Term fun, Term arg);
  static Term tyabs(std::string tyvar, Term body);
  static Term tyapp(Term fun, TypeExpr arg);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }  // var or binder
  const TypeExpr& annotation() const { return node_->type; }
  const TypeExpr& type_arg() const { return node_->type; }
  const Term& body() const { return *node_->left; }
  const Term& fun() const { return *node_->left; }
  const Term& arg() const { return *node_->right; }

  // Nodes, plus the size of each type argument; annotations do not count.
  std::size_t size() const;

  // `\x:T. t`, `/\X. t`, `t u`, `t [T]`.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    TypeExpr type;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool alpha_equal(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return alpha_equal(a, b); }
inline bool operator!=(const Term& a, const Term& b) { return !alpha_equal(a, b); }

// Grammar: `\x:T. t` (also λ), `/\X. t` (also Λ), left-associative
// application, `t [T]` for type application, parentheses. An annotation runs
// to the first '.' outside parentheses, so quantified annotations need
// parentheses: `\x:(forall X. X -> X). x`.
Term parse_term(std::string_view text);

// Term variables in scope, innermost last.
using Context = std::vector<std::pair<std::string, TypeExpr>>;

std::set<std::string> free_term_vars(const Term& t);
std::set<std::string> free_type_vars(const Term& t);

// Capture-avoiding substitutions.
Term subst_term(const Term& t, const std::string& x, const Term& u);
Term subst_type(const Term& t, const std::string& tyvar, const TypeExpr& v);

// Standard System F typing. Type application substitutes without prenex
// conversion, so a type keeps its shape under instantiation.
TypeExpr typecheck(const Context& ctx, const Term& t);
inline TypeExpr typecheck(const Term& t) { return typecheck({}, t); }

Term beta_normalize(const Term& t);

// Full η-expansion of a β-normal term at arrow and quantified types.
Term eta_long(const Term& t, const TypeExpr& ty, const Context& ctx = {});

// Every η-long β-normal term of type ty (in ctx) with size <= size_bound,
// sorted by size, then by printed form.
std::vector<Term> enumerate_normal_terms(const TypeExpr& ty, std::size_t size_bound,
                                         const Context& ctx = {});

// Head variable and arguments of a neutral term h a1 ... an (type and term
// arguments mixed, in order).
struct Spine {
  std::string head;
  struct Arg {
    bool is_type = false;
    std::optional<Term> term;  // term arguments
    TypeExpr type;             // type arguments
  };
  std::vector<Arg> args;
};
Spine spine_of(const Term& t);

}  // namespace hypergame

#endif  // HYPERGAME_TERM_HPP_
