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

#ifndef HYPERGAME_TYPE_HPP_
#define HYPERGAME_TYPE_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypergame {

// Raised by the type parser; carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a type-algebra operation is applied outside its domain
// (importing into a resolved type, viewing an unresolved type, ...).
class TypeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A System F type: variable, arrow, or universal quantifier.
//
// Bound variables are de Bruijn indices, so structural equality is
// alpha-equivalence. Free variables carry their names. Binders keep a name
// hint that is only used for printing. Every TypeExpr handed out by this API
// is locally closed (no dangling indices); the index-level constructors are
// for the type algebra itself.
class TypeExpr {
 public:
  enum class Kind { kVar, kBound, kArrow, kForall };

  TypeExpr();  // the free variable "X"

  static TypeExpr var(std::string name);
  static TypeExpr arrow(TypeExpr domain, TypeExpr codomain);
  // Binds the free variable `name` in `body`.
  static TypeExpr forall(const std::string& name, const TypeExpr& body);

  // Index-level constructors.
  static TypeExpr bound(int index);
  static TypeExpr forall_raw(std::string hint, TypeExpr body);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_arrow() const { return kind() == Kind::kArrow; }
  bool is_forall() const { return kind() == Kind::kForall; }

  const std::string& name() const { return node_->name; }  // var / binder hint
  int index() const { return node_->index; }
  const TypeExpr& domain() const { return *node_->left; }
  const TypeExpr& codomain() const { return *node_->right; }
  const TypeExpr& body() const { return *node_->right; }

  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  // Alpha-equivalence.
  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) {
    return !(a == b);
  }
  // Total order consistent with alpha-equivalence.
  friend bool operator<(const TypeExpr& a, const TypeExpr& b);

  // Pretty form, e.g. "forall Y. (forall Y'. Y') -> Y".
  std::string to_string() const;
  // Structural key independent of binder hints; used for hashing and maps.
  std::string key() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    int index = 0;
    std::shared_ptr<const TypeExpr> left;
    std::shared_ptr<const TypeExpr> right;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit TypeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeExprHash {
  std::size_t operator()(const TypeExpr& t) const { return t.hash(); }
};

// Branches T1 ... Tn and head variable X of a resolved type T1 -> ... -> Tn -> X.
struct ResolvedView {
  std::vector<TypeExpr> branches;
  std::string head;

  friend bool operator==(const ResolvedView& a, const ResolvedView& b) {
    return a.head == b.head && a.branches == b.branches;
  }
};

TypeExpr parse_type(std::string_view text);

std::set<std::string> free_vars(const TypeExpr& t);

// Pulls every quantifier to the front by exhaustively rewriting
// T -> forall X. U  ~>  forall X. T -> U.
TypeExpr prenex(const TypeExpr& t);

// Capture-avoiding substitution of v for the free variable x, without any
// prenex conversion.
TypeExpr substitute_raw(const TypeExpr& t, const std::string& x,
                        const TypeExpr& v);
// Simultaneous capture-avoiding substitution.
TypeExpr substitute_all(
    const TypeExpr& t,
    const std::vector<std::pair<std::string, TypeExpr>>& assignment);
// T[V/X]: substitution followed by prenex conversion.
TypeExpr substitute(const TypeExpr& t, const std::string& x, const TypeExpr& v);

// forall X.T . V = T[V/X], taken on the prenex form of t.
TypeExpr import_prenex(const TypeExpr& t, const TypeExpr& v);

// Binders of the available quantifiers, leftmost first.
std::vector<std::string> available_quantifiers(const TypeExpr& t);
bool is_resolved(const TypeExpr& t);

// Deletes the leftmost available quantifier and substitutes v for its
// variable; no prenex step.
TypeExpr import_lazy(const TypeExpr& t, const TypeExpr& v);
// Iterated lazy importation t . v1 ... vn (left fold).
TypeExpr import_seq(const TypeExpr& t, const std::vector<TypeExpr>& vs);

ResolvedView resolved_view(const TypeExpr& t);
TypeExpr reassemble(const ResolvedView& view);

// Walk along the right spine of `t`, importing `imports` at each available
// quantifier. Records, in order, whether each spine step was a type import or
// a term argument. Used to interleave type and term arguments of a head
// variable. Throws TypeError if the imports do not exactly resolve t.
enum class SpineStep { kType, kTerm };
std::vector<SpineStep> spine_steps(const TypeExpr& t,
                                   const std::vector<TypeExpr>& imports);

// All types of AST size <= max_size whose free variables are drawn from
// `vars`, smallest first, in a deterministic order.
std::vector<TypeExpr> enumerate_types(const std::vector<std::string>& vars,
                                      std::size_t max_size);

namespace detail {
TypeExpr shift(const TypeExpr& t, int delta, int cutoff = 0);
// Replaces index 0 by v (locally closed) and decrements the others.
TypeExpr open(const TypeExpr& body, const TypeExpr& v);
}  // namespace detail

}  // namespace hypergame

#endif  // HYPERGAME_TYPE_HPP_
