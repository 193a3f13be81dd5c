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

#include "hypergame/type.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hypergame {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

TypeExpr::TypeExpr() : TypeExpr(var("X")) {}

TypeExpr TypeExpr::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVar;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return TypeExpr(std::move(n));
}

TypeExpr TypeExpr::bound(int index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kBound;
  n->index = index;
  n->hash = mix(2, static_cast<std::size_t>(index));
  return TypeExpr(std::move(n));
}

TypeExpr TypeExpr::arrow(TypeExpr domain, TypeExpr codomain) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kArrow;
  n->size = 1 + domain.size() + codomain.size();
  n->hash = mix(mix(3, domain.hash()), codomain.hash());
  n->left = std::make_shared<const TypeExpr>(std::move(domain));
  n->right = std::make_shared<const TypeExpr>(std::move(codomain));
  return TypeExpr(std::move(n));
}

TypeExpr TypeExpr::forall_raw(std::string hint, TypeExpr body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kForall;
  n->name = std::move(hint);
  n->size = 1 + body.size();
  n->hash = mix(4, body.hash());
  n->right = std::make_shared<const TypeExpr>(std::move(body));
  return TypeExpr(std::move(n));
}

namespace {

TypeExpr close_at(const TypeExpr& t, const std::string& name, int depth) {
  switch (t.kind()) {
    case TypeExpr::Kind::kVar:
      return t.name() == name ? TypeExpr::bound(depth) : t;
    case TypeExpr::Kind::kBound:
      return t;
    case TypeExpr::Kind::kArrow:
      return TypeExpr::arrow(close_at(t.domain(), name, depth),
                             close_at(t.codomain(), name, depth));
    case TypeExpr::Kind::kForall:
      return TypeExpr::forall_raw(t.name(), close_at(t.body(), name, depth + 1));
  }
  return t;
}

}  // namespace

TypeExpr TypeExpr::forall(const std::string& name, const TypeExpr& body) {
  return forall_raw(name, close_at(body, name, 0));
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.hash() != b.hash() || a.size() != b.size())
    return false;
  switch (a.kind()) {
    case TypeExpr::Kind::kVar:
      return a.name() == b.name();
    case TypeExpr::Kind::kBound:
      return a.index() == b.index();
    case TypeExpr::Kind::kArrow:
      return a.domain() == b.domain() && a.codomain() == b.codomain();
    case TypeExpr::Kind::kForall:
      return a.body() == b.body();
  }
  return false;
}

bool operator<(const TypeExpr& a, const TypeExpr& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case TypeExpr::Kind::kVar:
      return a.name() < b.name();
    case TypeExpr::Kind::kBound:
      return a.index() < b.index();
    case TypeExpr::Kind::kArrow:
      if (a.domain() != b.domain()) return a.domain() < b.domain();
      return a.codomain() < b.codomain();
    case TypeExpr::Kind::kForall:
      return a.body() < b.body();
  }
  return false;
}

std::string TypeExpr::key() const {
  switch (kind()) {
    case Kind::kVar:
      return "'" + name();
    case Kind::kBound:
      return "#" + std::to_string(index());
    case Kind::kArrow:
      return "(" + domain().key() + ">" + codomain().key() + ")";
    case Kind::kForall:
      return "A" + body().key();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void collect_free(const TypeExpr& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TypeExpr::Kind::kVar:
      out.insert(t.name());
      break;
    case TypeExpr::Kind::kBound:
      break;
    case TypeExpr::Kind::kArrow:
      collect_free(t.domain(), out);
      collect_free(t.codomain(), out);
      break;
    case TypeExpr::Kind::kForall:
      collect_free(t.body(), out);
      break;
  }
}

class Printer {
 public:
  explicit Printer(const TypeExpr& t) { collect_free(t, taken_); }

  std::string print(const TypeExpr& t) {
    switch (t.kind()) {
      case TypeExpr::Kind::kVar:
        return t.name();
      case TypeExpr::Kind::kBound: {
        const int i = static_cast<int>(scope_.size()) - 1 - t.index();
        if (i < 0) return "#" + std::to_string(t.index());
        return scope_[static_cast<std::size_t>(i)];
      }
      case TypeExpr::Kind::kArrow: {
        std::string left = print(t.domain());
        if (!t.domain().is_var() && t.domain().kind() != TypeExpr::Kind::kBound)
          left = "(" + left + ")";
        return left + " -> " + print(t.codomain());
      }
      case TypeExpr::Kind::kForall: {
        std::string name = t.name().empty() ? "X" : t.name();
        while (in_use(name)) name += "'";
        scope_.push_back(name);
        std::string body = print(t.body());
        scope_.pop_back();
        return "forall " + name + ". " + body;
      }
    }
    return {};
  }

 private:
  bool in_use(const std::string& name) const {
    return taken_.count(name) != 0 ||
           std::find(scope_.begin(), scope_.end(), name) != scope_.end();
  }

  std::set<std::string> taken_;
  std::vector<std::string> scope_;
};

}  // namespace

std::string TypeExpr::to_string() const { return Printer(*this).print(*this); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  TypeExpr parse() {
    TypeExpr t = parse_type();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool at_keyword_forall() {
    skip_ws();
    if (text_.substr(pos_, 3) == "\xE2\x88\x80") return true;  // U+2200
    if (text_.substr(pos_, 6) != "forall") return false;
    return pos_ + 6 >= text_.size() || !ident_char(text_[pos_ + 6]);
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_]))
      throw ParseError("expected type variable", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "forall") throw ParseError("unexpected 'forall'", start);
    return name;
  }

  bool eat_arrow() { return eat("->") || eat("\xE2\x86\x92"); }  // U+2192

  TypeExpr parse_type() {
    if (at_keyword_forall()) {
      if (!eat("forall")) eat("\xE2\x88\x80");
      std::vector<std::string> binders{ident()};
      skip_ws();
      while (pos_ < text_.size() && ident_start(text_[pos_]))
        binders.push_back(ident());
      if (!eat(".")) throw ParseError("expected '.' after binder", pos_);
      TypeExpr body = parse_type();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = TypeExpr::forall(*it, body);
      return body;
    }
    TypeExpr left = parse_atom();
    if (eat_arrow()) return TypeExpr::arrow(left, parse_type());
    return left;
  }

  TypeExpr parse_atom() {
    skip_ws();
    if (eat("(")) {
      TypeExpr inner = parse_type();
      if (!eat(")")) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (at_keyword_forall())
      throw ParseError("quantifier on the left of an arrow needs parentheses",
                       pos_);
    return TypeExpr::var(ident());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TypeExpr parse_type(std::string_view text) { return TypeParser(text).parse(); }

// ---------------------------------------------------------------------------
// Algebra

std::set<std::string> free_vars(const TypeExpr& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

namespace detail {

TypeExpr shift(const TypeExpr& t, int delta, int cutoff) {
  switch (t.kind()) {
    case TypeExpr::Kind::kVar:
      return t;
    case TypeExpr::Kind::kBound:
      return t.index() >= cutoff ? TypeExpr::bound(t.index() + delta) : t;
    case TypeExpr::Kind::kArrow:
      return TypeExpr::arrow(shift(t.domain(), delta, cutoff),
                             shift(t.codomain(), delta, cutoff));
    case TypeExpr::Kind::kForall:
      return TypeExpr::forall_raw(t.name(), shift(t.body(), delta, cutoff + 1));
  }
  return t;
}

namespace {
TypeExpr open_at(const TypeExpr& t, const TypeExpr& v, int depth) {
  switch (t.kind()) {
    case TypeExpr::Kind::kVar:
      return t;
    case TypeExpr::Kind::kBound:
      if (t.index() == depth) return v;
      return t.index() > depth ? TypeExpr::bound(t.index() - 1) : t;
    case TypeExpr::Kind::kArrow:
      return TypeExpr::arrow(open_at(t.domain(), v, depth),
                             open_at(t.codomain(), v, depth));
    case TypeExpr::Kind::kForall:
      return TypeExpr::forall_raw(t.name(), open_at(t.body(), v, depth + 1));
  }
  return t;
}
}  // namespace

TypeExpr open(const TypeExpr& body, const TypeExpr& v) {
  return open_at(body, v, 0);
}

}  // namespace detail

TypeExpr prenex(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeExpr::Kind::kVar:
    case TypeExpr::Kind::kBound:
      return t;
    case TypeExpr::Kind::kForall:
      return TypeExpr::forall_raw(t.name(), prenex(t.body()));
    case TypeExpr::Kind::kArrow: {
      TypeExpr domain = prenex(t.domain());
      TypeExpr rest = prenex(t.codomain());
      std::vector<std::string> hints;
      while (rest.is_forall()) {
        hints.push_back(rest.name());
        rest = rest.body();
      }
      TypeExpr out = TypeExpr::arrow(
          detail::shift(domain, static_cast<int>(hints.size())), rest);
      for (auto it = hints.rbegin(); it != hints.rend(); ++it)
        out = TypeExpr::forall_raw(*it, out);
      return out;
    }
  }
  return t;
}

TypeExpr substitute_all(
    const TypeExpr& t,
    const std::vector<std::pair<std::string, TypeExpr>>& assignment) {
  if (assignment.empty()) return t;
  switch (t.kind()) {
    case TypeExpr::Kind::kVar:
      for (const auto& [name, v] : assignment)
        if (name == t.name()) return v;
      return t;
    case TypeExpr::Kind::kBound:
      return t;
    case TypeExpr::Kind::kArrow:
      return TypeExpr::arrow(substitute_all(t.domain(), assignment),
                             substitute_all(t.codomain(), assignment));
    case TypeExpr::Kind::kForall:
      return TypeExpr::forall_raw(t.name(), substitute_all(t.body(), assignment));
  }
  return t;
}

TypeExpr substitute_raw(const TypeExpr& t, const std::string& x,
                        const TypeExpr& v) {
  return substitute_all(t, {{x, v}});
}

TypeExpr substitute(const TypeExpr& t, const std::string& x, const TypeExpr& v) {
  return prenex(substitute_raw(t, x, v));
}

TypeExpr import_prenex(const TypeExpr& t, const TypeExpr& v) {
  TypeExpr p = prenex(t);
  if (!p.is_forall())
    throw TypeError("cannot import into resolved type " + t.to_string());
  return prenex(detail::open(p.body(), v));
}

std::vector<std::string> available_quantifiers(const TypeExpr& t) {
  std::vector<std::string> out;
  const TypeExpr* cur = &t;
  for (;;) {
    if (cur->is_forall()) {
      out.push_back(cur->name());
      cur = &cur->body();
    } else if (cur->is_arrow()) {
      cur = &cur->codomain();
    } else {
      return out;
    }
  }
}

bool is_resolved(const TypeExpr& t) {
  const TypeExpr* cur = &t;
  while (cur->is_arrow()) cur = &cur->codomain();
  return !cur->is_forall();
}

TypeExpr import_lazy(const TypeExpr& t, const TypeExpr& v) {
  if (t.is_forall()) return detail::open(t.body(), v);
  if (t.is_arrow()) return TypeExpr::arrow(t.domain(), import_lazy(t.codomain(), v));
  throw TypeError("cannot import into resolved type " + t.to_string());
}

TypeExpr import_seq(const TypeExpr& t, const std::vector<TypeExpr>& vs) {
  TypeExpr out = t;
  for (const auto& v : vs) out = import_lazy(out, v);
  return out;
}

ResolvedView resolved_view(const TypeExpr& t) {
  ResolvedView view;
  const TypeExpr* cur = &t;
  while (cur->is_arrow()) {
    view.branches.push_back(cur->domain());
    cur = &cur->codomain();
  }
  if (!cur->is_var())
    throw TypeError("type is not resolved: " + t.to_string());
  view.head = cur->name();
  return view;
}

TypeExpr reassemble(const ResolvedView& view) {
  TypeExpr out = TypeExpr::var(view.head);
  for (auto it = view.branches.rbegin(); it != view.branches.rend(); ++it)
    out = TypeExpr::arrow(*it, out);
  return out;
}

std::vector<SpineStep> spine_steps(const TypeExpr& t,
                                   const std::vector<TypeExpr>& imports) {
  std::vector<SpineStep> steps;
  std::size_t next = 0;
  TypeExpr cur = t;
  for (;;) {
    if (cur.is_forall()) {
      if (next >= imports.size())
        throw TypeError("too few imports to resolve " + t.to_string());
      steps.push_back(SpineStep::kType);
      cur = detail::open(cur.body(), imports[next++]);
    } else if (cur.is_arrow()) {
      steps.push_back(SpineStep::kTerm);
      cur = cur.codomain();
    } else {
      break;
    }
  }
  if (next != imports.size())
    throw TypeError("too many imports for " + t.to_string());
  return steps;
}

namespace {

void types_of_size(const std::vector<std::string>& vars, int depth,
                   std::size_t size, std::vector<TypeExpr>& out) {
  if (size == 1) {
    for (const auto& v : vars) out.push_back(TypeExpr::var(v));
    for (int i = 0; i < depth; ++i) out.push_back(TypeExpr::bound(i));
    return;
  }
  for (std::size_t left = 1; left + 1 < size; ++left) {
    std::vector<TypeExpr> ls, rs;
    types_of_size(vars, depth, left, ls);
    if (ls.empty()) continue;
    types_of_size(vars, depth, size - 1 - left, rs);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(TypeExpr::arrow(l, r));
  }
  std::vector<TypeExpr> bodies;
  types_of_size(vars, depth + 1, size - 1, bodies);
  for (auto& b : bodies) out.push_back(TypeExpr::forall_raw("Q", b));
}

}  // namespace

std::vector<TypeExpr> enumerate_types(const std::vector<std::string>& vars,
                                      std::size_t max_size) {
  std::vector<TypeExpr> out;
  for (std::size_t s = 1; s <= max_size; ++s) types_of_size(vars, 0, s, out);
  return out;
}

}  // namespace hypergame
