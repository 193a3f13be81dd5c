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

#include "hypergame/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hypergame {

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVar;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::abs(std::string name, TypeExpr annotation, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAbs;
  n->name = std::move(name);
  n->type = std::move(annotation);
  n->left = std::make_shared<const Term>(std::move(body));
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kApp;
  n->left = std::make_shared<const Term>(std::move(fun));
  n->right = std::make_shared<const Term>(std::move(arg));
  return Term(std::move(n));
}

Term Term::tyabs(std::string tyvar, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kTyAbs;
  n->name = std::move(tyvar);
  n->left = std::make_shared<const Term>(std::move(body));
  return Term(std::move(n));
}

Term Term::tyapp(Term fun, TypeExpr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kTyApp;
  n->type = std::move(arg);
  n->left = std::make_shared<const Term>(std::move(fun));
  return Term(std::move(n));
}

std::size_t Term::size() const {
  switch (kind()) {
    case Kind::kVar:
      return 1;
    case Kind::kAbs:
    case Kind::kTyAbs:
      return 1 + body().size();
    case Kind::kApp:
      return 1 + fun().size() + arg().size();
    case Kind::kTyApp:
      return 1 + fun().size() + type_arg().size();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string annotation_text(const TypeExpr& t) {
  std::string s = t.to_string();
  if (s.find('.') != std::string::npos) s = "(" + s + ")";
  return s;
}

bool is_binder(const Term& t) {
  return t.kind() == Term::Kind::kAbs || t.kind() == Term::Kind::kTyAbs;
}

std::string print(const Term& t);

// Operand of an application or type application.
std::string print_atom(const Term& t) {
  if (t.kind() == Term::Kind::kVar) return t.name();
  return "(" + print(t) + ")";
}

std::string print(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t.name();
    case Term::Kind::kAbs:
      return "\\" + t.name() + ":" + annotation_text(t.annotation()) + ". " +
             print(t.body());
    case Term::Kind::kTyAbs:
      return "/\\" + t.name() + ". " + print(t.body());
    case Term::Kind::kApp: {
      std::string f = is_binder(t.fun()) ? "(" + print(t.fun()) + ")" : print(t.fun());
      return f + " " + print_atom(t.arg());
    }
    case Term::Kind::kTyApp: {
      std::string f = is_binder(t.fun()) ? "(" + print(t.fun()) + ")" : print(t.fun());
      return f + " [" + t.type_arg().to_string() + "]";
    }
  }
  return {};
}

}  // namespace

std::string Term::to_string() const { return print(*this); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
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

  bool peek(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    }
    if (start == pos_) throw ParseError("expected identifier", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  // Text up to `stop` at bracket depth zero, parsed as a type.
  TypeExpr type_until(char stop) {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (depth == 0 && c == stop) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      ++pos_;
    }
    if (pos_ >= text_.size())
      throw ParseError(std::string("expected '") + stop + "'", pos_);
    try {
      return parse_type(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError("bad type", start + e.position());
    }
  }

  bool at_lambda() { return peek("\\") || peek("\xCE\xBB"); }         // λ
  bool at_type_lambda() { return peek("/\\") || peek("\xCE\x9B"); }  // Λ

  Term term() {
    if (eat("/\\") || eat("\xCE\x9B")) {
      std::string x = ident();
      if (!eat(".")) throw ParseError("expected '.'", pos_);
      return Term::tyabs(x, term());
    }
    if (eat("\\") || eat("\xCE\xBB")) {
      std::string x = ident();
      if (!eat(":")) throw ParseError("expected ':'", pos_);
      TypeExpr ann = type_until('.');
      ++pos_;
      return Term::abs(x, ann, term());
    }
    Term head = atom();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || peek(")")) return head;
      if (eat("[")) {
        TypeExpr v = type_until(']');
        ++pos_;
        head = Term::tyapp(head, v);
      } else if (at_type_lambda() || at_lambda()) {
        return Term::app(head, term());
      } else {
        head = Term::app(head, atom());
      }
    }
  }

  Term atom() {
    if (eat("(")) {
      Term t = term();
      if (!eat(")")) throw ParseError("expected ')'", pos_);
      return t;
    }
    return Term::var(ident());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

// ---------------------------------------------------------------------------
// Variables, alpha-equivalence, substitution

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& bound,
                       std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (!bound.count(t.name())) out.insert(t.name());
      break;
    case Term::Kind::kAbs: {
      const bool fresh = bound.insert(t.name()).second;
      collect_term_vars(t.body(), bound, out);
      if (fresh) bound.erase(t.name());
      break;
    }
    case Term::Kind::kApp:
      collect_term_vars(t.fun(), bound, out);
      collect_term_vars(t.arg(), bound, out);
      break;
    case Term::Kind::kTyAbs:
    case Term::Kind::kTyApp:
      collect_term_vars(t.body(), bound, out);
      break;
  }
}

void collect_type_vars(const Term& t, std::set<std::string>& bound,
                       std::set<std::string>& out) {
  auto add = [&](const TypeExpr& ty) {
    for (const auto& x : free_vars(ty))
      if (!bound.count(x)) out.insert(x);
  };
  switch (t.kind()) {
    case Term::Kind::kVar:
      break;
    case Term::Kind::kAbs:
      add(t.annotation());
      collect_type_vars(t.body(), bound, out);
      break;
    case Term::Kind::kApp:
      collect_type_vars(t.fun(), bound, out);
      collect_type_vars(t.arg(), bound, out);
      break;
    case Term::Kind::kTyAbs: {
      const bool fresh = bound.insert(t.name()).second;
      collect_type_vars(t.body(), bound, out);
      if (fresh) bound.erase(t.name());
      break;
    }
    case Term::Kind::kTyApp:
      add(t.type_arg());
      collect_type_vars(t.fun(), bound, out);
      break;
  }
}

void collect_all_names(const Term& t, std::set<std::string>& out) {
  out.insert(t.name());
  switch (t.kind()) {
    case Term::Kind::kVar:
      break;
    case Term::Kind::kAbs:
      for (const auto& x : free_vars(t.annotation())) out.insert(x);
      collect_all_names(t.body(), out);
      break;
    case Term::Kind::kApp:
      collect_all_names(t.fun(), out);
      collect_all_names(t.arg(), out);
      break;
    case Term::Kind::kTyAbs:
      collect_all_names(t.body(), out);
      break;
    case Term::Kind::kTyApp:
      for (const auto& x : free_vars(t.type_arg())) out.insert(x);
      collect_all_names(t.fun(), out);
      break;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += "'";
  return n;
}

}  // namespace

std::set<std::string> free_term_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_term_vars(t, bound, out);
  return out;
}

std::set<std::string> free_type_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_type_vars(t, bound, out);
  return out;
}

namespace {

// Scoped renaming of bound names to de Bruijn-like levels.
struct AlphaEnv {
  std::vector<std::pair<std::string, int>> terms;
  std::vector<std::pair<std::string, int>> types;
  int level = 0;

  static std::optional<int> lookup(const std::vector<std::pair<std::string, int>>& env,
                                   const std::string& x) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == x) return it->second;
    return std::nullopt;
  }

  TypeExpr canon(const TypeExpr& t) const {
    std::vector<std::pair<std::string, TypeExpr>> ren;
    for (const auto& x : free_vars(t))
      if (auto l = lookup(types, x)) ren.emplace_back(x, TypeExpr::var("%" + std::to_string(*l)));
    return substitute_all(t, ren);
  }
};

bool alpha(const Term& a, AlphaEnv& ea, const Term& b, AlphaEnv& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar: {
      auto la = AlphaEnv::lookup(ea.terms, a.name());
      auto lb = AlphaEnv::lookup(eb.terms, b.name());
      if (la || lb) return la == lb;
      return a.name() == b.name();
    }
    case Term::Kind::kAbs: {
      if (ea.canon(a.annotation()) != eb.canon(b.annotation())) return false;
      const int l = ea.level++;
      eb.level++;
      ea.terms.emplace_back(a.name(), l);
      eb.terms.emplace_back(b.name(), l);
      const bool ok = alpha(a.body(), ea, b.body(), eb);
      ea.terms.pop_back();
      eb.terms.pop_back();
      return ok;
    }
    case Term::Kind::kTyAbs: {
      const int l = ea.level++;
      eb.level++;
      ea.types.emplace_back(a.name(), l);
      eb.types.emplace_back(b.name(), l);
      const bool ok = alpha(a.body(), ea, b.body(), eb);
      ea.types.pop_back();
      eb.types.pop_back();
      return ok;
    }
    case Term::Kind::kApp:
      return alpha(a.fun(), ea, b.fun(), eb) && alpha(a.arg(), ea, b.arg(), eb);
    case Term::Kind::kTyApp:
      return ea.canon(a.type_arg()) == eb.canon(b.type_arg()) &&
             alpha(a.fun(), ea, b.fun(), eb);
  }
  return false;
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  AlphaEnv ea, eb;
  return alpha(a, ea, b, eb);
}

Term subst_type(const Term& t, const std::string& x, const TypeExpr& v) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t;
    case Term::Kind::kAbs:
      return Term::abs(t.name(), substitute_raw(t.annotation(), x, v),
                       subst_type(t.body(), x, v));
    case Term::Kind::kApp:
      return Term::app(subst_type(t.fun(), x, v), subst_type(t.arg(), x, v));
    case Term::Kind::kTyAbs: {
      if (t.name() == x) return t;
      const auto fv = free_vars(v);
      if (!fv.count(t.name())) return Term::tyabs(t.name(), subst_type(t.body(), x, v));
      std::set<std::string> avoid = fv;
      collect_all_names(t.body(), avoid);
      avoid.insert(x);
      const std::string y = fresh_name(t.name(), avoid);
      Term body = subst_type(t.body(), t.name(), TypeExpr::var(y));
      return Term::tyabs(y, subst_type(body, x, v));
    }
    case Term::Kind::kTyApp:
      return Term::tyapp(subst_type(t.fun(), x, v), substitute_raw(t.type_arg(), x, v));
  }
  return t;
}

Term subst_term(const Term& t, const std::string& x, const Term& u) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t.name() == x ? u : t;
    case Term::Kind::kAbs: {
      if (t.name() == x) return t;
      const auto fv = free_term_vars(u);
      if (!fv.count(t.name()))
        return Term::abs(t.name(), t.annotation(), subst_term(t.body(), x, u));
      std::set<std::string> avoid = fv;
      collect_all_names(t.body(), avoid);
      avoid.insert(x);
      const std::string y = fresh_name(t.name(), avoid);
      Term body = subst_term(t.body(), t.name(), Term::var(y));
      return Term::abs(y, t.annotation(), subst_term(body, x, u));
    }
    case Term::Kind::kApp:
      return Term::app(subst_term(t.fun(), x, u), subst_term(t.arg(), x, u));
    case Term::Kind::kTyAbs: {
      const auto ftv = free_type_vars(u);
      if (!ftv.count(t.name())) return Term::tyabs(t.name(), subst_term(t.body(), x, u));
      std::set<std::string> avoid = ftv;
      collect_all_names(t.body(), avoid);
      const std::string y = fresh_name(t.name(), avoid);
      Term body = subst_type(t.body(), t.name(), TypeExpr::var(y));
      return Term::tyabs(y, subst_term(body, x, u));
    }
    case Term::Kind::kTyApp:
      return Term::tyapp(subst_term(t.fun(), x, u), t.type_arg());
  }
  return t;
}

}  // namespace hypergame
