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

#include "hypergame/transition.hpp"

#include <deque>
#include <functional>
#include <sstream>

namespace hypergame {

std::string Label::to_string() const {
  std::string out = std::to_string(branch);
  if (imports.empty()) return out;
  out += "\xE2\x9F\xA8";  // U+27E8
  for (std::size_t i = 0; i < imports.size(); ++i) {
    if (i) out += ", ";
    out += imports[i].to_string();
  }
  out += "\xE2\x9F\xA9";  // U+27E9
  return out;
}

bool operator<(const Label& a, const Label& b) {
  if (a.branch != b.branch) return a.branch < b.branch;
  return a.imports < b.imports;
}

State State::resolved(TypeExpr t) {
  if (!is_resolved(t))
    throw TypeError("states must be resolved types: " + t.to_string());
  State s;
  s.type_ = std::move(t);
  return s;
}

std::string State::to_string() const {
  return is_initial() ? "\xE2\x8B\x86" : type_->to_string();  // U+22C6
}

TypeExpr TransitionSystem::import_one(const TypeExpr& t, const TypeExpr& v) const {
  return style_ == Style::kLazy ? import_lazy(t, v) : import_prenex(t, v);
}

// t . imports, or nullopt when some import has no quantifier to consume or
// the result is not resolved.
std::optional<TypeExpr> TransitionSystem::resolve_with(
    const TypeExpr& t, const std::vector<TypeExpr>& imports) const {
  TypeExpr cur = style_ == Style::kLazy ? t : prenex(t);
  for (const auto& v : imports) {
    if (is_resolved(cur)) return std::nullopt;
    cur = import_one(cur, v);
  }
  if (!is_resolved(cur)) return std::nullopt;
  return cur;
}

std::optional<State> TransitionSystem::step(const State& state,
                                            const Label& label) const {
  if (label.branch < 1) return std::nullopt;
  if (state.is_initial()) {
    if (label.branch != 1) return std::nullopt;
    auto t = resolve_with(root_, label.imports);
    if (!t) return std::nullopt;
    return State::resolved(*t);
  }
  ResolvedView view = resolved_view(state.type());
  if (static_cast<std::size_t>(label.branch) > view.branches.size())
    return std::nullopt;
  auto t = resolve_with(view.branches[static_cast<std::size_t>(label.branch) - 1],
                        label.imports);
  if (!t) return std::nullopt;
  return State::resolved(*t);
}

std::vector<Label> TransitionSystem::enumerate_labels(
    const State& state, const std::vector<TypeExpr>& universe,
    int max_imports) const {
  std::vector<TypeExpr> branches;
  if (state.is_initial()) {
    branches.push_back(root_);
  } else {
    branches = resolved_view(state.type()).branches;
  }
  std::vector<Label> out;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    std::vector<TypeExpr> imports;
    if (style_ == Style::kPrenex) branches[b] = prenex(branches[b]);
    std::function<void(const TypeExpr&)> grow = [&](const TypeExpr& cur) {
      if (is_resolved(cur)) {
        out.push_back(Label{static_cast<int>(b) + 1, imports});
        return;
      }
      if (static_cast<int>(imports.size()) >= max_imports) return;
      for (const auto& v : universe) {
        imports.push_back(v);
        grow(import_one(cur, v));
        imports.pop_back();
      }
    };
    grow(branches[b]);
  }
  return out;
}

std::string TransitionSystem::colour(const State& state, const Label& label) const {
  auto target = step(state, label);
  if (!target)
    throw TypeError("undefined transition " + label.to_string() + " from " +
                    state.to_string());
  return resolved_view(target->type()).head;
}

std::optional<State> TransitionSystem::run(const std::vector<Label>& labels) const {
  State cur = State::initial();
  for (const auto& l : labels) {
    auto next = step(cur, l);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

TransitionSystem::Fragment TransitionSystem::reachable(
    int depth, const std::vector<TypeExpr>& universe, int max_imports) const {
  Fragment f;
  f.states.push_back(State::initial());
  std::deque<std::pair<int, int>> queue{{0, 0}};
  auto index_of = [&](const State& s) {
    for (std::size_t i = 0; i < f.states.size(); ++i)
      if (f.states[i] == s) return static_cast<int>(i);
    f.states.push_back(s);
    queue.emplace_back(static_cast<int>(f.states.size()) - 1, -1);
    return static_cast<int>(f.states.size()) - 1;
  };
  std::vector<int> dist{0};
  while (!queue.empty()) {
    auto [src, unused] = queue.front();
    queue.pop_front();
    (void)unused;
    if (dist[static_cast<std::size_t>(src)] >= depth) continue;
    const State source = f.states[static_cast<std::size_t>(src)];
    for (const auto& l : enumerate_labels(source, universe, max_imports)) {
      auto target = step(source, l);
      const std::size_t before = f.states.size();
      int dst = index_of(*target);
      if (f.states.size() != before)
        dist.push_back(dist[static_cast<std::size_t>(src)] + 1);
      f.edges.push_back(Edge{src, dst, l});
    }
  }
  return f;
}

TransitionSystem build(const TypeExpr& t) { return TransitionSystem(t); }

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string to_dot(const TransitionSystem::Fragment& fragment) {
  std::ostringstream os;
  os << "digraph transitions {\n";
  for (std::size_t i = 0; i < fragment.states.size(); ++i)
    os << "  s" << i << " [label=\"" << dot_escape(fragment.states[i].to_string())
       << "\"];\n";
  for (const auto& e : fragment.edges)
    os << "  s" << e.source << " -> s" << e.target << " [label=\""
       << dot_escape(e.label.to_string()) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hypergame
