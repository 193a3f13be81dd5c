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

#include "hypergame/strategy.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace hypergame {

Strategy::Strategy() { plays_.emplace(dialogue_key({}), Dialogue{}); }

Strategy Strategy::from_plays(const std::vector<Dialogue>& plays) {
  Strategy s;
  for (const auto& d : plays) s.add_play(d);
  return s;
}

void Strategy::add_play(const Dialogue& d) {
  Dialogue prefix;
  std::string parent = dialogue_key(prefix);
  for (const auto& m : d) {
    prefix.push_back(m);
    std::string key = dialogue_key(prefix);
    if (plays_.emplace(key, prefix).second) children_[parent].push_back(m);
    parent = std::move(key);
  }
}

bool Strategy::contains(const Dialogue& d) const {
  return plays_.count(dialogue_key(d)) != 0;
}

std::vector<Move> Strategy::extensions(const Dialogue& d) const {
  auto it = children_.find(dialogue_key(d));
  if (it == children_.end()) return {};
  return it->second;
}

std::optional<Move> Strategy::respond(const Dialogue& d) const {
  auto it = children_.find(dialogue_key(d));
  if (it == children_.end() || it->second.size() != 1) return std::nullopt;
  return it->second.front();
}

std::vector<Dialogue> Strategy::plays() const {
  std::vector<Dialogue> out;
  for (const auto& [key, d] : plays_) out.push_back(d);
  return out;
}

std::vector<Dialogue> Strategy::maximal_plays() const {
  std::vector<Dialogue> out;
  for (const auto& [key, d] : plays_)
    if (!children_.count(key)) out.push_back(d);
  if (out.empty()) out.push_back({});
  return out;
}

std::size_t Strategy::depth() const {
  std::size_t out = 0;
  for (const auto& [key, d] : plays_) out = std::max(out, d.size());
  return out;
}

std::vector<std::string> Strategy::keys() const {
  std::vector<std::string> out;
  for (const auto& [key, d] : plays_) out.push_back(key);
  return out;
}

Verdict validate_strategy(const TransitionSystem& ts, const Strategy& s, Mode mode) {
  for (const auto& d : s.plays()) {
    if (!d.empty() && !s.contains(Dialogue(d.begin(), d.end() - 1)))
      return {false, "missing prefix", d};
    if (!in_game(ts, d, mode)) return {false, "play outside the game", d};
    if (mode == Mode::kBlackBox && canonicalize_boxes(d) != d)
      return {false, "black boxes not canonically named", d};
    if (d.size() % 2 == 1 && s.extensions(d).size() != 1)
      return {false, s.extensions(d).empty() ? "no response" : "several responses", d};
  }
  return {};
}

Liveness is_live(const TransitionSystem& ts, const Strategy& s, Mode mode,
                 const MoveOptions& options) {
  Liveness out;
  out.universe_relative = mode != Mode::kBlackBox;
  for (const auto& d : s.plays()) {
    if (d.size() % 2 == 1) {
      if (!s.respond(d)) {
        out.live = false;
        out.witness = d;
        return out;
      }
      continue;
    }
    for (const auto& m : legal_moves(ts, d, mode, options)) {
      Dialogue e = d;
      e.push_back(m);
      if (!s.contains(e)) {
        out.live = false;
        out.witness = e;
        return out;
      }
    }
  }
  return out;
}

bool copycat_ok_strategy(const TransitionSystem& ts, const Strategy& s) {
  for (const auto& d : s.maximal_plays())
    if (!copycat_ok(ts, d)) return false;
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(const TransitionSystem& ts, const EnumerationOptions& options)
      : ts_(ts), opts_(options) {}

  std::vector<Strategy> run() {
    std::deque<Dialogue> pending;
    if (!stimuli({}, pending)) return {};
    search(Strategy(), pending);
    return std::move(found_);
  }

 private:
  // Queues the Opponent's extensions of an even play; false when some
  // stimulus could not be answered within the depth bound.
  bool stimuli(const Dialogue& d, std::deque<Dialogue>& pending) const {
    for (const auto& m : legal_moves(ts_, d, opts_.mode, opts_.moves)) {
      if (static_cast<int>(d.size()) + 2 > opts_.depth_bound) return false;
      Dialogue e = d;
      e.push_back(m);
      pending.push_back(std::move(e));
    }
    return true;
  }

  void search(const Strategy& partial, std::deque<Dialogue> pending) {
    if (opts_.limit && found_.size() >= opts_.limit) return;
    if (pending.empty()) {
      found_.push_back(partial);
      return;
    }
    Dialogue q = std::move(pending.front());
    pending.pop_front();
    for (const auto& n : legal_moves(ts_, q, opts_.mode, opts_.moves)) {
      Dialogue p = q;
      p.push_back(n);
      if (opts_.require_copycat && !copycat_ok(ts_, p)) continue;
      std::deque<Dialogue> next = pending;
      if (!stimuli(p, next)) continue;
      Strategy s = partial;
      s.add_play(p);
      search(s, std::move(next));
    }
  }

  const TransitionSystem& ts_;
  EnumerationOptions opts_;
  std::vector<Strategy> found_;
};

}  // namespace

std::vector<Strategy> enumerate_strategies(const TransitionSystem& ts,
                                           const EnumerationOptions& options) {
  auto out = Enumerator(ts, options).run();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypergame
