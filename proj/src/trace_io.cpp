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

#include "hypergame/trace_io.hpp"

#include <charconv>
#include <optional>

namespace hypergame {

namespace {

std::string move_line(std::size_t j, int back_ref, const Label& l) {
  std::string out = std::to_string(j) + ": (" + std::to_string(back_ref) +
                    ") branch=" + std::to_string(l.branch) + " imports=[";
  for (std::size_t i = 0; i < l.imports.size(); ++i) {
    if (i) out += ";";
    out += l.imports[i].to_string();
  }
  return out + "]";
}

struct Line {
  int index;
  int back_ref;
  Label label;
  std::optional<Party> by;
};

// Splits into blocks of non-blank, non-comment lines, remembering the
// offset of every line for error messages.
std::vector<std::vector<std::pair<std::string_view, std::size_t>>> blocks(std::string_view text) {
  std::vector<std::vector<std::pair<std::string_view, std::size_t>>> out(1);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < line.size() && line[lead] == ' ') ++lead;
    if (lead == line.size()) {
      if (!out.back().empty()) out.emplace_back();
    } else if (line[lead] != '#') {
      out.back().emplace_back(line.substr(lead), pos + lead);
    }
    pos = end + 1;
  }
  if (out.back().empty()) out.pop_back();
  return out;
}

int read_int(std::string_view& s, std::size_t at) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p == s.data()) throw ParseError("expected a number", at);
  s.remove_prefix(static_cast<std::size_t>(p - s.data()));
  return v;
}

void expect(std::string_view& s, std::string_view lit, std::size_t at) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (s.substr(0, lit.size()) != lit) throw ParseError("expected '" + std::string(lit) + "'", at);
  s.remove_prefix(lit.size());
}

Line parse_line(std::string_view s, std::size_t at) {
  Line l;
  const std::size_t n = s.size();
  auto here = [&] { return at + (n - s.size()); };
  l.index = read_int(s, here());
  expect(s, ":", here());
  expect(s, "(", here());
  l.back_ref = read_int(s, here());
  expect(s, ")", here());
  expect(s, "branch=", here());
  l.label.branch = read_int(s, here());
  expect(s, "imports=[", here());
  const std::size_t close = s.find(']');
  if (close == std::string_view::npos) throw ParseError("unterminated import list", here());
  std::string_view list = s.substr(0, close);
  std::size_t base = here();
  while (!list.empty()) {
    const std::size_t semi = list.find(';');
    const std::string_view item = list.substr(0, semi);
    try {
      l.label.imports.push_back(parse_type(item));
    } catch (const ParseError& e) {
      throw ParseError("bad import type", base + e.position());
    }
    if (semi == std::string_view::npos) break;
    list.remove_prefix(semi + 1);
    base += semi + 1;
  }
  s.remove_prefix(close + 1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (s.substr(0, 3) == "by=") {
    s.remove_prefix(3);
    if (s == "ext") {
      l.by = Party::kExternal;
    } else if (s == "fun") {
      l.by = Party::kFunction;
    } else if (s == "arg") {
      l.by = Party::kArgument;
    } else {
      throw ParseError("unknown participant", here());
    }
    s = {};
  }
  if (!s.empty()) throw ParseError("trailing text", here());
  return l;
}

std::vector<Line> parse_block(const std::vector<std::pair<std::string_view, std::size_t>>& block) {
  std::vector<Line> out;
  for (const auto& [text, at] : block) {
    Line l = parse_line(text, at);
    if (l.index != static_cast<int>(out.size()) + 1)
      throw ParseError("moves must be numbered 1, 2, ...", at);
    out.push_back(std::move(l));
  }
  return out;
}

Dialogue to_dialogue(const std::vector<Line>& lines,
                     const std::vector<std::pair<std::string_view, std::size_t>>& block) {
  Dialogue d;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].by) throw ParseError("unexpected participant column", block[i].second);
    d.push_back(Move{lines[i].back_ref, lines[i].label});
  }
  if (!well_formed(d)) throw ParseError("pointers are not well formed", block.front().second);
  return d;
}

}  // namespace

std::string write_dialogue(const Dialogue& d) {
  std::string out;
  for (std::size_t j = 0; j < d.size(); ++j) out += move_line(j + 1, d[j].back_ref, d[j].label) + "\n";
  return out;
}

Dialogue read_dialogue(std::string_view text) {
  const auto bs = blocks(text);
  if (bs.empty()) return {};
  if (bs.size() > 1) throw ParseError("a dialogue is a single block", bs[1].front().second);
  return to_dialogue(parse_block(bs[0]), bs[0]);
}

std::string write_strategy(const Strategy& s) {
  std::string out;
  for (const auto& d : s.maximal_plays()) {
    if (d.empty()) continue;
    if (!out.empty()) out += "\n";
    out += write_dialogue(d);
  }
  return out;
}

Strategy read_strategy(std::string_view text) {
  Strategy s;
  for (const auto& b : blocks(text)) s.add_play(to_dialogue(parse_block(b), b));
  return s;
}

std::string write_transcript(const Transcript& t) {
  std::string out;
  for (const auto& run : t) {
    if (!out.empty()) out += "\n";
    for (std::size_t j = 0; j < run.size(); ++j)
      out += move_line(j + 1, run[j].justifier, run[j].label) + " by=" + party_name(run[j].by) + "\n";
  }
  return out;
}

Transcript read_transcript(std::string_view text) {
  Transcript t;
  for (const auto& b : blocks(text)) {
    std::vector<TranscriptEntry> run;
    const auto lines = parse_block(b);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!lines[i].by) throw ParseError("missing participant column", b[i].second);
      run.push_back({*lines[i].by, lines[i].back_ref, lines[i].label});
    }
    t.push_back(std::move(run));
  }
  return t;
}

}  // namespace hypergame
