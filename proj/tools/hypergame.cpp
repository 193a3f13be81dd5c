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

// Command-line front end. Everything goes through the C interface.
//
// Exit codes: 0 success, 1 user error, 2 internal guard (step budget,
// engine disagreement, internal failure).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hypergame.h"

namespace {

struct Failure {
  int code;
  std::string message;
};

int exit_code(hg_status s) {
  switch (s) {
    case HG_OK: return 0;
    case HG_ERR_BUDGET:
    case HG_ERR_INTERNAL: return 2;
    default: return 1;
  }
}

void check(hg_status s) {
  if (s != HG_OK) throw Failure{exit_code(s), std::string(hg_status_name(s)) + ": " + hg_last_error()};
}

struct Text {
  char* p = nullptr;
  ~Text() { hg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <typename T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using Type = std::unique_ptr<hg_type, Deleter<hg_type, hg_type_free>>;
using TermH = std::unique_ptr<hg_term, Deleter<hg_term, hg_term_free>>;
using StrategyH = std::unique_ptr<hg_strategy, Deleter<hg_strategy, hg_strategy_free>>;

Type parse_type(const std::string& s) {
  hg_type* t = nullptr;
  check(hg_type_parse(s.c_str(), &t));
  return Type(t);
}

TermH parse_term(const std::string& s) {
  hg_term* t = nullptr;
  check(hg_term_parse(s.c_str(), &t));
  return TermH(t);
}

std::string type_text(const hg_type* t) {
  Text s;
  check(hg_type_to_string(t, &s.p));
  return s.str();
}

std::string term_text(const hg_term* t) {
  Text s;
  check(hg_term_to_string(t, &s.p));
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{1, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{1, "cannot write " + path};
  out << text;
}

hg_mode parse_mode(const std::string& m, const hg_type* t) {
  if (m == "auto") return HG_MODE_AUTO;
  if (m == "full") return HG_MODE_FULL;
  if (m == "p" || m == "pbacktracking") return HG_MODE_P_BACKTRACKING;
  if (m == "blackbox") return HG_MODE_BLACK_BOX;
  if (m == "lambda") {
    if (hg_type_is_closed(t) && type_text(t).find("forall") != std::string::npos)
      throw Failure{1, "lambda mode needs a quantifier-free type"};
    return HG_MODE_P_BACKTRACKING;
  }
  throw Failure{1, "unknown mode " + m};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

// The interactive session: the user plays the Opponent.
int play(const std::string& term_text_in, const std::string& save, std::istream& in) {
  TermH term = parse_term(term_text_in);
  hg_type* raw = nullptr;
  check(hg_term_typecheck(term.get(), &raw));
  Type ty(raw);
  hg_strategy* sraw = nullptr;
  check(hg_strategy_compile(term.get(), ty.get(), &sraw));
  StrategyH strategy(sraw);

  std::cout << "playing " << term_text(term.get()) << " : " << type_text(ty.get()) << "\n";
  std::string dialogue;
  while (true) {
    Text moves;
    check(hg_opponent_moves(ty.get(), dialogue.c_str(), HG_MODE_AUTO, &moves.p));
    const auto options = lines(moves.str());
    if (options.empty()) {
      std::cout << "no legal Opponent move; session over\n";
      break;
    }
    std::cout << "your moves:\n";
    for (std::size_t i = 0; i < options.size(); ++i) std::cout << "  [" << i + 1 << "] " << options[i] << "\n";
    std::size_t choice = 0;
    while (true) {
      std::cout << "> " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        std::cout << "\n";
        write_output(save, dialogue);
        return 0;
      }
      try {
        choice = std::stoul(line);
      } catch (const std::exception&) {
        choice = 0;
      }
      if (choice >= 1 && choice <= options.size()) break;
      std::cout << "pick a number between 1 and " << options.size() << "\n";
    }
    dialogue += options[choice - 1] + "\n";
    Text answer;
    check(hg_strategy_respond(strategy.get(), dialogue.c_str(), &answer.p));
    if (!answer.p) throw Failure{2, "compiled strategy has no answer"};
    std::cout << "P: " << answer.str();
    dialogue += answer.str();
  }
  write_output(save, dialogue);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game semantics for System F: transition systems, dialogues, strategies"};
  app.require_subcommand(1);

  std::string type_arg, term_arg, universe, output, mode = "auto", engine = "both",
                                                    transcript_path, strategy_file;
  int graph_depth = 3, strategy_depth = 4, check_depth = 10, length = 4, max_imports = 4;
  bool dot = false, all = false;
  std::size_t budget = 0, term_bound = 12;

  auto* prenex_cmd = app.add_subcommand("prenex", "Pull every quantifier to the front");
  prenex_cmd->add_option("type", type_arg, "Type text")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Reachable fragment of the transition system");
  graph_cmd->add_option("type", type_arg, "Type text")->required();
  graph_cmd->add_option("--depth", graph_depth, "Transitions from the initial state")->capture_default_str();
  graph_cmd->add_option("--universe", universe, "Import types, separated by ';'");
  graph_cmd->add_flag("--dot", dot, "Print Graphviz text instead of counts");

  auto* traces_cmd = app.add_subcommand("traces", "Traces of the game seen from the root");
  traces_cmd->add_option("type", type_arg, "Type text")->required();
  traces_cmd->add_option("--length", length, "Maximum trace length")->capture_default_str();
  traces_cmd->add_option("--universe", universe, "Import types, separated by ';'");
  traces_cmd->add_option("--max-imports", max_imports, "Imports per label")->capture_default_str();

  auto* strategies_cmd = app.add_subcommand("strategies", "Enumerate finite live strategies");
  strategies_cmd->add_option("type", type_arg, "Type text")->required();
  strategies_cmd->add_option("--depth", strategy_depth, "Maximum play length")->capture_default_str();
  strategies_cmd->add_option("--mode", mode, "auto, full, p, blackbox or lambda")->capture_default_str();
  strategies_cmd->add_option("--universe", universe, "Player import types, separated by ';'");
  strategies_cmd->add_flag("--all", all, "Keep strategies that are not copycat");
  strategies_cmd->add_option("-o,--output", output, "Output file");

  auto* compile_cmd = app.add_subcommand("compile", "Strategy of a closed normal term");
  compile_cmd->add_option("term", term_arg, "Term text")->required();
  compile_cmd->add_option("--type", type_arg, "Type (defaults to the inferred one)");
  compile_cmd->add_option("-o,--output", output, "Strategy file");

  auto* readback_cmd = app.add_subcommand("readback", "Term of a strategy file");
  readback_cmd->add_option("file", strategy_file, "Strategy file")->required();
  readback_cmd->add_option("--type", type_arg, "Type of the game")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form by syntax, by interaction, or both");
  normalize_cmd->add_option("term", term_arg, "Term text")->required();
  normalize_cmd->add_option("--engine", engine, "games, syntax or both")->capture_default_str();
  normalize_cmd->add_option("--budget", budget, "Interaction step budget (0: default)");
  normalize_cmd->add_option("--transcript", transcript_path, "Write the interaction transcript here");

  auto* check_cmd = app.add_subcommand("check", "Compare normal terms with strategies");
  check_cmd->add_option("type", type_arg, "Type text")->required();
  check_cmd->add_option("--terms", term_bound, "Term size bound")->capture_default_str();
  check_cmd->add_option("--depth", check_depth, "Play length bound")->capture_default_str();
  check_cmd->add_option("--mode", mode, "auto, lambda or blackbox")->capture_default_str();

  auto* play_cmd = app.add_subcommand("play", "Play the Opponent against a compiled term");
  play_cmd->add_option("term", term_arg, "Term text")->required();
  play_cmd->add_option("--save", output, "Transcript file (default: print at the end)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // usage errors are user errors
  }

  try {
    if (*prenex_cmd) {
      Type t = parse_type(type_arg);
      hg_type* p = nullptr;
      check(hg_type_prenex(t.get(), &p));
      Type pt(p);
      std::cout << type_text(pt.get()) << "\n";
    } else if (*graph_cmd) {
      Type t = parse_type(type_arg);
      if (dot) {
        Text s;
        check(hg_graph_dot(t.get(), graph_depth, universe.c_str(), &s.p));
        std::cout << s.str();
      } else {
        std::size_t states = 0, edges = 0;
        check(hg_graph_size(t.get(), graph_depth, universe.c_str(), &states, &edges));
        std::cout << "states: " << states << ", edges: " << edges << "\n";
      }
    } else if (*traces_cmd) {
      Type t = parse_type(type_arg);
      Text s;
      check(hg_traces(t.get(), length, universe.c_str(), max_imports, &s.p));
      std::cout << s.str();
    } else if (*strategies_cmd) {
      Type t = parse_type(type_arg);
      Text s;
      std::size_t count = 0;
      check(hg_strategies_enumerate(t.get(), parse_mode(mode, t.get()), strategy_depth, all ? 0 : 1,
                                    universe.c_str(), &count, &s.p));
      write_output(output, s.str());
      std::cerr << count << " strateg" << (count == 1 ? "y" : "ies") << "\n";
    } else if (*compile_cmd) {
      TermH term = parse_term(term_arg);
      hg_type* raw = nullptr;
      if (type_arg.empty()) {
        check(hg_term_typecheck(term.get(), &raw));
      } else {
        check(hg_type_parse(type_arg.c_str(), &raw));
      }
      Type ty(raw);
      hg_strategy* s = nullptr;
      check(hg_strategy_compile(term.get(), ty.get(), &s));
      StrategyH strategy(s);
      Text out;
      check(hg_strategy_write(strategy.get(), &out.p));
      write_output(output, out.str());
    } else if (*readback_cmd) {
      Type ty = parse_type(type_arg);
      hg_strategy* s = nullptr;
      check(hg_strategy_read(read_file(strategy_file).c_str(), &s));
      StrategyH strategy(s);
      hg_term* t = nullptr;
      check(hg_strategy_readback(strategy.get(), ty.get(), &t));
      TermH term(t);
      std::cout << term_text(term.get()) << "\n";
    } else if (*normalize_cmd) {
      if (engine != "games" && engine != "syntax" && engine != "both")
        throw Failure{1, "unknown engine " + engine};
      TermH term = parse_term(term_arg);
      TermH syntactic, games;
      if (engine != "games") {
        hg_term* out = nullptr;
        check(hg_term_normalize(term.get(), HG_ENGINE_SYNTAX, 0, &out, nullptr));
        syntactic.reset(out);
        std::cout << (engine == "both" ? "syntax: " : "") << term_text(syntactic.get()) << "\n";
      }
      if (engine != "syntax") {
        hg_term* out = nullptr;
        Text transcript;
        const hg_status st = hg_term_normalize(term.get(), HG_ENGINE_GAMES, budget, &out,
                                               &transcript.p);
        if (st == HG_ERR_BUDGET) {
          std::cerr << hg_last_error() << "\npartial transcript:\n" << transcript.str();
          if (!transcript_path.empty()) write_output(transcript_path, transcript.str());
          return 2;
        }
        check(st);
        games.reset(out);
        if (!transcript_path.empty()) write_output(transcript_path, transcript.str());
        std::cout << (engine == "both" ? "games:  " : "") << term_text(games.get()) << "\n";
      }
      if (engine == "both") {
        if (!hg_term_alpha_equal(syntactic.get(), games.get())) {
          std::cout << "DISAGREE\n";
          return 2;
        }
        std::cout << "AGREE\n";
      }
    } else if (*check_cmd) {
      Type t = parse_type(type_arg);
      parse_mode(mode, t.get());
      int ok = 0;
      Text summary;
      check(hg_check_bijection(t.get(), term_bound, check_depth, &ok, &summary.p));
      std::cout << summary.str();
      return ok ? 0 : 2;
    } else if (*play_cmd) {
      return play(term_arg, output, std::cin);
    }
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return f.code;
  }
  return 0;
}
