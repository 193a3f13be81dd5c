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

#include "hypergame.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hypergame/trace_io.hpp"

struct hg_type {
  hypergame::TypeExpr value;
};
struct hg_term {
  hypergame::Term value;
};
struct hg_strategy {
  hypergame::Strategy value;
};

namespace {

using namespace hypergame;

thread_local std::string g_error;

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

hg_status fail(hg_status status, std::string what) {
  g_error = std::move(what);
  return status;
}

// Runs f, translating exceptions into status codes. Nothing escapes.
template <typename F>
hg_status api(F&& f) noexcept {
  try {
    g_error.clear();
    f();
    return HG_OK;
  } catch (const ArgumentError& e) {
    return fail(HG_ERR_ARGUMENT, e.what());
  } catch (const ParseError& e) {
    return fail(HG_ERR_PARSE, e.what());
  } catch (const TermTypeError& e) {
    return fail(HG_ERR_TYPE, e.what());
  } catch (const TypeError& e) {
    return fail(HG_ERR_TYPE, e.what());
  } catch (const DialogueError& e) {
    return fail(HG_ERR_DIALOGUE, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(HG_ERR_BUDGET, e.what());
  } catch (const InteractionError& e) {
    std::string what = e.what();
    if (!e.witness().empty()) what += "\nwitness:\n" + write_dialogue(e.witness());
    return fail(HG_ERR_INTERACTION, what);
  } catch (const std::bad_alloc&) {
    return fail(HG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HG_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename... Ts>
void require(const Ts*... ps) {
  if (((ps == nullptr) || ...)) throw ArgumentError("null argument");
}

std::vector<TypeExpr> parse_universe(const char* text) {
  std::vector<TypeExpr> out;
  if (!text) return out;
  std::string_view rest(text);
  while (true) {
    const std::size_t semi = rest.find(';');
    std::string_view item = rest.substr(0, semi);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(parse_type(item));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return out;
}

Mode resolve_mode(hg_mode mode, const TypeExpr& ty) {
  switch (mode) {
    case HG_MODE_FULL: return Mode::kFull;
    case HG_MODE_P_BACKTRACKING: return Mode::kPBacktracking;
    case HG_MODE_BLACK_BOX: return Mode::kBlackBox;
    case HG_MODE_AUTO: return game_mode(ty);
  }
  throw ArgumentError("unknown mode");
}

// The line for move m at 1-based position `index`.
std::string move_line(std::size_t index, const Move& m) {
  std::string line = write_dialogue({m});
  line.replace(0, line.find(':'), std::to_string(index));
  return line;
}

}  // namespace

extern "C" {

const char* hg_last_error(void) { return g_error.c_str(); }

const char* hg_status_name(hg_status status) {
  switch (status) {
    case HG_OK: return "ok";
    case HG_ERR_PARSE: return "parse error";
    case HG_ERR_TYPE: return "type error";
    case HG_ERR_DIALOGUE: return "dialogue error";
    case HG_ERR_INTERACTION: return "interaction error";
    case HG_ERR_BUDGET: return "budget exhausted";
    case HG_ERR_ARGUMENT: return "invalid argument";
    case HG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hg_string_free(char* s) { std::free(s); }

hg_status hg_type_parse(const char* text, hg_type** out) {
  return api([&] {
    require(text, out);
    *out = new hg_type{parse_type(text)};
  });
}

void hg_type_free(hg_type* t) { delete t; }

hg_status hg_type_to_string(const hg_type* t, char** out) {
  return api([&] {
    require(t, out);
    *out = dup(t->value.to_string());
  });
}

hg_status hg_type_prenex(const hg_type* t, hg_type** out) {
  return api([&] {
    require(t, out);
    *out = new hg_type{prenex(t->value)};
  });
}

int hg_type_equal(const hg_type* a, const hg_type* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

int hg_type_is_closed(const hg_type* t) { return t && free_vars(t->value).empty() ? 1 : 0; }

hg_status hg_graph_dot(const hg_type* t, int depth, const char* universe, char** out) {
  return api([&] {
    require(t, out);
    if (depth < 0) throw ArgumentError("negative depth");
    const TransitionSystem ts(t->value);
    *out = dup(to_dot(ts.reachable(depth, parse_universe(universe))));
  });
}

hg_status hg_graph_size(const hg_type* t, int depth, const char* universe, size_t* states,
                        size_t* edges) {
  return api([&] {
    require(t, states, edges);
    if (depth < 0) throw ArgumentError("negative depth");
    const auto f = TransitionSystem(t->value).reachable(depth, parse_universe(universe));
    *states = f.states.size();
    *edges = f.edges.size();
  });
}

hg_status hg_traces(const hg_type* t, int max_length, const char* universe, int max_imports,
                    char** out) {
  return api([&] {
    require(t, out);
    if (max_length < 0 || max_imports < 0) throw ArgumentError("negative bound");
    std::string text;
    for (const auto& tr : root_traces(TransitionSystem(t->value), max_length,
                                      parse_universe(universe), max_imports))
      text += trace_to_string(tr) + "\n";
    *out = dup(text);
  });
}

hg_status hg_term_parse(const char* text, hg_term** out) {
  return api([&] {
    require(text, out);
    *out = new hg_term{parse_term(text)};
  });
}

void hg_term_free(hg_term* t) { delete t; }

hg_status hg_term_to_string(const hg_term* t, char** out) {
  return api([&] {
    require(t, out);
    *out = dup(t->value.to_string());
  });
}

hg_status hg_term_typecheck(const hg_term* t, hg_type** out) {
  return api([&] {
    require(t, out);
    *out = new hg_type{typecheck(t->value)};
  });
}

int hg_term_alpha_equal(const hg_term* a, const hg_term* b) {
  return a && b && alpha_equal(a->value, b->value) ? 1 : 0;
}

hg_status hg_term_normalize(const hg_term* t, hg_engine engine, size_t budget, hg_term** out,
                            char** transcript) {
  if (transcript) *transcript = nullptr;
  return api([&] {
    require(t, out);
    const TypeExpr ty = typecheck(t->value);
    if (engine == HG_ENGINE_SYNTAX) {
      *out = new hg_term{eta_long(beta_normalize(t->value), ty)};
      return;
    }
    if (engine != HG_ENGINE_GAMES) throw ArgumentError("unknown engine");
    InteractionOptions options;
    if (budget) options.budget = budget;
    Transcript tr;
    try {
      Term n = normalize_via_games(t->value, options, transcript ? &tr : nullptr);
      if (transcript) *transcript = dup(write_transcript(tr));
      *out = new hg_term{std::move(n)};
    } catch (const BudgetExceeded& e) {
      if (transcript) {
        tr.push_back(e.partial());
        *transcript = dup(write_transcript(tr));
      }
      throw;
    }
  });
}

void hg_strategy_free(hg_strategy* s) { delete s; }

hg_status hg_strategy_compile(const hg_term* t, const hg_type* ty, hg_strategy** out) {
  return api([&] {
    require(t, ty, out);
    *out = new hg_strategy{term_to_strategy(t->value, ty->value)};
  });
}

hg_status hg_strategy_readback(const hg_strategy* s, const hg_type* ty, hg_term** out) {
  return api([&] {
    require(s, ty, out);
    *out = new hg_term{strategy_to_term(s->value, ty->value)};
  });
}

hg_status hg_strategy_read(const char* text, hg_strategy** out) {
  return api([&] {
    require(text, out);
    *out = new hg_strategy{read_strategy(text)};
  });
}

hg_status hg_strategy_write(const hg_strategy* s, char** out) {
  return api([&] {
    require(s, out);
    *out = dup(write_strategy(s->value));
  });
}

int hg_strategy_equal(const hg_strategy* a, const hg_strategy* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

hg_status hg_strategy_check(const hg_strategy* s, const hg_type* ty, hg_mode mode, int* ok,
                            char** reason) {
  if (reason) *reason = nullptr;
  return api([&] {
    require(s, ty, ok);
    const TransitionSystem ts(ty->value);
    const Mode m = resolve_mode(mode, ty->value);
    std::string why;
    const Verdict v = validate_strategy(ts, s->value, m);
    if (!v.ok) {
      why = v.reason + "\n" + write_dialogue(v.witness);
    } else {
      const Liveness l = is_live(ts, s->value, m);
      if (!l.live) why = "not live; unanswered:\n" + write_dialogue(l.witness);
    }
    *ok = why.empty() ? 1 : 0;
    if (reason && !why.empty()) *reason = dup(why);
  });
}

hg_status hg_strategy_respond(const hg_strategy* s, const char* dialogue, char** out) {
  return api([&] {
    require(s, dialogue, out);
    *out = nullptr;
    const Dialogue d = read_dialogue(dialogue);
    if (d.size() % 2 == 0) throw DialogueError("the Player answers odd-length dialogues");
    if (auto m = s->value.respond(d)) *out = dup(move_line(d.size() + 1, *m));
  });
}

hg_status hg_strategies_enumerate(const hg_type* ty, hg_mode mode, int depth, int copycat_only,
                                  const char* universe, size_t* count, char** out) {
  return api([&] {
    require(ty, count, out);
    if (depth < 0) throw ArgumentError("negative depth");
    EnumerationOptions eo;
    eo.mode = resolve_mode(mode, ty->value);
    eo.depth_bound = depth;
    eo.require_copycat = copycat_only != 0;
    eo.moves.universe = parse_universe(universe);
    const auto all = enumerate_strategies(TransitionSystem(ty->value), eo);
    std::string text;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) text += "\n";
      text += "# strategy " + std::to_string(i + 1) + "\n" + write_strategy(all[i]);
    }
    *count = all.size();
    *out = dup(text);
  });
}

hg_status hg_opponent_moves(const hg_type* ty, const char* dialogue, hg_mode mode, char** out) {
  return api([&] {
    require(ty, dialogue, out);
    const Dialogue d = read_dialogue(dialogue);
    if (d.size() % 2 == 1) throw DialogueError("the Opponent moves after even-length dialogues");
    const TransitionSystem ts(ty->value);
    std::string text;
    for (const auto& m : legal_moves(ts, d, resolve_mode(mode, ty->value)))
      text += move_line(d.size() + 1, m);
    *out = dup(text);
  });
}

hg_status hg_check_bijection(const hg_type* ty, size_t term_bound, int depth, int* ok,
                             char** summary) {
  return api([&] {
    require(ty, ok, summary);
    if (depth < 0) throw ArgumentError("negative depth");
    const BijectionReport r = check_bijection(ty->value, term_bound, depth);
    std::string text = r.summary() + "\n";
    for (const auto& f : r.failures) text += "  " + f + "\n";
    *ok = r.ok() ? 1 : 0;
    *summary = dup(text);
  });
}

}  // extern "C"
