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

#ifndef HYPERGAME_SEMANTICS_HPP_
#define HYPERGAME_SEMANTICS_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypergame/strategy.hpp"
#include "hypergame/term.hpp"

namespace hypergame {

// Raised when a strategy cannot take part in an interaction or be read back
// (no response, not copycat, ill-typed move). `witness` is the offending play.
class InteractionError : public std::runtime_error {
 public:
  InteractionError(const std::string& what, Dialogue witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Dialogue& witness() const { return witness_; }

 private:
  Dialogue witness_;
};

enum class Party { kExternal, kFunction, kArgument };
const char* party_name(Party p);

// One move of an interaction. `justifier` is the 1-based index of the
// justifying event in the same run (0 for openings); `label` is the move as
// seen by its receiver.
struct TranscriptEntry {
  Party by;
  int justifier;
  Label label;
};
// One run per maximal play of the resulting strategy.
using Transcript = std::vector<std::vector<TranscriptEntry>>;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t budget, std::vector<TranscriptEntry> partial)
      : std::runtime_error("interaction exceeded its budget of " +
                           std::to_string(budget) + " steps"),
        partial_(std::move(partial)) {}
  const std::vector<TranscriptEntry>& partial() const { return partial_; }

 private:
  std::vector<TranscriptEntry> partial_;
};

struct InteractionOptions {
  std::size_t budget = 1000000;
  // Ignore types entirely: no states, no importation, no copycat regions.
  // Only meaningful for quantifier-free games.
  bool untyped = false;
};

// The game a type is played in: black-box when closed, P-backtracking
// otherwise (free variables act as base types).
Mode game_mode(const TypeExpr& ty);

// Strategy of an η-long β-normal term. Each λ/Λ prefix answers the O-move
// that selects its branch, the head variable fixes P's pointer and branch,
// type arguments become P's imports, and term arguments populate the
// branches that follow.
Strategy term_to_strategy(const Term& t, const TypeExpr& ty);

// Inverse of term_to_strategy on finite live copycat strategies.
Term strategy_to_term(const Strategy& s, const TypeExpr& ty);

// Layout of a typing context turned into a closed type: type variables
// become outer quantifiers and term variables become leading arguments,
// interleaved in context order.
struct ContextShape {
  std::vector<std::string> type_vars;  // in order
  int term_vars = 0;
};

// Composition: fun plays on (ctx => A -> B), arg on (ctx => A); the result
// plays on (ctx => B). Types are the closure types.
Strategy compose_in_context(const ContextShape& ctx, const Strategy& fun,
                            const TypeExpr& fun_type, const Strategy& arg,
                            const TypeExpr& arg_type, const TypeExpr& result_type,
                            const InteractionOptions& options = {},
                            Transcript* transcript = nullptr);
// Closed case: fun at U -> V, arg at U, result at V.
Strategy compose(const Strategy& fun, const TypeExpr& fun_type, const Strategy& arg,
                 const TypeExpr& arg_type, const InteractionOptions& options = {},
                 Transcript* transcript = nullptr);

// Instantiation: s plays on (ctx => forall X. B); the result plays on
// (ctx => B[V/X]). V may mention the context's type variables.
Strategy instantiate_in_context(const ContextShape& ctx, const Strategy& s,
                                const TypeExpr& type, const TypeExpr& v,
                                const TypeExpr& result_type,
                                const InteractionOptions& options = {},
                                Transcript* transcript = nullptr);
Strategy instantiate(const Strategy& s, const TypeExpr& type, const TypeExpr& v,
                     const InteractionOptions& options = {},
                     Transcript* transcript = nullptr);

// The type obtained by replacing the opening quantifiers named in
// `assignment` (keys are canonical box names B0, B1, ...) by their types.
TypeExpr expanded_type(const TypeExpr& ty, const std::map<std::string, TypeExpr>& assignment);

// Normalization by interaction: variables become copycat strategies,
// abstractions are the identity on strategies, applications compose and
// type applications instantiate. The final strategy is read back.
Term normalize_via_games(const Term& t, const InteractionOptions& options = {},
                         Transcript* transcript = nullptr);

struct BijectionReport {
  TypeExpr type;
  Mode mode = Mode::kBlackBox;
  std::size_t term_size_bound = 0;
  int depth_bound = 0;
  std::vector<Term> terms;
  std::vector<Strategy> strategies;  // live (and copycat in λ mode)
  std::size_t live_strategies = 0;   // before the copycat filter
  std::size_t truncated_terms = 0;       // strategy deeper than depth_bound
  std::size_t truncated_strategies = 0;  // term larger than term_size_bound
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  // "terms: 2, strategies: 2, bijection: OK", with the live/copycat split
  // for quantifier-free types.
  std::string summary() const;
};

BijectionReport check_bijection(const TypeExpr& ty, std::size_t term_size_bound,
                                int depth_bound, const MoveOptions& moves = {});

}  // namespace hypergame

#endif  // HYPERGAME_SEMANTICS_HPP_
