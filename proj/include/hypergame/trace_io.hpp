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

// Text formats. One move per line:
//
//   3: (2) branch=1 imports=[B0;forall Y. Y -> Y]
//
// Transcripts add a column naming the participant that moved:
//
//   3: (2) branch=1 imports=[] by=fun
//
// A strategy file lists its maximal plays separated by blank lines; so does
// a transcript file, one interaction run per block. Lines starting with '#'
// are comments.

#ifndef HYPERGAME_TRACE_IO_HPP_
#define HYPERGAME_TRACE_IO_HPP_

#include <string>
#include <string_view>

#include "hypergame/semantics.hpp"

namespace hypergame {

std::string write_dialogue(const Dialogue& d);
Dialogue read_dialogue(std::string_view text);

std::string write_strategy(const Strategy& s);
Strategy read_strategy(std::string_view text);

std::string write_transcript(const Transcript& t);
Transcript read_transcript(std::string_view text);

}  // namespace hypergame

#endif  // HYPERGAME_TRACE_IO_HPP_
