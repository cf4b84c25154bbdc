// Copyright 2026 CauseGraph contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAUSEGRAPH_TEXT_H_
#define CAUSEGRAPH_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace causegraph {

bool is_space_char(char c);
bool is_blank(std::string_view s);

std::string trim(std::string_view s);
std::string ascii_lower(std::string_view s);

// Collapses every internal run of whitespace to one space. Leading and
// trailing whitespace is removed.
std::string collapse_whitespace(std::string_view s);

// Canonical node-identity form of an event string: trim, collapse internal
// whitespace, ASCII case-fold. Idempotent. Throws Error(kEmptyEvent) when the
// input is empty or all-whitespace.
std::string normalize_event(std::string_view raw);

struct AbbreviationPair {
  std::string short_form;
  std::string long_form;
};

// Replaces every whole-token occurrence of a short form with its long form.
// Short forms are tried longest-first so that e.g. "CO2-FFI" is not shadowed
// by "CO2". Tokens are bounded by non-alphanumeric characters.
std::string resolve_abbreviations(std::string_view text,
                                  const std::vector<AbbreviationPair>& table);

std::vector<std::string> split(std::string_view s, char delim);

// Number of whitespace-separated tokens; the statement-length measure used by
// the corpus report.
long whitespace_token_count(std::string_view s);

}  // namespace causegraph

#endif  // CAUSEGRAPH_TEXT_H_
