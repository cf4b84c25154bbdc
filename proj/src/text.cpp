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

#include "text.h"

#include <algorithm>
#include <cctype>

#include "errors.h"

namespace causegraph {

bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_space_char);
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && is_space_char(s[b])) ++b;
  while (e > b && is_space_char(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_run = false;
  for (char c : s) {
    if (is_space_char(c)) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out.push_back(' ');
    in_run = false;
    out.push_back(c);
  }
  return out;
}

std::string normalize_event(std::string_view raw) {
  if (is_blank(raw)) {
    throw Error(Errc::kEmptyEvent, "empty event string");
  }
  return ascii_lower(collapse_whitespace(raw));
}

namespace {

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string resolve_abbreviations(std::string_view text,
                                  const std::vector<AbbreviationPair>& table) {
  std::vector<const AbbreviationPair*> order;
  order.reserve(table.size());
  for (const auto& p : table) {
    if (!p.short_form.empty()) order.push_back(&p);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const AbbreviationPair* a, const AbbreviationPair* b) {
                     return a->short_form.size() > b->short_form.size();
                   });

  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const AbbreviationPair* hit = nullptr;
    if (i == 0 || !is_token_char(text[i - 1])) {
      for (const AbbreviationPair* p : order) {
        const std::string& s = p->short_form;
        if (text.compare(i, s.size(), s) != 0) continue;
        size_t end = i + s.size();
        if (end < text.size() && is_token_char(text[end])) continue;
        hit = p;
        break;
      }
    }
    if (hit != nullptr) {
      out += hit->long_form;
      i += hit->short_form.size();
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == delim) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

long whitespace_token_count(std::string_view s) {
  long count = 0;
  bool in_token = false;
  for (char c : s) {
    if (is_space_char(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

}  // namespace causegraph
