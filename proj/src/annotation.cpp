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

#include "annotation.h"

#include "errors.h"

namespace causegraph {

namespace {

std::string canon(std::string_view v) { return ascii_lower(trim(v)); }

}  // namespace

Explicitness parse_explicitness(std::string_view value) {
  std::string v = canon(value);
  if (v == "e" || v == "explicit") return Explicitness::kExplicit;
  if (v == "i" || v == "implicit") return Explicitness::kImplicit;
  throw Error(Errc::kBadEnum, "bad explicitness value: '" + std::string(value) + "'");
}

Polarity parse_polarity(std::string_view value) {
  std::string v = canon(value);
  if (v == "positive") return Polarity::kPositive;
  if (v == "negative") return Polarity::kNegative;
  throw Error(Errc::kBadEnum, "bad polarity value: '" + std::string(value) + "'");
}

Combined parse_combined(std::string_view value) {
  std::string v = canon(value);
  if (v.empty() || v == "/" || v == "-" || v == "--") return Combined::kNotApplicable;
  if (v == "yes") return Combined::kYes;
  if (v == "no") return Combined::kNo;
  throw Error(Errc::kBadEnum, "bad combined value: '" + std::string(value) + "'");
}

bool parse_yes_no(std::string_view value, std::string_view feature) {
  std::string v = canon(value);
  if (v == "yes") return true;
  if (v == "no") return false;
  throw Error(Errc::kBadEnum, "bad " + std::string(feature) + " value: '" +
                                  std::string(value) + "'");
}

ConfidenceLevel parse_confidence(std::string_view value) {
  ConfidenceLevel out;
  out.raw = trim(value);
  std::string v = ascii_lower(collapse_whitespace(value));
  // Labels commonly carry a trailing "confidence" word.
  const std::string suffix = " confidence";
  if (v.size() > suffix.size() &&
      v.compare(v.size() - suffix.size(), suffix.size(), suffix) == 0) {
    v = v.substr(0, v.size() - suffix.size());
  }
  if (v == "low") out.band = ConfidenceBand::kLow;
  else if (v == "low to medium") out.band = ConfidenceBand::kLowToMedium;
  else if (v == "medium") out.band = ConfidenceBand::kMedium;
  else if (v == "medium to high") out.band = ConfidenceBand::kMediumToHigh;
  else if (v == "high") out.band = ConfidenceBand::kHigh;
  else if (v == "very high") out.band = ConfidenceBand::kVeryHigh;
  else out.band = ConfidenceBand::kUnknown;
  return out;
}

const char* to_string(Explicitness e) {
  return e == Explicitness::kExplicit ? "E" : "I";
}

const char* to_string(Polarity p) {
  return p == Polarity::kPositive ? "positive" : "negative";
}

const char* to_string(Combined c) {
  switch (c) {
    case Combined::kYes: return "yes";
    case Combined::kNo: return "no";
    case Combined::kNotApplicable: return "/";
  }
  return "/";
}

const char* to_string(ConfidenceBand b) {
  switch (b) {
    case ConfidenceBand::kLow: return "low";
    case ConfidenceBand::kLowToMedium: return "low to medium";
    case ConfidenceBand::kMedium: return "medium";
    case ConfidenceBand::kMediumToHigh: return "medium to high";
    case ConfidenceBand::kHigh: return "high";
    case ConfidenceBand::kVeryHigh: return "very high";
    case ConfidenceBand::kUnknown: return "unknown";
  }
  return "unknown";
}

std::vector<AbbreviationPair> parse_abbreviation_field(std::string_view value) {
  std::vector<AbbreviationPair> out;
  std::string v = trim(value);
  if (v.empty() || v == "/") return out;
  if (v.size() >= 2 && v.front() == '{' && v.back() == '}') {
    v = trim(std::string_view(v).substr(1, v.size() - 2));
  }
  for (const std::string& part : split(v, ';')) {
    std::string entry = trim(part);
    if (entry.empty()) continue;
    size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::kParse,
                  "abbreviation entry without '=': '" + entry + "'");
    }
    AbbreviationPair p;
    p.short_form = trim(std::string_view(entry).substr(0, eq));
    p.long_form = trim(std::string_view(entry).substr(eq + 1));
    out.push_back(std::move(p));
  }
  return out;
}

std::string format_abbreviation_field(const std::vector<AbbreviationPair>& t) {
  if (t.empty()) return "/";
  std::string out;
  if (t.size() > 1) out += "{";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += "; ";
    out += t[i].short_form + " = " + t[i].long_form;
  }
  if (t.size() > 1) out += "}";
  return out;
}

bool graph_equivalent(const AnnotatedRelation& a, const AnnotatedRelation& b) {
  return normalize_event(a.cause.no_quantifier) ==
             normalize_event(b.cause.no_quantifier) &&
         normalize_event(a.effect.no_quantifier) ==
             normalize_event(b.effect.no_quantifier);
}

}  // namespace causegraph
