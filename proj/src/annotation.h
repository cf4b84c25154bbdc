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

#ifndef CAUSEGRAPH_ANNOTATION_H_
#define CAUSEGRAPH_ANNOTATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "text.h"

namespace causegraph {

enum class Explicitness { kExplicit, kImplicit };

// Polarity covers both the relation-type feature (causes vs prevents) and the
// correlation feature (same-direction vs opposite-direction).
enum class Polarity { kPositive, kNegative };

// Combined is a tri-state: Yes/No are only meaningful when an overarching
// event exists; rows without one carry NotApplicable (the "/" sentinel).
enum class Combined { kYes, kNo, kNotApplicable };

enum class ConfidenceBand {
  kLow,
  kLowToMedium,
  kMedium,
  kMediumToHigh,
  kHigh,
  kVeryHigh,
  kUnknown,
};

// Ordered confidence label. Unknown labels are preserved verbatim in `raw`
// and surface as validation warnings, not hard errors.
struct ConfidenceLevel {
  ConfidenceBand band = ConfidenceBand::kUnknown;
  std::string raw;
};

struct StatementMeta {
  std::string statement_id;  // opaque key (the Wikibase entity URL)
  std::string section;
  std::string paragraph;
  long series_ordinal = 1;
  std::string text;
  std::optional<ConfidenceLevel> confidence;
  bool causation = false;
};

// One side (cause or effect) of an annotated relation.
struct EventSide {
  std::string np;
  std::string context;        // empty when absent
  std::string no_quantifier;  // quantifier-stripped form; node identity
  std::string belongs_to;     // overarching event, empty when absent
};

struct AnnotatedRelation {
  int statement_index = -1;  // position in Dataset::statements
  int row_index = 0;         // 1-based data-row position in the source file
  std::optional<std::string> target;
  Explicitness explicitness = Explicitness::kExplicit;
  EventSide cause;
  EventSide effect;
  Polarity relation_type = Polarity::kPositive;
  Polarity correlation = Polarity::kPositive;
  Combined combined = Combined::kNotApplicable;
  bool nested = false;
  std::vector<AbbreviationPair> abbreviations;
  std::optional<ConfidenceLevel> confidence;
};

// Enum parsers; all case-insensitive. They throw Error(kBadEnum) on values
// outside the accepted vocabulary.
Explicitness parse_explicitness(std::string_view value);
Polarity parse_polarity(std::string_view value);
Combined parse_combined(std::string_view value);  // "/"/empty -> NotApplicable
bool parse_yes_no(std::string_view value, std::string_view feature);

// Never throws: unrecognised labels yield band kUnknown with the raw string.
ConfidenceLevel parse_confidence(std::string_view value);

const char* to_string(Explicitness e);
const char* to_string(Polarity p);
const char* to_string(Combined c);
const char* to_string(ConfidenceBand b);

// Parses the "{A = long; B = long}" abbreviation column format.
std::vector<AbbreviationPair> parse_abbreviation_field(std::string_view value);
std::string format_abbreviation_field(const std::vector<AbbreviationPair>& t);

// Two relations are graph-equivalent iff their normalized
// (cause.no_quantifier, effect.no_quantifier) pairs are equal.
bool graph_equivalent(const AnnotatedRelation& a, const AnnotatedRelation& b);

}  // namespace causegraph

#endif  // CAUSEGRAPH_ANNOTATION_H_
