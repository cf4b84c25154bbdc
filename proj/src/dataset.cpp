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

#include "dataset.h"

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include "csv.h"
#include "errors.h"

namespace causegraph {

namespace {

constexpr std::string_view kSentinel = "/";

// Header canonicalization: lowercase, en/em dashes folded to '-', then every
// non-alphanumeric character dropped. "Cause--No_Quantifier", "cause –
// no quantifier" and "Cause_No_Quantifier" all map to "causenoquantifier".
std::string canon_column(std::string_view name) {
  std::string s;
  s.reserve(name.size());
  for (size_t i = 0; i < name.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(name[i]);
    if (c == 0xE2 && i + 2 < name.size() &&
        static_cast<unsigned char>(name[i + 1]) == 0x80) {
      unsigned char third = static_cast<unsigned char>(name[i + 2]);
      if (third == 0x93 || third == 0x94) {  // en dash, em dash
        i += 2;
        continue;
      }
    }
    if (std::isalnum(c)) s.push_back(static_cast<char>(std::tolower(c)));
  }
  return s;
}

bool is_sentinel(std::string_view field) {
  std::string t = trim(field);
  return t.empty() || t == kSentinel;
}

struct ColumnMap {
  // canonical name -> column index
  std::unordered_map<std::string, size_t> index;

  size_t require(const std::string& canonical, const char* display) const {
    auto it = index.find(canonical);
    if (it == index.end()) {
      throw Error(Errc::kMissingColumn,
                  std::string("missing required column: ") + display);
    }
    return it->second;
  }
};

struct Columns {
  size_t statement_link, section, paragraph, series_ordinal, statement,
      causation, target, explicitness, cause_np, cause_context, cause_nq,
      cause_belongs, effect_np, effect_context, effect_nq, effect_belongs,
      relation_type, correlation, combined, nested, abbreviations, confidence;
};

Columns resolve_columns(const std::vector<std::string>& header) {
  ColumnMap map;
  for (size_t i = 0; i < header.size(); ++i) {
    std::string c = canon_column(header[i]);
    if (!c.empty()) map.index.emplace(std::move(c), i);
  }
  Columns cols{};
  cols.statement_link = map.require("statementlink", "Statement link");
  cols.section = map.require("section", "Section");
  cols.paragraph = map.require("paragraph", "Paragraph");
  cols.series_ordinal = map.require("seriesordinal", "Series ordinal");
  cols.statement = map.require("statement", "Statement");
  cols.causation = map.require("causation", "Causation");
  cols.target = map.require("target", "Target");
  cols.explicitness = map.require("explicitness", "Explicitness");
  cols.cause_np = map.require("causenp", "Cause--NP");
  cols.cause_context = map.require("causecontext", "Cause--Context");
  cols.cause_nq = map.require("causenoquantifier", "Cause--No_Quantifier");
  cols.cause_belongs = map.require("causebelongsto", "Cause--Belongs_to");
  cols.effect_np = map.require("effectnp", "Effect--NP");
  cols.effect_context = map.require("effectcontext", "Effect--Context");
  cols.effect_nq = map.require("effectnoquantifier", "Effect--No_Quantifier");
  cols.effect_belongs = map.require("effectbelongsto", "Effect--Belongs_to");
  cols.relation_type = map.require("relationtype", "Relation type");
  cols.correlation = map.require("correlation", "Correlation");
  cols.combined = map.require("combined", "Combined");
  cols.nested = map.require("nested", "Nested");
  cols.abbreviations = map.require("abbreviations", "Abbreviations");
  cols.confidence = map.require("confidencelevel", "Confidence level");
  return cols;
}

std::string field_or_empty(const std::vector<std::string>& row, size_t col) {
  std::string v = trim(row[col]);
  if (v == kSentinel) return "";
  return v;
}

long parse_ordinal(std::string_view value, int row_index) {
  std::string v = trim(value);
  if (v.empty()) {
    throw Error(Errc::kBadOrdinal, "row " + std::to_string(row_index) +
                                       ": empty series ordinal");
  }
  long out = 0;
  for (char c : v) {
    if (c < '0' || c > '9') {
      throw Error(Errc::kBadOrdinal, "row " + std::to_string(row_index) +
                                         ": series ordinal is not an "
                                         "integer: '" + v + "'");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

bool row_defines_relation(const std::vector<std::string>& row,
                          const Columns& cols, bool causation) {
  if (causation) return true;
  return !is_sentinel(row[cols.cause_np]) || !is_sentinel(row[cols.effect_np]) ||
         !is_sentinel(row[cols.target]) ||
         !is_sentinel(row[cols.explicitness]);
}

}  // namespace

std::string content_digest(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Dataset parse_dataset(std::string_view bytes, const IngestConfig& config) {
  CsvTable table = parse_csv(bytes);
  if (table.header.empty()) {
    throw Error(Errc::kParse, config.source_name + ": empty input");
  }
  Columns cols = resolve_columns(table.header);

  Dataset dataset;
  dataset.source_digest = content_digest(bytes);
  std::unordered_map<std::string, int> statement_index;

  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const int row_index = static_cast<int>(r) + 1;

    StatementMeta meta;
    meta.statement_id = trim(row[cols.statement_link]);
    meta.section = trim(row[cols.section]);
    meta.paragraph = trim(row[cols.paragraph]);
    meta.series_ordinal = parse_ordinal(row[cols.series_ordinal], row_index);
    meta.text = trim(row[cols.statement]);
    meta.causation = parse_yes_no(row[cols.causation], "causation");
    if (!is_sentinel(row[cols.confidence])) {
      meta.confidence = parse_confidence(row[cols.confidence]);
    }

    int sidx;
    auto it = statement_index.find(meta.statement_id);
    if (it == statement_index.end()) {
      sidx = static_cast<int>(dataset.statements.size());
      statement_index.emplace(meta.statement_id, sidx);
      dataset.statements.push_back(meta);
      dataset.statement_first_row.push_back(row_index);
    } else {
      sidx = it->second;
      const StatementMeta& seen = dataset.statements[sidx];
      if (seen.section != meta.section || seen.paragraph != meta.paragraph ||
          seen.series_ordinal != meta.series_ordinal ||
          seen.text != meta.text || seen.causation != meta.causation) {
        throw Error(Errc::kMetadataConflict,
                    "row " + std::to_string(row_index) +
                        ": conflicting metadata for statement " +
                        meta.statement_id);
      }
    }

    if (!row_defines_relation(row, cols, meta.causation)) continue;

    AnnotatedRelation rel;
    rel.statement_index = sidx;
    rel.row_index = row_index;
    if (!is_sentinel(row[cols.target])) rel.target = trim(row[cols.target]);
    rel.explicitness = parse_explicitness(row[cols.explicitness]);
    rel.cause.np = field_or_empty(row, cols.cause_np);
    rel.cause.context = field_or_empty(row, cols.cause_context);
    rel.cause.no_quantifier = field_or_empty(row, cols.cause_nq);
    rel.cause.belongs_to = field_or_empty(row, cols.cause_belongs);
    rel.effect.np = field_or_empty(row, cols.effect_np);
    rel.effect.context = field_or_empty(row, cols.effect_context);
    rel.effect.no_quantifier = field_or_empty(row, cols.effect_nq);
    rel.effect.belongs_to = field_or_empty(row, cols.effect_belongs);
    rel.relation_type = parse_polarity(row[cols.relation_type]);
    rel.correlation = parse_polarity(row[cols.correlation]);
    rel.combined = parse_combined(row[cols.combined]);
    rel.nested = is_sentinel(row[cols.nested])
                     ? false
                     : parse_yes_no(row[cols.nested], "nested");
    rel.abbreviations = parse_abbreviation_field(row[cols.abbreviations]);
    if (!is_sentinel(row[cols.confidence])) {
      rel.confidence = parse_confidence(row[cols.confidence]);
    }
    dataset.relations.push_back(std::move(rel));
  }
  return dataset;
}

std::string serialize_dataset(const Dataset& dataset) {
  static const std::vector<std::string> kHeader = {
      "Statement link", "Section",       "Paragraph",
      "Series ordinal", "Statement",     "Causation",
      "Target",         "Explicitness",  "Cause--NP",
      "Cause--Context", "Cause--No_Quantifier", "Cause--Belongs_to",
      "Effect--NP",     "Effect--Context", "Effect--No_Quantifier",
      "Effect--Belongs_to", "Relation type", "Correlation",
      "Combined",       "Nested",        "Abbreviations",
      "Confidence level"};

  auto sentinel_if_empty = [](const std::string& s) {
    return s.empty() ? std::string(kSentinel) : s;
  };

  // Rebuild source row order: relation rows plus one row per statement that
  // owns no relations.
  struct Line {
    int row_index;
    int statement_index;
    const AnnotatedRelation* relation;  // null for a causation-only row
  };
  std::vector<Line> lines;
  std::vector<bool> has_relation(dataset.statements.size(), false);
  for (const auto& rel : dataset.relations) {
    has_relation[rel.statement_index] = true;
    lines.push_back({rel.row_index, rel.statement_index, &rel});
  }
  for (size_t s = 0; s < dataset.statements.size(); ++s) {
    if (!has_relation[s]) {
      lines.push_back({dataset.statement_first_row.empty()
                           ? static_cast<int>(lines.size()) + 1
                           : dataset.statement_first_row[s],
                       static_cast<int>(s), nullptr});
    }
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.row_index < b.row_index;
  });

  std::string out = format_csv_row(kHeader);
  for (const Line& line : lines) {
    const StatementMeta& meta = dataset.statements[line.statement_index];
    std::vector<std::string> f(kHeader.size());
    f[0] = meta.statement_id;
    f[1] = meta.section;
    f[2] = meta.paragraph;
    f[3] = std::to_string(meta.series_ordinal);
    f[4] = meta.text;
    f[5] = meta.causation ? "Yes" : "No";
    if (line.relation == nullptr) {
      for (size_t i = 6; i < f.size(); ++i) f[i] = kSentinel;
      if (meta.confidence) f[21] = meta.confidence->raw;
    } else {
      const AnnotatedRelation& rel = *line.relation;
      f[6] = rel.target ? *rel.target : std::string(kSentinel);
      f[7] = to_string(rel.explicitness);
      f[8] = sentinel_if_empty(rel.cause.np);
      f[9] = sentinel_if_empty(rel.cause.context);
      f[10] = sentinel_if_empty(rel.cause.no_quantifier);
      f[11] = sentinel_if_empty(rel.cause.belongs_to);
      f[12] = sentinel_if_empty(rel.effect.np);
      f[13] = sentinel_if_empty(rel.effect.context);
      f[14] = sentinel_if_empty(rel.effect.no_quantifier);
      f[15] = sentinel_if_empty(rel.effect.belongs_to);
      f[16] = to_string(rel.relation_type);
      f[17] = to_string(rel.correlation);
      f[18] = to_string(rel.combined);
      f[19] = rel.nested ? "yes" : "/";
      f[20] = format_abbreviation_field(rel.abbreviations);
      f[21] = rel.confidence ? rel.confidence->raw : std::string(kSentinel);
    }
    out += format_csv_row(f);
  }
  return out;
}

std::vector<AnnotatedRelation> relations_of(const Dataset& dataset,
                                            int statement_index) {
  std::vector<AnnotatedRelation> out;
  for (const auto& rel : dataset.relations) {
    if (rel.statement_index == statement_index) out.push_back(rel);
  }
  return out;
}

namespace {

std::string safe_normalize(const std::string& s) {
  return is_blank(s) ? std::string() : normalize_event(s);
}

}  // namespace

FeatureCounts compute_counts(const Dataset& dataset) {
  FeatureCounts c;
  std::set<std::string> sections, paragraphs;
  for (const auto& meta : dataset.statements) {
    ++c.statements;
    if (meta.causation) ++c.causation_yes;
    else ++c.causation_no;
    sections.insert(meta.section);
    paragraphs.insert(meta.paragraph);
  }
  c.sections = static_cast<long>(sections.size());
  c.paragraphs = static_cast<long>(paragraphs.size());

  c.correlation_by_explicitness.row_labels = {"positive", "negative"};
  c.correlation_by_explicitness.col_labels = {"explicit", "implicit"};
  c.correlation_by_relation_type.row_labels = {"positive", "negative"};
  c.correlation_by_relation_type.col_labels = {"positive", "negative"};
  c.correlation_by_nested.row_labels = {"positive", "negative"};
  c.correlation_by_nested.col_labels = {"no", "yes"};

  std::set<std::pair<std::string, std::string>> unique_pairs;
  std::set<std::string> unique_targets;
  for (const auto& rel : dataset.relations) {
    ++c.relations;
    const int corr_row = rel.correlation == Polarity::kPositive ? 0 : 1;
    if (rel.explicitness == Explicitness::kExplicit) {
      ++c.explicit_count;
      ++c.correlation_by_explicitness.cells[corr_row][0];
    } else {
      ++c.implicit_count;
      ++c.correlation_by_explicitness.cells[corr_row][1];
    }
    if (rel.relation_type == Polarity::kPositive) {
      ++c.relation_type_positive;
      ++c.correlation_by_relation_type.cells[corr_row][0];
    } else {
      ++c.relation_type_negative;
      ++c.correlation_by_relation_type.cells[corr_row][1];
    }
    if (rel.correlation == Polarity::kPositive) ++c.correlation_positive;
    else ++c.correlation_negative;
    if (rel.nested) {
      ++c.nested_yes;
      ++c.correlation_by_nested.cells[corr_row][1];
    } else {
      ++c.nested_no;
      ++c.correlation_by_nested.cells[corr_row][0];
    }
    switch (rel.combined) {
      case Combined::kYes: ++c.overarching_combined; break;
      case Combined::kNo: ++c.overarching_examples; break;
      case Combined::kNotApplicable: ++c.overarching_none; break;
    }
    unique_pairs.emplace(safe_normalize(rel.cause.no_quantifier),
                         safe_normalize(rel.effect.no_quantifier));
    if (rel.target && !is_blank(*rel.target)) {
      unique_targets.insert(normalize_event(*rel.target));
    }
  }
  c.unique_relations = static_cast<long>(unique_pairs.size());
  c.unique_targets = static_cast<long>(unique_targets.size());
  return c;
}

ValidationReport validate(const Dataset& dataset) {
  ValidationReport report;
  auto error = [&](int row, const char* rule, std::string message) {
    report.errors.push_back({row, rule, std::move(message)});
  };
  auto warning = [&](int row, const char* rule, std::string message) {
    report.warnings.push_back({row, rule, std::move(message)});
  };

  std::vector<long> relation_count(dataset.statements.size(), 0);
  for (const auto& rel : dataset.relations) {
    ++relation_count[rel.statement_index];
  }

  for (size_t s = 0; s < dataset.statements.size(); ++s) {
    const StatementMeta& meta = dataset.statements[s];
    const int row = dataset.statement_first_row.empty()
                        ? 0
                        : dataset.statement_first_row[s];
    if (meta.statement_id.empty()) {
      error(row, "statement-id-nonempty", "statement link is empty");
    }
    if (meta.text.empty()) {
      error(row, "statement-text-nonempty",
            "statement text is empty for " + meta.statement_id);
    }
    if (meta.series_ordinal < 1) {
      error(row, "series-ordinal-positive",
            "series ordinal must be >= 1 for " + meta.statement_id);
    }
    if (!meta.causation && relation_count[s] > 0) {
      error(row, "causation-no-owns-relations",
            "statement marked causation=no owns " +
                std::to_string(relation_count[s]) + " relations");
    }
    if (meta.confidence &&
        meta.confidence->band == ConfidenceBand::kUnknown) {
      warning(row, "unknown-confidence-label",
              "unrecognised confidence label '" + meta.confidence->raw + "'");
    }
  }

  for (const auto& rel : dataset.relations) {
    const int row = rel.row_index;
    auto check_side = [&](const EventSide& side, const char* which) {
      if (side.np.empty()) {
        error(row, "np-nonempty",
              std::string(which) + " NP is empty");
      } else if (side.no_quantifier.empty()) {
        error(row, "no-quantifier-nonempty",
              std::string(which) + " No_Quantifier is empty while NP is set");
      }
      if (!side.context.empty() && !side.no_quantifier.empty() &&
          safe_normalize(side.context) == safe_normalize(side.no_quantifier)) {
        error(row, "context-equals-no-quantifier",
              std::string(which) + " context duplicates the No_Quantifier form");
      }
    };
    check_side(rel.cause, "cause");
    check_side(rel.effect, "effect");

    if (!rel.target && rel.explicitness == Explicitness::kExplicit) {
      error(row, "implicit-if-no-target",
            "explicitness is E but the target is absent");
    }
    if (rel.nested && rel.effect.belongs_to.empty()) {
      error(row, "nested-requires-overarching-effect",
            "nested relation lacks an overarching effect (Effect--Belongs_to)");
    }
    if (rel.combined != Combined::kNotApplicable &&
        rel.cause.belongs_to.empty() && rel.effect.belongs_to.empty()) {
      error(row, "combined-requires-overarching",
            "combined is set but no Belongs_to side is present");
    }
    if ((!rel.cause.belongs_to.empty() || !rel.effect.belongs_to.empty()) &&
        rel.combined == Combined::kNotApplicable && !rel.nested) {
      warning(row, "overarching-without-combined",
              "Belongs_to present but Combined is unset");
    }
    if (!rel.cause.no_quantifier.empty() && !rel.effect.no_quantifier.empty() &&
        safe_normalize(rel.cause.no_quantifier) ==
            safe_normalize(rel.effect.no_quantifier)) {
      error(row, "self-loop",
            "cause and effect normalize to the same event '" +
                safe_normalize(rel.cause.no_quantifier) + "'");
    }
    for (const auto& abbr : rel.abbreviations) {
      if (abbr.short_form.empty() || abbr.long_form.empty()) {
        error(row, "abbreviation-pair-nonempty",
              "abbreviation entry with an empty side");
      }
    }
    if (rel.confidence && rel.confidence->band == ConfidenceBand::kUnknown) {
      warning(row, "unknown-confidence-label",
              "unrecognised confidence label '" + rel.confidence->raw + "'");
    }
  }

  report.counts = compute_counts(dataset);
  return report;
}

}  // namespace causegraph
