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

#ifndef CAUSEGRAPH_DATASET_H_
#define CAUSEGRAPH_DATASET_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annotation.h"

namespace causegraph {

struct IngestConfig {
  std::string source_name = "<input>";
};

struct Dataset {
  std::vector<StatementMeta> statements;   // first-appearance order
  std::vector<AnnotatedRelation> relations;  // file row order
  std::string source_digest;

  // 1-based source row of the statement's first appearance; keeps
  // serialization order-stable for statements without relations.
  std::vector<int> statement_first_row;

  std::span<const AnnotatedRelation> all_relations() const {
    return relations;
  }
};

// Parses the comma-delimited annotation table. Header row required; column
// names matched case-insensitively with dash/space/underscore variants
// accepted. Rows sharing a statement link collapse to one StatementMeta.
// Throws Error with kMissingColumn / kBadEnum / kBadOrdinal /
// kMetadataConflict / kParse.
Dataset parse_dataset(std::string_view bytes, const IngestConfig& config = {});

// Canonical CSV form; parse(serialize(parse(x))) == parse(x) on accepted
// files.
std::string serialize_dataset(const Dataset& dataset);

// Relations owned by one statement, in file order.
std::vector<AnnotatedRelation> relations_of(const Dataset& dataset,
                                            int statement_index);

struct ValidationIssue {
  int row_index = 0;  // 1-based data row; 0 when statement-scoped
  std::string rule_id;
  std::string message;
};

// 2x2 contingency table; rows are indexed by the first feature in the name.
struct ContingencyTable {
  std::array<std::string, 2> row_labels;
  std::array<std::string, 2> col_labels;
  std::array<std::array<long, 2>, 2> cells{{{0, 0}, {0, 0}}};
  long total() const {
    return cells[0][0] + cells[0][1] + cells[1][0] + cells[1][1];
  }
};

struct FeatureCounts {
  long sections = 0;
  long paragraphs = 0;
  long statements = 0;
  long causation_yes = 0;
  long causation_no = 0;
  long relations = 0;
  long explicit_count = 0;
  long implicit_count = 0;
  long relation_type_positive = 0;
  long relation_type_negative = 0;
  long correlation_positive = 0;
  long correlation_negative = 0;
  long nested_yes = 0;
  long nested_no = 0;
  long overarching_none = 0;
  long overarching_examples = 0;
  long overarching_combined = 0;
  long unique_relations = 0;
  long unique_targets = 0;

  // correlation (positive, negative) crossed with a second feature
  ContingencyTable correlation_by_explicitness;
  ContingencyTable correlation_by_relation_type;
  ContingencyTable correlation_by_nested;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  FeatureCounts counts;
  bool accepted() const { return errors.empty(); }
};

// Applies every annotation invariant as a rule. Problems become report
// entries; this never throws.
ValidationReport validate(const Dataset& dataset);

FeatureCounts compute_counts(const Dataset& dataset);

// Fingerprint of the raw input bytes (FNV-1a 64, hex).
std::string content_digest(std::string_view bytes);

}  // namespace causegraph

#endif  // CAUSEGRAPH_DATASET_H_
