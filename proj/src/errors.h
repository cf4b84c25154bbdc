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

#ifndef CAUSEGRAPH_ERRORS_H_
#define CAUSEGRAPH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace causegraph {

enum class Errc {
  kIo,
  kParse,
  kMissingColumn,
  kBadEnum,
  kBadOrdinal,
  kMetadataConflict,
  kEmptyEvent,
  kEmptyText,
  kMissingBinding,
  kUnknownVariant,
  kDuplicateItem,
  kItemMismatch,
  kEmptyGroup,
  kDegenerateMargin,
  kZeroVariance,
  kMissingWordList,
  kInvalidArgument,
  kValidation,
};

// All domain failures are reported through this type; the C boundary maps
// Errc onto cg_status codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kIo: return "Io";
    case Errc::kParse: return "Parse";
    case Errc::kMissingColumn: return "MissingColumn";
    case Errc::kBadEnum: return "BadEnum";
    case Errc::kBadOrdinal: return "BadOrdinal";
    case Errc::kMetadataConflict: return "MetadataConflict";
    case Errc::kEmptyEvent: return "EmptyEvent";
    case Errc::kEmptyText: return "EmptyText";
    case Errc::kMissingBinding: return "MissingBinding";
    case Errc::kUnknownVariant: return "UnknownVariant";
    case Errc::kDuplicateItem: return "DuplicateItem";
    case Errc::kItemMismatch: return "ItemMismatch";
    case Errc::kEmptyGroup: return "EmptyGroup";
    case Errc::kDegenerateMargin: return "DegenerateMargin";
    case Errc::kZeroVariance: return "ZeroVariance";
    case Errc::kMissingWordList: return "MissingWordList";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kValidation: return "Validation";
  }
  return "Unknown";
}

}  // namespace causegraph

#endif  // CAUSEGRAPH_ERRORS_H_
