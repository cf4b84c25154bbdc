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

#ifndef CAUSEGRAPH_CSV_H_
#define CAUSEGRAPH_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace causegraph {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC 4180 comma-separated values: quoted fields may contain commas, doubled
// quotes and newlines. Accepts both \n and \r\n line endings and a UTF-8 BOM.
CsvTable parse_csv(std::string_view data);

std::string csv_quote(std::string_view field);
std::string format_csv_row(const std::vector<std::string>& fields);

}  // namespace causegraph

#endif  // CAUSEGRAPH_CSV_H_
