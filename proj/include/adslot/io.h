// Copyright 2026 The adslot Authors.
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

// Text file formats.
//
// Every file written here starts with a `# adslot.<kind> v1` line; readers
// require it, except for feature files, which may come from other tools.
// Other lines starting with `#` and blank lines are ignored. Numbers are
// written with 17 significant digits.
//
//   program     `id,valence` header, then one scene per line in play order
//   inventory   `id,valence` header, then one ad per line
//   features    F lines of D numbers (comma or whitespace separated)
//   rel         N lines of P comma-separated numbers (scenes x ads)
//   schedule    `slot,rank,ad_id` header, then one entry per line
//   profile     `position,kind,entity_id,valence_0_100` header, then points
//
// Program and inventory valences are on the 0-1 or 0-100 scale as selected
// by ValenceScale. Parse failures throw Error(kParseError) naming the source,
// line and field.

#ifndef ADSLOT_IO_H_
#define ADSLOT_IO_H_

#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "adslot/core.h"
#include "adslot/profile.h"
#include "adslot/relevance.h"
#include "adslot/solvers.h"

namespace adslot {

enum class ValenceScale { kUnit, kHundred };

ProgramSpec ReadProgram(std::istream& in, ValenceScale scale,
                        const std::string& source = "<program>");
ProgramSpec LoadProgram(const std::filesystem::path& path, ValenceScale scale);
void WriteProgram(std::ostream& out, const ProgramSpec& program,
                  ValenceScale scale);

AdInventory ReadInventory(std::istream& in, ValenceScale scale,
                          const std::string& source = "<inventory>");
AdInventory LoadInventory(const std::filesystem::path& path,
                          ValenceScale scale);
void WriteInventory(std::ostream& out, const AdInventory& inventory,
                    ValenceScale scale);

KeyframeFeatures ReadFeatures(std::istream& in, const std::string& entity_id,
                              const std::string& source = "<features>");
void WriteFeatures(std::ostream& out, const KeyframeFeatures& features);

// Reads `<dir>/<id>.txt` (or `<id>.csv`) for each id. A missing file throws
// kMissingEntity.
std::vector<KeyframeFeatures> LoadFeatureDirectory(
    const std::filesystem::path& dir, const std::vector<std::string>& ids);

RelevanceMatrix ReadRelevance(std::istream& in,
                              const std::string& source = "<rel>");
RelevanceMatrix LoadRelevance(const std::filesystem::path& path);
void WriteRelevance(std::ostream& out, const RelevanceMatrix& rel);

Schedule ReadSchedule(std::istream& in,
                      const std::string& source = "<schedule>");
void WriteSchedule(std::ostream& out, const Schedule& schedule);

VpsProfile ReadProfile(std::istream& in,
                       const std::string& source = "<profile>");
void WriteProfile(std::ostream& out, const VpsProfile& profile);

// Machine-readable summary of a solve. `report.json` carries
// "format": "adslot.report" and "version": 1.
nlohmann::json ReportToJson(const SolveReport& report,
                            const RewardParams& params);

// Exact round-trip decimal for `value` with 17 significant digits.
std::string FormatNumber(double value);

}  // namespace adslot

#endif  // ADSLOT_IO_H_
