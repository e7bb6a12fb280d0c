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

#include "adslot/io.h"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "adslot/error.h"

namespace adslot {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Reads data lines, skipping blanks and `#` comments, and reports errors at
// their source position.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Requires the first non-blank line to be `# adslot.<kind> v1`.
  void ExpectHeader(std::string_view kind) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      const std::string_view text = Trim(raw);
      if (text.empty()) continue;
      const std::string expected = fmt::format("# adslot.{} v1", kind);
      if (text != expected) {
        Fail(0, fmt::format("expected header '{}', got '{}'", expected, text));
      }
      return;
    }
    Fail(0, fmt::format("empty file, expected '# adslot.{} v1'", kind));
  }

  // Splits the next data line on `separators`. Returns false at end of input.
  bool Next(std::vector<std::string>& fields,
            std::string_view separators = ",") {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      const std::string_view text = Trim(raw);
      if (text.empty() || text.front() == '#') continue;
      fields.clear();
      const bool whitespace = separators.find(' ') != std::string_view::npos;
      size_t pos = 0;
      for (;;) {
        const size_t end = text.find_first_of(separators, pos);
        const std::string_view field = Trim(text.substr(
            pos, end == std::string_view::npos ? std::string_view::npos
                                               : end - pos));
        if (!(whitespace && field.empty())) fields.emplace_back(field);
        if (end == std::string_view::npos) break;
        pos = end + 1;
      }
      return true;
    }
    return false;
  }

  void ExpectColumns(const std::vector<std::string>& fields,
                     const std::vector<std::string_view>& names) {
    if (fields.size() != names.size()) {
      Fail(0, fmt::format("expected {} columns ({}), got {}", names.size(),
                          fmt::join(names, ","), fields.size()));
    }
    for (size_t i = 0; i < names.size(); ++i) {
      if (fields[i] != names[i]) {
        Fail(
            static_cast<int>(i) + 1,
            fmt::format("expected column '{}', got '{}'", names[i], fields[i]));
      }
    }
  }

  double Number(const std::string& text, int field) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (!text.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
      Fail(field, fmt::format("'{}' is not a number", text));
    }
    return value;
  }

  int Integer(const std::string& text, int field) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      Fail(field, fmt::format("'{}' is not an integer", text));
    }
    return value;
  }

  [[noreturn]] void Fail(int field, const std::string& message) const {
    Throw(ErrorCode::kParseError, field, message);
  }

  [[noreturn]] void Throw(ErrorCode code, int field,
                          const std::string& message) const {
    if (field > 0) {
      throw Error(code, fmt::format("{}:{}: field {}: {}", source_, line_,
                                    field, message));
    }
    throw Error(code, fmt::format("{}:{}: {}", source_, line_, message));
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  std::string source_;
  int line_ = 0;
};

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError,
                fmt::format("cannot open '{}'", path.string()));
  }
  return in;
}

double ScaleFactor(ValenceScale scale) {
  return scale == ValenceScale::kHundred ? 100.0 : 1.0;
}

struct IdValence {
  std::string id;
  Valence valence;
};

std::vector<IdValence> ReadIdValenceRows(LineReader& reader,
                                         ValenceScale scale) {
  std::vector<std::string> fields;
  if (!reader.Next(fields)) reader.Fail(0, "missing 'id,valence' header");
  reader.ExpectColumns(fields, {"id", "valence"});
  std::vector<IdValence> rows;
  const double factor = ScaleFactor(scale);
  while (reader.Next(fields)) {
    if (fields.size() != 2) {
      reader.Fail(0, fmt::format("expected 2 fields, got {}", fields.size()));
    }
    if (fields[0].empty()) reader.Fail(1, "empty id");
    const double raw = reader.Number(fields[1], 2);
    if (!(raw >= 0.0 && raw <= factor)) {
      reader.Throw(
          ErrorCode::kValenceOutOfRange, 2,
          fmt::format("valence {} outside [0, {}]", fields[1], factor));
    }
    rows.push_back({fields[0], Valence(raw / factor)});
  }
  return rows;
}

template <typename T>
void WriteIdValenceRows(std::ostream& out, std::string_view kind,
                        const std::vector<T>& items, ValenceScale scale) {
  out << "# adslot." << kind << " v1\n";
  out << "# valence scale: "
      << (scale == ValenceScale::kHundred ? "0-100" : "0-1") << "\n";
  out << "id,valence\n";
  for (const T& item : items) {
    out << item.id << ','
        << FormatNumber(item.valence.value() * ScaleFactor(scale)) << '\n';
  }
}

}  // namespace

std::string FormatNumber(double value) { return fmt::format("{:.17g}", value); }

ProgramSpec ReadProgram(std::istream& in, ValenceScale scale,
                        const std::string& source) {
  LineReader reader(in, source);
  reader.ExpectHeader("program");
  std::vector<Scene> scenes;
  for (IdValence& row : ReadIdValenceRows(reader, scale)) {
    scenes.push_back({std::move(row.id), row.valence});
  }
  if (scenes.empty()) reader.Fail(0, "program lists no scenes");
  if (scenes.size() < 2) reader.Fail(0, "program needs at least 2 scenes");
  try {
    return ProgramSpec(std::move(scenes));
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", source, e.what()));
  }
}

ProgramSpec LoadProgram(const std::filesystem::path& path, ValenceScale scale) {
  std::ifstream in = OpenForRead(path);
  return ReadProgram(in, scale, path.string());
}

void WriteProgram(std::ostream& out, const ProgramSpec& program,
                  ValenceScale scale) {
  WriteIdValenceRows(out, "program", program.scenes(), scale);
}

AdInventory ReadInventory(std::istream& in, ValenceScale scale,
                          const std::string& source) {
  LineReader reader(in, source);
  reader.ExpectHeader("inventory");
  std::vector<Ad> ads;
  for (IdValence& row : ReadIdValenceRows(reader, scale)) {
    ads.push_back({std::move(row.id), row.valence});
  }
  if (ads.empty()) reader.Fail(0, "inventory lists no ads");
  try {
    return AdInventory(std::move(ads));
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", source, e.what()));
  }
}

AdInventory LoadInventory(const std::filesystem::path& path,
                          ValenceScale scale) {
  std::ifstream in = OpenForRead(path);
  return ReadInventory(in, scale, path.string());
}

void WriteInventory(std::ostream& out, const AdInventory& inventory,
                    ValenceScale scale) {
  WriteIdValenceRows(out, "inventory", inventory.ads(), scale);
}

KeyframeFeatures ReadFeatures(std::istream& in, const std::string& entity_id,
                              const std::string& source) {
  LineReader reader(in, source);
  std::vector<FeatureVector> frames;
  std::vector<std::string> fields;
  while (reader.Next(fields, ", \t")) {
    FeatureVector frame;
    frame.reserve(fields.size());
    for (size_t i = 0; i < fields.size(); ++i) {
      frame.push_back(reader.Number(fields[i], static_cast<int>(i) + 1));
    }
    if (!frames.empty() && frame.size() != frames.front().size()) {
      reader.Throw(ErrorCode::kDimensionMismatch, 0,
                   fmt::format("row has {} values, expected {}", frame.size(),
                               frames.front().size()));
    }
    frames.push_back(std::move(frame));
  }
  if (frames.empty()) reader.Fail(0, "no feature rows");
  try {
    return KeyframeFeatures(entity_id, std::move(frames));
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", source, e.what()));
  }
}

void WriteFeatures(std::ostream& out, const KeyframeFeatures& features) {
  out << "# adslot.features v1\n";
  for (const FeatureVector& frame : features.frames()) {
    for (size_t i = 0; i < frame.size(); ++i) {
      if (i > 0) out << ' ';
      out << FormatNumber(frame[i]);
    }
    out << '\n';
  }
}

std::vector<KeyframeFeatures> LoadFeatureDirectory(
    const std::filesystem::path& dir, const std::vector<std::string>& ids) {
  std::vector<KeyframeFeatures> result;
  for (const std::string& id : ids) {
    std::filesystem::path path = dir / (id + ".txt");
    if (!std::filesystem::exists(path)) path = dir / (id + ".csv");
    if (!std::filesystem::exists(path)) {
      throw Error(
          ErrorCode::kMissingEntity,
          fmt::format("no feature file for '{}' in '{}'", id, dir.string()));
    }
    std::ifstream in = OpenForRead(path);
    result.push_back(ReadFeatures(in, id, path.string()));
  }
  return result;
}

RelevanceMatrix ReadRelevance(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  reader.ExpectHeader("rel");
  std::vector<double> values;
  std::vector<std::string> fields;
  int rows = 0;
  int cols = -1;
  while (reader.Next(fields)) {
    if (cols >= 0 && static_cast<int>(fields.size()) != cols) {
      reader.Throw(
          ErrorCode::kDimensionMismatch, 0,
          fmt::format("row has {} values, expected {}", fields.size(), cols));
    }
    cols = static_cast<int>(fields.size());
    for (size_t i = 0; i < fields.size(); ++i) {
      const double v = reader.Number(fields[i], static_cast<int>(i) + 1);
      if (!(v >= -1.0 && v <= 1.0)) {
        reader.Fail(static_cast<int>(i) + 1,
                    fmt::format("relevance {} outside [-1, 1]", fields[i]));
      }
      values.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) reader.Fail(0, "relevance matrix has no rows");
  return RelevanceMatrix(rows, cols, std::move(values));
}

RelevanceMatrix LoadRelevance(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  return ReadRelevance(in, path.string());
}

void WriteRelevance(std::ostream& out, const RelevanceMatrix& rel) {
  out << "# adslot.rel v1\n";
  for (int i = 0; i < rel.rows(); ++i) {
    for (int j = 0; j < rel.cols(); ++j) {
      if (j > 0) out << ',';
      out << FormatNumber(rel.at(i, j));
    }
    out << '\n';
  }
}

Schedule ReadSchedule(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  reader.ExpectHeader("schedule");
  std::vector<std::string> fields;
  if (!reader.Next(fields)) reader.Fail(0, "missing 'slot,rank,ad_id' header");
  reader.ExpectColumns(fields, {"slot", "rank", "ad_id"});
  Schedule schedule;
  while (reader.Next(fields)) {
    if (fields.size() != 3) {
      reader.Fail(0, fmt::format("expected 3 fields, got {}", fields.size()));
    }
    schedule.entries.push_back({reader.Integer(fields[0], 1),
                                reader.Integer(fields[1], 2), fields[2]});
  }
  return schedule;
}

void WriteSchedule(std::ostream& out, const Schedule& schedule) {
  out << "# adslot.schedule v1\n";
  out << "slot,rank,ad_id\n";
  for (const ScheduleEntry& e : schedule.Sorted().entries) {
    out << e.slot << ',' << e.rank << ',' << e.ad_id << '\n';
  }
}

VpsProfile ReadProfile(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  reader.ExpectHeader("profile");
  std::vector<std::string> fields;
  if (!reader.Next(fields)) reader.Fail(0, "missing profile column header");
  reader.ExpectColumns(fields,
                       {"position", "kind", "entity_id", "valence_0_100"});
  VpsProfile profile;
  while (reader.Next(fields)) {
    if (fields.size() != 4) {
      reader.Fail(0, fmt::format("expected 4 fields, got {}", fields.size()));
    }
    PointKind kind;
    if (fields[1] == "scene") {
      kind = PointKind::kScene;
    } else if (fields[1] == "ad") {
      kind = PointKind::kAd;
    } else {
      reader.Fail(2, fmt::format("unknown kind '{}'", fields[1]));
    }
    profile.points.push_back({reader.Integer(fields[0], 1), kind, fields[2],
                              reader.Number(fields[3], 4)});
  }
  return profile;
}

void WriteProfile(std::ostream& out, const VpsProfile& profile) {
  out << "# adslot.profile v1\n";
  out << "position,kind,entity_id,valence_0_100\n";
  for (const ProfilePoint& p : profile.points) {
    out << p.position << ',' << (p.kind == PointKind::kScene ? "scene" : "ad")
        << ',' << p.entity_id << ',' << FormatNumber(p.valence_0_100) << '\n';
  }
}

nlohmann::json ReportToJson(const SolveReport& report,
                            const RewardParams& params) {
  nlohmann::json schedule = nlohmann::json::array();
  for (const ScheduleEntry& e : report.schedule.Sorted().entries) {
    schedule.push_back(
        {{"slot", e.slot}, {"rank", e.rank}, {"ad_id", e.ad_id}});
  }
  nlohmann::json j = {
      {"format", "adslot.report"},
      {"version", 1},
      {"solver", SolverName(report.solver)},
      {"alpha", params.alpha()},
      {"beta", params.beta()},
      {"k", params.k()},
      {"reward", report.reward},
      {"candidates_evaluated", report.candidates_evaluated},
      {"nodes_pruned", report.nodes_pruned},
      {"upper_bound", nullptr},
      {"wall_time_seconds",
       std::chrono::duration<double>(report.wall_time).count()},
      {"schedule", std::move(schedule)},
  };
  if (report.upper_bound) j["upper_bound"] = *report.upper_bound;
  return j;
}

}  // namespace adslot
