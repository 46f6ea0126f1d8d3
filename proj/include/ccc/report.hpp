#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccc/inference.hpp"
#include "ccc/process.hpp"

namespace ccc {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kSoftwareVersion = "1.0.0";

struct InputMetadata {
  std::string x_file;
  std::string y_file;
  std::string x_label;
  std::string y_label;
  int m = 0;
  int n = 0;
  std::string tie_policy = "error";  // requested: error | jitter
  bool jitter_applied = false;

  bool operator==(const InputMetadata&) const = default;
};

/// Everything `analyze` produces for one comparison.
struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  std::string software_version = kSoftwareVersion;
  InputMetadata input;
  std::uint64_t seed = 0;
  /// Wall-clock creation time; only set on request so reruns stay byte-identical.
  std::optional<std::string> created;
  BarSeries bars;
  AcceptanceRegions regions;
  std::vector<TestReport> tests;

  const TestReport* test(Statistic statistic) const;
};

bool operator==(const BarSeries& a, const BarSeries& b);
bool operator==(const AnalysisReport& a, const AnalysisReport& b);

nlohmann::json to_json(const AnalysisReport& report);
/// Unknown fields are ignored. Throws ParseError on missing or malformed fields.
AnalysisReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BarSeries& bars);
nlohmann::json to_json(const AcceptanceRegions& regions);
nlohmann::json to_json(const TestReport& test);

}  // namespace ccc
