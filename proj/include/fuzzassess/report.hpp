#pragma once

#include "fuzzassess/assessors.hpp"
#include "fuzzassess/comparison.hpp"
#include "fuzzassess/grading.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzassess {

inline constexpr std::string_view kToolName = "fuzzassess";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct GroupRecord {
  std::string id;
  std::vector<double> scores;

  bool operator==(const GroupRecord &) const = default;
};

/// CSV with header `group,score`, one student per row, LF or CRLF. Groups keep
/// their first-appearance order. Blank lines are skipped.
std::vector<GroupRecord> parse_scores_csv(std::istream &in);
std::vector<GroupRecord> parse_scores_csv(const std::filesystem::path &path);

/// JSON object of lower bounds, e.g. {"F": 0, "D": 50, "C": 60, "B": 75, "A": 85}.
GradeScale parse_scale_json(std::string_view text);
/// No path means the standard scale.
GradeScale load_scale_config(const std::optional<std::filesystem::path> &path);

struct GroupReport {
  std::string id;
  GradeDistribution distribution;
  FrequencyVector frequencies;
  double mean;
  Grade mean_grade;
  double gpa;
  AssessmentPoint cog;
  AssessmentPoint tfam;  // Method::GENERALIZED when a non-standard geometry is used
  QualityLabel gpa_label;
  QualityLabel cog_label;
  QualityLabel tfam_label;
};

struct PairVerdict {
  std::string first;
  std::string second;
  ComparisonVerdict verdict;
};

struct Report {
  GradeScale scale;
  TrapezoidGeometry geometry;
  std::vector<GroupReport> groups;
  std::vector<PairVerdict> comparisons;            // every pair i < j, every measure
  std::map<Measure, std::vector<std::string>> rankings;  // best first; only with >= 2 groups
  std::vector<std::string> errata;
};

/// Errors from the core modules are rethrown with the group id prefixed.
/// Throws UsageError for no groups or duplicate ids.
Report run_report(const std::vector<GroupRecord> &groups, const GradeScale &scale,
                  const TrapezoidGeometry &geometry = TrapezoidGeometry::standard());

/// Full double precision.
nlohmann::ordered_json to_json(const Report &report);
/// Three decimals.
std::string render_text(const Report &report);

/// Vertex lists, per-shape centroids, aggregate COG and region triangle of
/// the scheme for `y`.
nlohmann::ordered_json emit_scheme_geometry(const FrequencyVector &y, const TrapezoidGeometry &geometry);

nlohmann::ordered_json to_json(const GradeScale &scale);
nlohmann::ordered_json to_json(const TrapezoidGeometry &geometry);

}  // namespace fuzzassess
