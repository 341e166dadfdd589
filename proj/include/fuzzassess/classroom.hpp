#pragma once

// Two-department exam used as the worked example, with the values published
// alongside it. Some published values disagree with the formulas; see
// published_errata().

#include "fuzzassess/report.hpp"

#include <string>
#include <vector>

namespace fuzzassess::classroom {

/// D1 (38 students) and D2 (29 students).
std::vector<GroupRecord> groups();

struct Published {
  std::array<std::uint64_t, kGradeCount> counts;  // F..A
  double mean;
  double gpa;
  double cog_x;
  double tfam_x;
  QualityLabel tfam_label;
};

Published published_d1();
Published published_d2();

/// The published uniform-spread abscissa of the trapezoid model.
inline constexpr double kPublishedTfamMinimumX = 15.0;

struct CheckRow {
  std::string quantity;
  std::string computed;
  std::string published;
  bool matches;
  std::string note;
};

/// Recomputes every published quantity from the raw scores.
std::vector<CheckRow> check();

/// Notes for published values that the formulas do not reproduce.
std::vector<std::string> published_errata();

/// True if `record` has the same score multiset as D1 or D2.
bool is_classroom_group(const GroupRecord &record);

std::string render_check(const std::vector<CheckRow> &rows);

}  // namespace fuzzassess::classroom
