#pragma once

#include "fuzzassess/assessors.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuzzassess {

enum class Measure { MEAN, GPA, COG, TFAM };

enum class DecidingRule { FIRST_COORD, SECOND_COORD_HIGH_REGION, SECOND_COORD_LOW_REGION, EXACT_TIE };

enum class Winner { FIRST, SECOND, TIE };

enum class QualityLabel { LESS_THAN_SATISFACTORY, SATISFACTORY, MORE_THAN_SATISFACTORY };

std::string_view to_string(Measure m) noexcept;
std::string_view to_string(DecidingRule r) noexcept;
std::string_view to_string(QualityLabel l) noexcept;

struct ComparisonVerdict {
  Winner winner;
  DecidingRule rule;
  Measure measure;
};

inline constexpr double kDefaultTieEps = 1e-9;

/// Abscissa of the uniform-spread point, where the tie-break on the second
/// coordinate flips direction.
double criterion_threshold(Method method);
double criterion_threshold(const TrapezoidGeometry &geom);

/// Three-rule criterion: larger x wins; on equal x, larger y wins at or above
/// `threshold` and smaller y wins below it. Throws UsageError when the points
/// come from different methods or eps <= 0.
ComparisonVerdict compare_points(const AssessmentPoint &p, const AssessmentPoint &q, double threshold,
                                 double eps = kDefaultTieEps);

/// Single-number measures (mean, GPA): larger wins, else EXACT_TIE.
ComparisonVerdict compare_values(double p, double q, Measure measure, double eps = kDefaultTieEps);

/// Compares against half of the ideal value. Throws UsageError if ideal <= 0.
QualityLabel quality_label(double value, double ideal, double eps = kDefaultTieEps);

using RankedPoint = std::pair<std::string, AssessmentPoint>;

/// Best first. Insertion sort driven by compare_points, so exact ties keep
/// input order. The pairwise rule is not transitive across groups that tie on
/// x in different threshold regions; for such inputs the order depends on
/// input order. Throws UsageError for fewer than two groups.
std::vector<std::string> rank_groups(const std::vector<RankedPoint> &points, double threshold,
                                     double eps = kDefaultTieEps);

}  // namespace fuzzassess
