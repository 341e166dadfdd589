#pragma once

#include "fuzzassess/grading.hpp"

#include <span>
#include <string_view>

namespace fuzzassess {

enum class Method { COG, TFAM, GENERALIZED };

std::string_view to_string(Method m) noexcept;

/// Center of gravity of a membership scheme. `x` measures quality, `y`
/// measures how concentrated the group is on a single grade.
struct AssessmentPoint {
  double x;
  double y;
  Method method;
};

/// Isosceles trapezoids of base `base` and top `top`, left edges `stride`
/// apart; adjacent shapes overlap by base - stride. top == 0 gives triangles,
/// top == base == stride gives the abutting bar chart.
struct TrapezoidGeometry {
  double base;
  double top;
  double stride;

  /// Throws ConfigError unless 0 < base, 0 <= top <= base, 0 < stride <= base.
  void validate() const;

  double overlap() const noexcept { return base - stride; }
  /// Centroid height of a unit-height trapezoid: (2a + b) / (3(a + b)).
  double centroid_height_ratio() const noexcept { return (2.0 * top + base) / (3.0 * (top + base)); }
  double center_of(Grade g) const noexcept { return (ordinal(g) - 1) * stride + base / 2.0; }

  /// base 10, top 4, stride 7 (3 units = 30% shared by neighbours).
  static constexpr TrapezoidGeometry standard() noexcept { return {10.0, 4.0, 7.0}; }
  /// Unit bars on [i-1, i].
  static constexpr TrapezoidGeometry rectangular() noexcept { return {1.0, 1.0, 1.0}; }

  bool operator==(const TrapezoidGeometry &) const = default;
};

/// Extreme points bounding the quality/concentration plane of a method:
/// everyone failing, a uniform spread, everyone excellent.
struct RegionTriangle {
  AssessmentPoint worst;
  AssessmentPoint minimum;
  AssessmentPoint ideal;
};

/// Throws EmptyGroupError on an empty list.
double mean_score(std::span<const double> scores);

/// y2 + 2y3 + 3y4 + 4y5, in [0, 4].
double gpa(const FrequencyVector &y);

/// x = (y1 + 3y2 + 5y3 + 7y4 + 9y5) / 2, y = (y1^2 + ... + y5^2) / 2.
AssessmentPoint cog_rectangular(const FrequencyVector &y);

/// X = 7 * sum(i * yi) - 2, Y = (3/7) * sum(yi^2).
AssessmentPoint tfam(const FrequencyVector &y);

/// Particle-system COG of the trapezoid scheme described by `geom`:
/// X = sum(yi * ((i-1)s + b/2)), Y = ((2a+b) / (3(a+b))) * sum(yi^2).
AssessmentPoint generalized_trapezoid(const FrequencyVector &y, const TrapezoidGeometry &geom);

/// Method::GENERALIZED is rejected with UsageError; use the geometry overload.
RegionTriangle region_triangle(Method method);
RegionTriangle region_triangle(const TrapezoidGeometry &geom);

/// Inside-or-on test with absolute slack on the edge distances.
bool contains(const RegionTriangle &tri, const AssessmentPoint &p, double slack = 1e-9) noexcept;

}  // namespace fuzzassess
