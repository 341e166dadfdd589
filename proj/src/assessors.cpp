#include "fuzzassess/assessors.hpp"

#include "fuzzassess/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numeric>

namespace fuzzassess {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::COG: return "COG";
    case Method::TFAM: return "TFAM";
    case Method::GENERALIZED: return "GENERALIZED";
  }
  return "?";
}

void TrapezoidGeometry::validate() const {
  if (!std::isfinite(base) || !std::isfinite(top) || !std::isfinite(stride)) {
    throw ConfigError("trapezoid geometry must be finite");
  }
  if (!(base > 0.0)) {
    throw ConfigError(fmt::format("trapezoid base must be positive, got {}", base));
  }
  if (!(top >= 0.0 && top <= base)) {
    throw ConfigError(fmt::format("trapezoid top must lie in [0, base={}], got {}", base, top));
  }
  if (!(stride > 0.0 && stride <= base)) {
    throw ConfigError(fmt::format("trapezoid stride must lie in (0, base={}], got {}", base, stride));
  }
}

namespace {

double sum_of_squares(const FrequencyVector &y) {
  const auto &v = y.values();
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

double ordinal_weighted_sum(const FrequencyVector &y) {
  double s = 0.0;
  for (Grade g : kAllGrades) {
    s += ordinal(g) * y[g];
  }
  return s;
}

}  // namespace

double mean_score(std::span<const double> scores) {
  if (scores.empty()) {
    throw EmptyGroupError("cannot take the mean of an empty group");
  }
  return std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
}

double gpa(const FrequencyVector &y) {
  return y[Grade::D] + 2.0 * y[Grade::C] + 3.0 * y[Grade::B] + 4.0 * y[Grade::A];
}

AssessmentPoint cog_rectangular(const FrequencyVector &y) {
  const double x = 0.5 * (y[Grade::F] + 3.0 * y[Grade::D] + 5.0 * y[Grade::C] + 7.0 * y[Grade::B] +
                          9.0 * y[Grade::A]);
  return {x, 0.5 * sum_of_squares(y), Method::COG};
}

AssessmentPoint tfam(const FrequencyVector &y) {
  return {7.0 * ordinal_weighted_sum(y) - 2.0, (3.0 / 7.0) * sum_of_squares(y), Method::TFAM};
}

AssessmentPoint generalized_trapezoid(const FrequencyVector &y, const TrapezoidGeometry &geom) {
  geom.validate();
  double x = 0.0;
  for (Grade g : kAllGrades) {
    x += y[g] * geom.center_of(g);
  }
  return {x, geom.centroid_height_ratio() * sum_of_squares(y), Method::GENERALIZED};
}

RegionTriangle region_triangle(const TrapezoidGeometry &geom) {
  geom.validate();
  const double h = geom.centroid_height_ratio();
  return {
      {geom.center_of(Grade::F), h, Method::GENERALIZED},
      {geom.center_of(Grade::C), h / 5.0, Method::GENERALIZED},
      {geom.center_of(Grade::A), h, Method::GENERALIZED},
  };
}

RegionTriangle region_triangle(Method method) {
  switch (method) {
    case Method::COG:
      return {{0.5, 0.5, Method::COG}, {2.5, 0.1, Method::COG}, {4.5, 0.5, Method::COG}};
    case Method::TFAM:
      // The minimum is the image of the uniform spread under X = 7*sum(i*yi) - 2.
      return {{5.0, 3.0 / 7.0, Method::TFAM}, {19.0, 3.0 / 35.0, Method::TFAM}, {33.0, 3.0 / 7.0, Method::TFAM}};
    case Method::GENERALIZED:
      break;
  }
  throw UsageError("region_triangle(GENERALIZED) needs a TrapezoidGeometry");
}

bool contains(const RegionTriangle &tri, const AssessmentPoint &p, double slack) noexcept {
  const AssessmentPoint *v[3] = {&tri.worst, &tri.minimum, &tri.ideal};
  const double orient = (v[1]->x - v[0]->x) * (v[2]->y - v[0]->y) - (v[1]->y - v[0]->y) * (v[2]->x - v[0]->x);
  const double sign = orient >= 0.0 ? 1.0 : -1.0;
  for (int k = 0; k < 3; ++k) {
    const auto &a = *v[k];
    const auto &b = *v[(k + 1) % 3];
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double len = std::hypot(ex, ey);
    if (len == 0.0) {
      continue;
    }
    const double dist = sign * (ex * (p.y - a.y) - ey * (p.x - a.x)) / len;
    if (dist < -slack) {
      return false;
    }
  }
  return true;
}

}  // namespace fuzzassess
