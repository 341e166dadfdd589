#include "fuzzassess/comparison.hpp"

#include "fuzzassess/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <set>

namespace fuzzassess {

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::MEAN: return "MEAN";
    case Measure::GPA: return "GPA";
    case Measure::COG: return "COG";
    case Measure::TFAM: return "TFAM";
  }
  return "?";
}

std::string_view to_string(DecidingRule r) noexcept {
  switch (r) {
    case DecidingRule::FIRST_COORD: return "FIRST_COORD";
    case DecidingRule::SECOND_COORD_HIGH_REGION: return "SECOND_COORD_HIGH_REGION";
    case DecidingRule::SECOND_COORD_LOW_REGION: return "SECOND_COORD_LOW_REGION";
    case DecidingRule::EXACT_TIE: return "EXACT_TIE";
  }
  return "?";
}

std::string_view to_string(QualityLabel l) noexcept {
  switch (l) {
    case QualityLabel::LESS_THAN_SATISFACTORY: return "LESS_THAN_SATISFACTORY";
    case QualityLabel::SATISFACTORY: return "SATISFACTORY";
    case QualityLabel::MORE_THAN_SATISFACTORY: return "MORE_THAN_SATISFACTORY";
  }
  return "?";
}

double criterion_threshold(Method method) { return region_triangle(method).minimum.x; }

double criterion_threshold(const TrapezoidGeometry &geom) { return region_triangle(geom).minimum.x; }

namespace {

Measure measure_of(Method m) {
  // GENERALIZED is the trapezoid model with custom constants.
  return m == Method::COG ? Measure::COG : Measure::TFAM;
}

void check_eps(double eps) {
  if (!(eps > 0.0)) {
    throw UsageError(fmt::format("tie tolerance must be positive, got {}", eps));
  }
}

}  // namespace

ComparisonVerdict compare_points(const AssessmentPoint &p, const AssessmentPoint &q, double threshold, double eps) {
  check_eps(eps);
  if (p.method != q.method) {
    throw UsageError(fmt::format("cannot compare a {} point with a {} point", to_string(p.method),
                                 to_string(q.method)));
  }
  const Measure measure = measure_of(p.method);
  if (std::abs(p.x - q.x) > eps) {
    return {p.x > q.x ? Winner::FIRST : Winner::SECOND, DecidingRule::FIRST_COORD, measure};
  }
  if (std::abs(p.y - q.y) <= eps) {
    return {Winner::TIE, DecidingRule::EXACT_TIE, measure};
  }
  // Shared abscissa; use the midpoint so the region does not depend on argument order.
  if (0.5 * (p.x + q.x) >= threshold) {
    return {p.y > q.y ? Winner::FIRST : Winner::SECOND, DecidingRule::SECOND_COORD_HIGH_REGION, measure};
  }
  return {p.y < q.y ? Winner::FIRST : Winner::SECOND, DecidingRule::SECOND_COORD_LOW_REGION, measure};
}

ComparisonVerdict compare_values(double p, double q, Measure measure, double eps) {
  check_eps(eps);
  if (std::abs(p - q) > eps) {
    return {p > q ? Winner::FIRST : Winner::SECOND, DecidingRule::FIRST_COORD, measure};
  }
  return {Winner::TIE, DecidingRule::EXACT_TIE, measure};
}

QualityLabel quality_label(double value, double ideal, double eps) {
  if (!(ideal > 0.0)) {
    throw UsageError(fmt::format("ideal value must be positive, got {}", ideal));
  }
  const double half = ideal / 2.0;
  if (value < half - eps) {
    return QualityLabel::LESS_THAN_SATISFACTORY;
  }
  if (value > half + eps) {
    return QualityLabel::MORE_THAN_SATISFACTORY;
  }
  return QualityLabel::SATISFACTORY;
}

std::vector<std::string> rank_groups(const std::vector<RankedPoint> &points, double threshold, double eps) {
  if (points.size() < 2) {
    throw UsageError(fmt::format("ranking needs at least two groups, got {}", points.size()));
  }
  std::set<std::string> seen;
  for (const auto &[id, point] : points) {
    if (!seen.insert(id).second) {
      throw UsageError(fmt::format("duplicate group id '{}'", id));
    }
  }

  std::vector<const RankedPoint *> order;
  order.reserve(points.size());
  for (const auto &entry : points) {
    // Move ahead only past groups it strictly beats.
    auto pos = order.end();
    while (pos != order.begin()) {
      const auto verdict = compare_points(entry.second, (*std::prev(pos))->second, threshold, eps);
      if (verdict.winner != Winner::FIRST) {
        break;
      }
      --pos;
    }
    order.insert(pos, &entry);
  }

  std::vector<std::string> ids;
  ids.reserve(order.size());
  for (const auto *entry : order) {
    ids.push_back(entry->first);
  }
  return ids;
}

}  // namespace fuzzassess
