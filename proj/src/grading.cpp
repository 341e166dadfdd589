#include "fuzzassess/grading.hpp"

#include "fuzzassess/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numeric>

namespace fuzzassess {

std::string_view to_string(Grade g) noexcept {
  switch (g) {
    case Grade::F: return "F";
    case Grade::D: return "D";
    case Grade::C: return "C";
    case Grade::B: return "B";
    case Grade::A: return "A";
  }
  return "?";
}

Grade grade_from_ordinal(int i) {
  if (i < 1 || i > static_cast<int>(kGradeCount)) {
    throw UsageError(fmt::format("grade ordinal {} outside 1..5", i));
  }
  return static_cast<Grade>(i);
}

GradeScale::GradeScale(const std::array<double, kGradeCount> &lower_bounds) : lower_(lower_bounds) {
  for (std::size_t i = 0; i < kGradeCount; ++i) {
    if (!std::isfinite(lower_[i])) {
      throw ConfigError(fmt::format("grade {} lower bound is not a finite number", to_string(kAllGrades[i])));
    }
  }
  if (lower_[0] != kMinScore) {
    throw ConfigError(fmt::format("grade F must start at 0, got {}", lower_[0]));
  }
  for (std::size_t i = 1; i < kGradeCount; ++i) {
    if (!(lower_[i] > lower_[i - 1])) {
      throw ConfigError(fmt::format("lower bounds must strictly increase: {} ({}) <= {} ({})",
                                    to_string(kAllGrades[i]), lower_[i], to_string(kAllGrades[i - 1]),
                                    lower_[i - 1]));
    }
  }
  if (!(lower_[kGradeCount - 1] < kMaxScore)) {
    throw ConfigError(fmt::format("grade A lower bound must be below 100, got {}", lower_[kGradeCount - 1]));
  }
}

GradeScale GradeScale::standard() { return GradeScale({0.0, 50.0, 60.0, 75.0, 85.0}); }

ScoreInterval GradeScale::interval(Grade g) const noexcept {
  const auto i = slot(g);
  if (g == Grade::A) {
    return {lower_[i], kMaxScore, true};
  }
  return {lower_[i], lower_[i + 1], false};
}

Grade classify(double score, const GradeScale &scale) {
  if (!(score >= kMinScore && score <= kMaxScore)) {
    throw DomainError(fmt::format("score {} outside [0, 100]", score));
  }
  for (auto it = kAllGrades.rbegin(); it != kAllGrades.rend(); ++it) {
    if (score >= scale.lower_bound(*it)) {
      return *it;
    }
  }
  return Grade::F;  // unreachable: F starts at 0
}

GradeDistribution::GradeDistribution(const std::array<std::uint64_t, kGradeCount> &counts)
    : counts_(counts), total_(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})) {
  if (total_ == 0) {
    throw EmptyGroupError("grade distribution has no students");
  }
}

GradeDistribution distribution_from_scores(std::span<const double> scores, const GradeScale &scale) {
  if (scores.empty()) {
    throw EmptyGroupError("no scores in group");
  }
  std::array<std::uint64_t, kGradeCount> counts{};
  for (double s : scores) {
    ++counts[slot(classify(s, scale))];
  }
  return GradeDistribution(counts);
}

FrequencyVector::FrequencyVector(const std::array<double, kGradeCount> &values) : y_(values) {
  double sum = 0.0;
  for (double v : y_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError(fmt::format("frequency {} outside [0, 1]", v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw DomainError(fmt::format("frequencies sum to {:.17g}, expected 1", sum));
  }
}

FrequencyVector FrequencyVector::uniform() { return FrequencyVector({0.2, 0.2, 0.2, 0.2, 0.2}); }

FrequencyVector FrequencyVector::concentrated(Grade g) {
  std::array<double, kGradeCount> y{};
  y[slot(g)] = 1.0;
  return FrequencyVector(y);
}

FrequencyVector frequencies(const GradeDistribution &dist) {
  const auto n = static_cast<double>(dist.total());
  std::array<double, kGradeCount> y{};
  for (std::size_t i = 0; i < kGradeCount; ++i) {
    y[i] = static_cast<double>(dist.counts()[i]) / n;
  }
  return FrequencyVector(y);
}

}  // namespace fuzzassess
