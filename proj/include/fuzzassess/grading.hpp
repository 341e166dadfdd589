#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace fuzzassess {

/// Linguistic grades, ordered worst to best. The underlying value is the
/// ordinal index used by every weighted formula (F = 1, ..., A = 5).
enum class Grade : int { F = 1, D = 2, C = 3, B = 4, A = 5 };

inline constexpr std::size_t kGradeCount = 5;
inline constexpr std::array<Grade, kGradeCount> kAllGrades{Grade::F, Grade::D, Grade::C, Grade::B, Grade::A};

constexpr int ordinal(Grade g) noexcept { return static_cast<int>(g); }
constexpr std::size_t slot(Grade g) noexcept { return static_cast<std::size_t>(ordinal(g) - 1); }

std::string_view to_string(Grade g) noexcept;
Grade grade_from_ordinal(int i);

struct ScoreInterval {
  double lower;
  double upper;
  bool upper_closed;  // only the top grade includes its upper bound (100)

  bool contains(double score) const noexcept {
    return score >= lower && (upper_closed ? score <= upper : score < upper);
  }
};

/// Five half-open intervals partitioning [0, 100], one per grade, each grade's
/// interval above the previous one. Built from the five lower bounds.
class GradeScale {
public:
  /// Lower bounds indexed F..A. Throws ConfigError unless F starts at 0 and
  /// the bounds strictly increase below 100.
  explicit GradeScale(const std::array<double, kGradeCount> &lower_bounds);

  /// A = [85,100], B = [75,85), C = [60,75), D = [50,60), F = [0,50).
  static GradeScale standard();

  ScoreInterval interval(Grade g) const noexcept;
  double lower_bound(Grade g) const noexcept { return lower_[slot(g)]; }
  const std::array<double, kGradeCount> &lower_bounds() const noexcept { return lower_; }

  bool operator==(const GradeScale &) const = default;

private:
  std::array<double, kGradeCount> lower_;
};

inline constexpr double kMinScore = 0.0;
inline constexpr double kMaxScore = 100.0;

/// Throws DomainError for scores outside [0, 100] (NaN included).
Grade classify(double score, const GradeScale &scale);

/// Student counts per grade for one group.
class GradeDistribution {
public:
  /// Counts indexed F..A; throws EmptyGroupError when they sum to zero.
  explicit GradeDistribution(const std::array<std::uint64_t, kGradeCount> &counts);

  std::uint64_t count(Grade g) const noexcept { return counts_[slot(g)]; }
  const std::array<std::uint64_t, kGradeCount> &counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }

  bool operator==(const GradeDistribution &) const = default;

private:
  std::array<std::uint64_t, kGradeCount> counts_;
  std::uint64_t total_;
};

GradeDistribution distribution_from_scores(std::span<const double> scores, const GradeScale &scale);

/// Membership degrees y1..y5 (F..A): each in [0,1], summing to 1.
class FrequencyVector {
public:
  static constexpr double kSumTolerance = 1e-12;

  /// Validates the simplex constraints; throws DomainError otherwise.
  explicit FrequencyVector(const std::array<double, kGradeCount> &values);

  static FrequencyVector uniform();
  static FrequencyVector concentrated(Grade g);

  double operator[](Grade g) const noexcept { return y_[slot(g)]; }
  /// 1-based, matching the ordinal index.
  double at_ordinal(int i) const { return y_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<double, kGradeCount> &values() const noexcept { return y_; }

private:
  std::array<double, kGradeCount> y_;
};

FrequencyVector frequencies(const GradeDistribution &dist);

}  // namespace fuzzassess
