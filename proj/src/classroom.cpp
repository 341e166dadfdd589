#include "fuzzassess/classroom.hpp"

#include "fuzzassess/assessors.hpp"
#include "fuzzassess/comparison.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <utility>

namespace fuzzassess::classroom {

namespace {

std::vector<double> expand(std::initializer_list<std::pair<double, int>> runs) {
  std::vector<double> scores;
  for (const auto &[score, times] : runs) {
    scores.insert(scores.end(), static_cast<std::size_t>(times), score);
  }
  return scores;
}

// Published values are printed to three decimals.
constexpr double kPrintTolerance = 5e-4;

std::string fixed3(double v) { return fmt::format("{:.3f}", v); }

std::string counts_text(const std::array<std::uint64_t, kGradeCount> &c) {
  return fmt::format("A={} B={} C={} D={} F={}", c[4], c[3], c[2], c[1], c[0]);
}

std::string ordering(const std::string &a, double va, const std::string &b, double vb) {
  if (va == vb) {
    return a + " = " + b;
  }
  return va > vb ? a + " > " + b : b + " > " + a;
}

}  // namespace

std::vector<GroupRecord> groups() {
  return {
      {"D1", expand({{99, 1}, {83, 2}, {82, 1}, {74, 10}, {72, 2}, {70, 1}, {59, 10}, {55, 2}, {48, 7}, {45, 2}})},
      {"D2", expand({{85, 2}, {75, 1}, {62, 2}, {60, 10}, {52, 1}, {50, 8}, {25, 4}, {10, 1}})},
  };
}

Published published_d1() {
  return {{9, 12, 13, 3, 1}, 62.231, 51.0 / 38.0, 140.0 / 76.0, 623.0 / 39.0, QualityLabel::LESS_THAN_SATISFACTORY};
}

Published published_d2() {
  return {{5, 9, 12, 1, 2}, 52.793, 44.0 / 29.0, 117.0 / 58.0, 511.0 / 29.0, QualityLabel::MORE_THAN_SATISFACTORY};
}

std::vector<CheckRow> check() {
  const auto records = groups();
  const auto scale = GradeScale::standard();
  const Published published[2] = {published_d1(), published_d2()};

  struct Computed {
    GradeDistribution dist;
    double mean;
    double gpa;
    AssessmentPoint cog;
    AssessmentPoint tfam;
  };
  std::vector<Computed> computed;
  for (const auto &r : records) {
    const auto dist = distribution_from_scores(r.scores, scale);
    const auto y = frequencies(dist);
    computed.push_back({dist, mean_score(r.scores), gpa(y), cog_rectangular(y), tfam(y)});
  }

  std::vector<CheckRow> rows;
  const auto number_row = [&](std::string quantity, double value, double printed, std::string note) {
    const bool ok = std::abs(value - printed) < kPrintTolerance;
    rows.push_back({std::move(quantity), fixed3(value), fixed3(printed), ok, ok ? "" : std::move(note)});
  };

  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto &id = records[k].id;
    const auto &c = computed[k];
    const auto &p = published[k];
    const auto n = c.dist.total();
    const double score_sum = c.mean * static_cast<double>(n);

    rows.push_back({id + " counts", counts_text(c.dist.counts()), counts_text(p.counts), c.dist.counts() == p.counts,
                    ""});
    number_row(id + " mean", c.mean, p.mean,
               fmt::format("the {} listed scores sum to {:.0f}, giving {:.0f}/{}; the published value equals "
                           "{:.0f}/{}",
                           n, score_sum, score_sum, n, score_sum, std::lround(score_sum / p.mean)));
    number_row(id + " gpa", c.gpa, p.gpa, "");
    number_row(id + " cog x", c.cog.x, p.cog_x, "");

    // X = 7*sum(i*yi) - 2; sum(i*yi) = gpa + 1.
    const double weighted = 7.0 * (c.gpa + 1.0) * static_cast<double>(n);
    const long published_den = std::lround(7.0 * (c.gpa + 1.0) * static_cast<double>(n) / p.tfam_x);
    std::string tfam_note = fmt::format("7*sum(i*yi) - 2 gives {:.0f}/{}; the published value {:.0f}/{} drops the -2 term",
                                        weighted - 2.0 * static_cast<double>(n), n, weighted, published_den);
    if (published_den != static_cast<long>(n)) {
      tfam_note += fmt::format(" and divides by {} instead of n = {}", published_den, n);
    }
    number_row(id + " tfam X", c.tfam.x, p.tfam_x, tfam_note);

    const auto label = quality_label(c.tfam.x, region_triangle(Method::TFAM).ideal.x);
    rows.push_back({id + " tfam label", std::string(to_string(label)), std::string(to_string(p.tfam_label)),
                    label == p.tfam_label,
                    label == p.tfam_label
                        ? ""
                        : fmt::format("X = {:.3f} is below half of the ideal value 33", c.tfam.x)});
  }

  const double uniform_x = tfam(FrequencyVector::uniform()).x;
  number_row("tfam uniform minimum X", uniform_x, kPublishedTfamMinimumX,
             fmt::format("7*(1/5 + 2/5 + 3/5 + 4/5 + 5/5) - 2 = 7*3 - 2 = {:.0f}; the comparison threshold uses {:.0f}",
                         uniform_x, uniform_x));

  const auto &a = computed[0];
  const auto &b = computed[1];
  const auto order_row = [&](std::string measure, double va, double vb, std::string expected) {
    auto got = ordering("D1", va, "D2", vb);
    const bool ok = got == expected;
    rows.push_back({"ordering " + measure, std::move(got), std::move(expected), ok, ""});
  };
  order_row("mean", a.mean, b.mean, "D1 > D2");
  order_row("gpa", a.gpa, b.gpa, "D2 > D1");
  order_row("cog", a.cog.x, b.cog.x, "D2 > D1");
  order_row("tfam", a.tfam.x, b.tfam.x, "D2 > D1");
  return rows;
}

std::vector<std::string> published_errata() {
  std::vector<std::string> notes;
  for (const auto &row : check()) {
    if (!row.matches) {
      notes.push_back(fmt::format("{}: published {}, computed {}; {}", row.quantity, row.published, row.computed,
                                  row.note));
    }
  }
  return notes;
}

bool is_classroom_group(const GroupRecord &record) {
  auto sorted = record.scores;
  std::sort(sorted.begin(), sorted.end());
  for (auto &g : groups()) {
    std::sort(g.scores.begin(), g.scores.end());
    if (g.scores == sorted) {
      return true;
    }
  }
  return false;
}

std::string render_check(const std::vector<CheckRow> &rows) {
  std::size_t wq = 8, wc = 8, wp = 9;
  for (const auto &r : rows) {
    wq = std::max(wq, r.quantity.size());
    wc = std::max(wc, r.computed.size());
    wp = std::max(wp, r.published.size());
  }
  std::string out = fmt::format("{:<{}}  {:<{}}  {:<{}}  status\n", "quantity", wq, "computed", wc, "published", wp);
  for (const auto &r : rows) {
    out += fmt::format("{:<{}}  {:<{}}  {:<{}}  {}\n", r.quantity, wq, r.computed, wc, r.published, wp,
                       r.matches ? "match" : "ERRATUM");
  }
  bool any = false;
  for (const auto &r : rows) {
    if (!r.matches) {
      if (!any) {
        out += "\nerrata\n";
        any = true;
      }
      out += fmt::format("  - {}: {}\n", r.quantity, r.note);
    }
  }
  return out;
}

}  // namespace fuzzassess::classroom
