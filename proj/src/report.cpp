#include "fuzzassess/report.hpp"

#include "fuzzassess/classroom.hpp"
#include "fuzzassess/errors.hpp"
#include "fuzzassess/geometry.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace fuzzassess {

using nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_score(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto *first = field.data();
  const auto *last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ParseError(line, fmt::format("score '{}' is not a number", field));
  }
  if (value < kMinScore || value > kMaxScore) {
    throw DomainError(fmt::format("line {}: score {} outside [0, 100]", line, field));
  }
  return value;
}

}  // namespace

std::vector<GroupRecord> parse_scores_csv(std::istream &in) {
  std::vector<GroupRecord> groups;
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;

  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (line == 1 && text.starts_with("\xEF\xBB\xBF")) {
      text.remove_prefix(3);
    }
    text = trim(text);
    if (text.empty()) {
      continue;
    }
    if (!header_seen) {
      if (text != "group,score") {
        throw ParseError(line, fmt::format("expected header 'group,score', got '{}'", text));
      }
      header_seen = true;
      continue;
    }

    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line, "expected exactly two fields 'group,score'");
    }
    const auto id = trim(text.substr(0, comma));
    if (id.empty()) {
      throw ParseError(line, "empty group id");
    }
    const double score = parse_score(trim(text.substr(comma + 1)), line);

    auto it = std::find_if(groups.begin(), groups.end(), [&](const GroupRecord &g) { return g.id == id; });
    if (it == groups.end()) {
      groups.push_back({std::string(id), {}});
      it = std::prev(groups.end());
    }
    it->scores.push_back(score);
  }

  if (groups.empty()) {
    throw EmptyInputError(header_seen ? "score file has a header but no rows" : "score file is empty");
  }
  return groups;
}

std::vector<GroupRecord> parse_scores_csv(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(fmt::format("cannot open score file '{}'", path.string()));
  }
  return parse_scores_csv(in);
}

GradeScale parse_scale_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error &e) {
    throw ConfigError(fmt::format("scale config is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) {
    throw ConfigError("scale config must be a JSON object of lower bounds");
  }
  for (const auto &[key, value] : doc.items()) {
    const bool known = key.size() == 1 && std::string_view("FDCBA").find(key[0]) != std::string_view::npos;
    if (!known) {
      throw ConfigError(fmt::format("scale config has unknown grade '{}'", key));
    }
  }
  std::array<double, kGradeCount> bounds{};
  for (Grade g : kAllGrades) {
    const std::string key(to_string(g));
    if (!doc.contains(key)) {
      throw ConfigError(fmt::format("scale config is missing grade {}", key));
    }
    if (!doc[key].is_number()) {
      throw ConfigError(fmt::format("scale config bound for {} must be a number", key));
    }
    bounds[slot(g)] = doc[key].get<double>();
  }
  return GradeScale(bounds);
}

GradeScale load_scale_config(const std::optional<std::filesystem::path> &path) {
  if (!path) {
    return GradeScale::standard();
  }
  std::ifstream in(*path, std::ios::binary);
  if (!in) {
    throw ConfigError(fmt::format("cannot open scale config '{}'", path->string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scale_json(buffer.str());
}

namespace {

template <class Fn>
auto for_group(const std::string &id, Fn &&fn) {
  const auto tag = [&](const std::exception &e) { return fmt::format("group '{}': {}", id, e.what()); };
  try {
    return fn();
  } catch (const ParseError &) {
    throw;
  } catch (const EmptyGroupError &e) {
    throw EmptyGroupError(tag(e));
  } catch (const DomainError &e) {
    throw DomainError(tag(e));
  } catch (const InputError &e) {
    throw InputError(tag(e));
  } catch (const ConfigError &e) {
    throw ConfigError(tag(e));
  } catch (const GeometryError &e) {
    throw GeometryError(tag(e));
  } catch (const UsageError &e) {
    throw UsageError(tag(e));
  }
}

constexpr double kGpaIdeal = 4.0;

}  // namespace

Report run_report(const std::vector<GroupRecord> &groups, const GradeScale &scale,
                  const TrapezoidGeometry &geometry) {
  if (groups.empty()) {
    throw UsageError("report needs at least one group");
  }
  geometry.validate();
  std::set<std::string> ids;
  for (const auto &g : groups) {
    if (g.id.empty()) {
      throw UsageError("group id must not be empty");
    }
    if (!ids.insert(g.id).second) {
      throw UsageError(fmt::format("duplicate group id '{}'", g.id));
    }
  }

  const bool standard_geometry = geometry == TrapezoidGeometry::standard();
  const double cog_ideal = region_triangle(Method::COG).ideal.x;
  const double tfam_ideal = region_triangle(geometry).ideal.x;

  Report report{scale, geometry, {}, {}, {}, {}};
  for (const auto &group : groups) {
    report.groups.push_back(for_group(group.id, [&] {
      const auto dist = distribution_from_scores(group.scores, scale);
      const auto y = frequencies(dist);
      const double mean = mean_score(group.scores);
      const double g = gpa(y);
      const auto cog = cog_rectangular(y);
      const auto trap = standard_geometry ? tfam(y) : generalized_trapezoid(y, geometry);
      return GroupReport{group.id,
                         dist,
                         y,
                         mean,
                         classify(mean, scale),
                         g,
                         cog,
                         trap,
                         quality_label(g, kGpaIdeal),
                         quality_label(cog.x, cog_ideal),
                         quality_label(trap.x, tfam_ideal)};
    }));
  }

  if (report.groups.size() >= 2) {
    const double cog_threshold = criterion_threshold(Method::COG);
    const double tfam_threshold = criterion_threshold(geometry);
    const auto &rows = report.groups;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        const auto &a = rows[i];
        const auto &b = rows[j];
        report.comparisons.push_back({a.id, b.id, compare_values(a.mean, b.mean, Measure::MEAN)});
        report.comparisons.push_back({a.id, b.id, compare_values(a.gpa, b.gpa, Measure::GPA)});
        report.comparisons.push_back({a.id, b.id, compare_points(a.cog, b.cog, cog_threshold)});
        report.comparisons.push_back({a.id, b.id, compare_points(a.tfam, b.tfam, tfam_threshold)});
      }
    }

    std::vector<RankedPoint> mean_points, gpa_points, cog_points, tfam_points;
    for (const auto &r : rows) {
      // Scalars ride on the first coordinate with a constant second one.
      mean_points.push_back({r.id, {r.mean, 0.0, Method::COG}});
      gpa_points.push_back({r.id, {r.gpa, 0.0, Method::COG}});
      cog_points.push_back({r.id, r.cog});
      tfam_points.push_back({r.id, r.tfam});
    }
    report.rankings[Measure::MEAN] = rank_groups(mean_points, 0.0);
    report.rankings[Measure::GPA] = rank_groups(gpa_points, 0.0);
    report.rankings[Measure::COG] = rank_groups(cog_points, cog_threshold);
    report.rankings[Measure::TFAM] = rank_groups(tfam_points, tfam_threshold);
  }

  for (const auto &group : groups) {
    if (classroom::is_classroom_group(group)) {
      report.errata = classroom::published_errata();
      break;
    }
  }
  return report;
}

ordered_json to_json(const GradeScale &scale) {
  ordered_json j = ordered_json::object();
  for (Grade g : kAllGrades) {
    j[std::string(to_string(g))] = scale.lower_bound(g);
  }
  return j;
}

ordered_json to_json(const TrapezoidGeometry &geometry) {
  return {{"base", geometry.base}, {"top", geometry.top}, {"stride", geometry.stride}};
}

namespace {

ordered_json point_json(const AssessmentPoint &p) {
  return {{"x", p.x}, {"y", p.y}, {"method", to_string(p.method)}};
}

std::string winner_name(const PairVerdict &v) {
  switch (v.verdict.winner) {
    case Winner::FIRST: return v.first;
    case Winner::SECOND: return v.second;
    case Winner::TIE: break;
  }
  return "tie";
}

constexpr std::array<Measure, 4> kMeasures{Measure::MEAN, Measure::GPA, Measure::COG, Measure::TFAM};

}  // namespace

ordered_json to_json(const Report &report) {
  ordered_json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["scale"] = to_json(report.scale);
  doc["geometry"] = to_json(report.geometry);

  doc["groups"] = ordered_json::array();
  for (const auto &g : report.groups) {
    ordered_json counts = ordered_json::object();
    ordered_json freqs = ordered_json::object();
    for (Grade grade : kAllGrades) {
      counts[std::string(to_string(grade))] = g.distribution.count(grade);
      freqs[std::string(to_string(grade))] = g.frequencies[grade];
    }
    doc["groups"].push_back({
        {"id", g.id},
        {"n", g.distribution.total()},
        {"counts", counts},
        {"frequencies", freqs},
        {"mean", g.mean},
        {"mean_grade", to_string(g.mean_grade)},
        {"gpa", g.gpa},
        {"cog", point_json(g.cog)},
        {"tfam", point_json(g.tfam)},
        {"labels",
         {{"gpa", to_string(g.gpa_label)}, {"cog", to_string(g.cog_label)}, {"tfam", to_string(g.tfam_label)}}},
    });
  }

  doc["comparisons"] = ordered_json::array();
  for (const auto &c : report.comparisons) {
    doc["comparisons"].push_back({{"first", c.first},
                                  {"second", c.second},
                                  {"measure", to_string(c.verdict.measure)},
                                  {"winner", winner_name(c)},
                                  {"rule", to_string(c.verdict.rule)}});
  }

  doc["rankings"] = ordered_json::object();
  for (Measure m : kMeasures) {
    if (const auto it = report.rankings.find(m); it != report.rankings.end()) {
      doc["rankings"][std::string(to_string(m))] = it->second;
    }
  }
  doc["errata"] = report.errata;
  return doc;
}

std::string render_text(const Report &report) {
  std::string out;
  auto line = [&out](const std::string &s) {
    out += s;
    out += '\n';
  };

  line(fmt::format("{} {}", kToolName, kToolVersion));
  std::string scale = "scale   ";
  for (Grade g : kAllGrades) {
    scale += fmt::format(" {}>={:.3f}", to_string(g), report.scale.lower_bound(g));
  }
  line(scale);
  line(fmt::format("geometry base={:.3f} top={:.3f} stride={:.3f}", report.geometry.base, report.geometry.top,
                   report.geometry.stride));

  for (const auto &g : report.groups) {
    line("");
    line(fmt::format("group {} (n = {})", g.id, g.distribution.total()));
    std::string counts = "  counts     ";
    std::string freqs = "  frequency  ";
    for (auto it = kAllGrades.rbegin(); it != kAllGrades.rend(); ++it) {
      counts += fmt::format(" {}={}", to_string(*it), g.distribution.count(*it));
      freqs += fmt::format(" {}={:.3f}", to_string(*it), g.frequencies[*it]);
    }
    line(counts);
    line(freqs);
    line(fmt::format("  mean        {:.3f} (grade {})", g.mean, to_string(g.mean_grade)));
    line(fmt::format("  gpa         {:.3f} {}", g.gpa, to_string(g.gpa_label)));
    line(fmt::format("  cog         x={:.3f} y={:.3f} {}", g.cog.x, g.cog.y, to_string(g.cog_label)));
    line(fmt::format("  {:<11} x={:.3f} y={:.3f} {}", g.tfam.method == Method::TFAM ? "tfam" : "trapezoid",
                     g.tfam.x, g.tfam.y, to_string(g.tfam_label)));
  }

  if (!report.comparisons.empty()) {
    line("");
    line("comparisons");
    for (const auto &c : report.comparisons) {
      line(fmt::format("  {} vs {}  {:<4}  winner {} ({})", c.first, c.second, to_string(c.verdict.measure),
                       winner_name(c), to_string(c.verdict.rule)));
    }
    line("");
    line("rankings");
    for (Measure m : kMeasures) {
      if (const auto it = report.rankings.find(m); it != report.rankings.end()) {
        line(fmt::format("  {:<4}  {}", to_string(m), fmt::join(it->second, " > ")));
      }
    }
  }

  if (!report.errata.empty()) {
    line("");
    line("errata");
    for (const auto &note : report.errata) {
      line("  - " + note);
    }
  }
  return out;
}

ordered_json emit_scheme_geometry(const FrequencyVector &y, const TrapezoidGeometry &geometry) {
  const auto scheme = geometry::build_scheme_polygons(y, geometry);
  ordered_json doc;
  doc["geometry"] = to_json(geometry);

  ordered_json freqs = ordered_json::object();
  for (Grade g : kAllGrades) {
    freqs[std::string(to_string(g))] = y[g];
  }
  doc["frequencies"] = freqs;

  doc["shapes"] = ordered_json::array();
  for (const auto &shape : scheme.shapes) {
    ordered_json vertices = ordered_json::array();
    for (const auto &v : shape.polygon.vertices()) {
      vertices.push_back({v.x, v.y});
    }
    const auto c = geometry::polygon_centroid(shape.polygon);
    doc["shapes"].push_back({{"grade", to_string(shape.grade)},
                             {"vertices", vertices},
                             {"area", shape.polygon.area()},
                             {"centroid", {c.x, c.y}}});
  }
  doc["omitted"] = ordered_json::array();
  for (Grade g : scheme.omitted) {
    doc["omitted"].push_back(to_string(g));
  }

  const auto cog = geometry::scheme_particle_cog(y, geometry);
  doc["cog"] = {cog.x, cog.y};

  const auto tri = region_triangle(geometry);
  doc["region_triangle"] = {{"worst", {tri.worst.x, tri.worst.y}},
                            {"minimum", {tri.minimum.x, tri.minimum.y}},
                            {"ideal", {tri.ideal.x, tri.ideal.y}}};
  return doc;
}

}  // namespace fuzzassess
