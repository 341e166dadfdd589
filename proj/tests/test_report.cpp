#include "fuzzassess/classroom.hpp"
#include "fuzzassess/errors.hpp"
#include "fuzzassess/report.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <regex>
#include <sstream>

using namespace fuzzassess;
using nlohmann::ordered_json;

namespace {

const std::filesystem::path kData = FUZZASSESS_DATA_DIR;

std::vector<GroupRecord> parse(const std::string &text) {
  std::istringstream in(text);
  return parse_scores_csv(in);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

template <class E>
std::string message_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const E &e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("csv parsing") {
  const auto two = parse("group,score\nD1,99\nD2,85\n");
  REQUIRE(two.size() == 2);
  CHECK(two[0] == GroupRecord{"D1", {99}});
  CHECK(two[1] == GroupRecord{"D2", {85}});

  const auto crlf = parse("group,score\r\nB,10\r\nA,20.5\r\n\r\nB,30\r\n");
  REQUIRE(crlf.size() == 2);
  CHECK(crlf[0] == GroupRecord{"B", {10, 30}});
  CHECK(crlf[1] == GroupRecord{"A", {20.5}});

  const auto fixture = parse_scores_csv(kData / "classroom.csv");
  REQUIRE(fixture.size() == 2);
  CHECK(fixture[0].id == "D1");
  CHECK(fixture[0].scores.size() == 38);
  CHECK(fixture[1].id == "D2");
  CHECK(fixture[1].scores.size() == 29);
  CHECK(fixture == classroom::groups());
}

TEST_CASE("csv errors carry line numbers") {
  const auto range = message_of<DomainError>([] { parse("group,score\nD1,99\nD1,105\n"); });
  CHECK(range.find("line 3") != std::string::npos);
  CHECK(range.find("105") != std::string::npos);

  CHECK_THROWS_AS(parse(""), EmptyInputError);
  CHECK_THROWS_AS(parse("group,score\n"), EmptyInputError);
  CHECK_THROWS_AS(parse("name,mark\nD1,3\n"), ParseError);
  try {
    parse("group,score\nD1,abc\n");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("group,score\nD1,5,6\n"), ParseError);
  CHECK_THROWS_AS(parse("group,score\nD1\n"), ParseError);
  CHECK_THROWS_AS(parse("group,score\n,50\n"), ParseError);
  CHECK_THROWS_AS(parse("group,score\nD1,\n"), ParseError);
  CHECK_THROWS_AS(parse("group,score\nD1,nan\n"), ParseError);
  CHECK_THROWS_AS(parse_scores_csv(kData / "does-not-exist.csv"), InputError);
}

TEST_CASE("scale config") {
  CHECK(load_scale_config(std::nullopt) == GradeScale::standard());
  CHECK(load_scale_config(kData / "standard_scale.json") == GradeScale::standard());
  CHECK(parse_scale_json(R"({"A": 90, "B": 80, "C": 70, "D": 60, "F": 0})") == GradeScale({0, 60, 70, 80, 90}));

  const auto bad = message_of<ConfigError>(
      [] { parse_scale_json(R"({"F": 0, "D": 60, "C": 50, "B": 75, "A": 85})"); });
  CHECK(bad.find("strictly increase") != std::string::npos);
  CHECK_THROWS_AS(parse_scale_json(R"({"F": 0, "D": 50, "C": 60, "B": 75})"), ConfigError);
  CHECK_THROWS_AS(parse_scale_json(R"({"F": 0, "D": 50, "C": 60, "B": 75, "A": 85, "E": 95})"), ConfigError);
  CHECK_THROWS_AS(parse_scale_json(R"({"F": 0, "D": "50", "C": 60, "B": 75, "A": 85})"), ConfigError);
  CHECK_THROWS_AS(parse_scale_json("[0, 50, 60, 75, 85]"), ConfigError);
  CHECK_THROWS_AS(parse_scale_json("{"), ConfigError);
  CHECK_THROWS_AS(load_scale_config(kData / "missing.json"), ConfigError);
}

TEST_CASE("report on the classroom fixture") {
  const auto report = run_report(classroom::groups(), GradeScale::standard());
  REQUIRE(report.groups.size() == 2);
  const auto &d1 = report.groups[0];
  const auto &d2 = report.groups[1];
  CHECK(near(d1.gpa, 51.0 / 38.0, 1e-12));
  CHECK(near(d2.gpa, 44.0 / 29.0, 1e-12));
  CHECK(near(d1.cog.x, 140.0 / 76.0, 1e-12));
  CHECK(near(d2.cog.x, 117.0 / 58.0, 1e-12));
  CHECK(near(d1.tfam.x, 547.0 / 38.0, 1e-12));
  CHECK(near(d2.tfam.x, 453.0 / 29.0, 1e-12));
  CHECK(d1.tfam.method == Method::TFAM);
  CHECK(d1.mean_grade == Grade::C);
  CHECK(d2.mean_grade == Grade::D);
  CHECK(d2.tfam_label == QualityLabel::LESS_THAN_SATISFACTORY);

  CHECK(report.comparisons.size() == 4);
  for (const auto &c : report.comparisons) {
    const bool d1_wins = c.verdict.measure == Measure::MEAN;
    CHECK(c.verdict.winner == (d1_wins ? Winner::FIRST : Winner::SECOND));
  }
  CHECK(report.rankings.at(Measure::TFAM) == std::vector<std::string>{"D2", "D1"});
  CHECK(report.rankings.at(Measure::MEAN) == std::vector<std::string>{"D1", "D2"});

  REQUIRE_FALSE(report.errata.empty());
  bool mentions_drop = false;
  for (const auto &note : report.errata) {
    mentions_drop = mentions_drop || note.find("drops the -2 term") != std::string::npos;
  }
  CHECK(mentions_drop);
}

TEST_CASE("report on a single ideal student") {
  const auto report = run_report({{"solo", {100}}}, GradeScale::standard());
  const auto &g = report.groups.at(0);
  CHECK(g.gpa == 4.0);
  CHECK(g.cog.x == 4.5);
  CHECK(near(g.tfam.x, 33.0, 1e-12));
  CHECK(g.gpa_label == QualityLabel::MORE_THAN_SATISFACTORY);
  CHECK(g.cog_label == QualityLabel::MORE_THAN_SATISFACTORY);
  CHECK(g.tfam_label == QualityLabel::MORE_THAN_SATISFACTORY);
  CHECK(report.comparisons.empty());
  CHECK(report.rankings.empty());
  CHECK(report.errata.empty());
}

TEST_CASE("report with a custom geometry uses the generalized model") {
  const TrapezoidGeometry triangles{10, 0, 7};
  const auto report = run_report(classroom::groups(), GradeScale::standard(), triangles);
  const auto &d1 = report.groups[0];
  CHECK(d1.tfam.method == Method::GENERALIZED);
  CHECK(near(d1.tfam.x, 547.0 / 38.0, 1e-12));
  CHECK(near(d1.tfam.y, (404.0 / 1444.0) / 3.0, 1e-12));
}

TEST_CASE("report errors name the group") {
  CHECK_THROWS_AS(run_report({}, GradeScale::standard()), UsageError);
  CHECK_THROWS_AS(run_report({{"a", {1}}, {"a", {2}}}, GradeScale::standard()), UsageError);
  const auto empty = message_of<EmptyGroupError>([] { run_report({{"g7", {}}}, GradeScale::standard()); });
  CHECK(empty.find("g7") != std::string::npos);
  const auto range = message_of<DomainError>([] { run_report({{"g8", {50, 120}}}, GradeScale::standard()); });
  CHECK(range.find("g8") != std::string::npos);
  CHECK_THROWS_AS(run_report({{"a", {1}}}, GradeScale::standard(), {10, 4, 20}), ConfigError);
}

TEST_CASE("json report layout and determinism") {
  const auto report = run_report(classroom::groups(), GradeScale::standard());
  const auto doc = to_json(report);
  for (const char *key : {"scale", "geometry", "groups", "comparisons", "errata"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["scale"]["D"] == 50.0);
  CHECK(doc["geometry"]["stride"] == 7.0);
  CHECK(doc["groups"][0]["counts"]["C"] == 13);
  CHECK(doc["groups"][1]["n"] == 29);
  CHECK(doc["groups"][0]["gpa"].get<double>() == report.groups[0].gpa);
  CHECK(doc["groups"][1]["tfam"]["x"].get<double>() == report.groups[1].tfam.x);
  CHECK(doc["comparisons"][0]["winner"] == "D1");

  const auto again = to_json(run_report(parse_scores_csv(kData / "classroom.csv"), GradeScale::standard()));
  CHECK(doc.dump() == again.dump());

  // Full precision survives a dump/parse cycle.
  const auto reparsed = ordered_json::parse(doc.dump());
  CHECK(reparsed["groups"][0]["tfam"]["y"].get<double>() == report.groups[0].tfam.y);
}

TEST_CASE("text report numbers equal json numbers rounded to three decimals") {
  const auto report = run_report(classroom::groups(), GradeScale::standard());
  const auto doc = to_json(report);
  const auto text = render_text(report);

  const auto find = [&](const std::string &pattern) {
    std::smatch m;
    const std::regex re(pattern);
    std::vector<double> values;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it) {
      values.push_back(std::stod((*it)[1].str()));
    }
    return values;
  };
  const auto r3 = [](double v) { return std::round(v * 1000.0) / 1000.0; };

  const auto means = find(R"(\bmean\s+([0-9.]+))");
  const auto gpas = find(R"(\bgpa\s+([0-9.]+))");
  const auto cog_x = find(R"(\bcog\s+x=([0-9.]+))");
  const auto cog_y = find(R"(\bcog\s+x=[0-9.]+ y=([0-9.]+))");
  const auto tfam_x = find(R"(\btfam\s+x=([0-9.]+))");
  const auto tfam_y = find(R"(\btfam\s+x=[0-9.]+ y=([0-9.]+))");
  REQUIRE(means.size() == 2);
  REQUIRE(tfam_y.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto &g = doc["groups"][i];
    CHECK(means[i] == r3(g["mean"].get<double>()));
    CHECK(gpas[i] == r3(g["gpa"].get<double>()));
    CHECK(cog_x[i] == r3(g["cog"]["x"].get<double>()));
    CHECK(cog_y[i] == r3(g["cog"]["y"].get<double>()));
    CHECK(tfam_x[i] == r3(g["tfam"]["x"].get<double>()));
    CHECK(tfam_y[i] == r3(g["tfam"]["y"].get<double>()));
  }
  CHECK(text.find("14.395") != std::string::npos);
  CHECK(text.find("15.621") != std::string::npos);
  CHECK(text.find("errata") != std::string::npos);
}

TEST_CASE("scheme geometry emission") {
  const auto uniform = emit_scheme_geometry(FrequencyVector::uniform(), TrapezoidGeometry::standard());
  CHECK(uniform["shapes"].size() == 5);
  CHECK(near(uniform["cog"][0].get<double>(), 19.0, 1e-12));
  CHECK(near(uniform["cog"][1].get<double>(), 3.0 / 35.0, 1e-12));
  CHECK(uniform["region_triangle"]["minimum"][0] == 19.0);
  CHECK(near(uniform["shapes"][2]["centroid"][0].get<double>(), 19.0, 1e-12));

  const auto ideal = emit_scheme_geometry(FrequencyVector::concentrated(Grade::A), TrapezoidGeometry::standard());
  REQUIRE(ideal["shapes"].size() == 1);
  CHECK(ideal["shapes"][0]["grade"] == "A");
  CHECK(ideal["omitted"].size() == 4);
  CHECK(near(ideal["cog"][0].get<double>(), 33.0, 1e-12));
  CHECK(near(ideal["cog"][1].get<double>(), 3.0 / 7.0, 1e-12));
  CHECK(ideal["shapes"][0]["vertices"][0] == ordered_json::array({28.0, 0.0}));

  const auto bars = emit_scheme_geometry(FrequencyVector({0.1, 0.2, 0.3, 0.3, 0.1}), TrapezoidGeometry::rectangular());
  REQUIRE(bars["shapes"].size() == 5);
  CHECK(bars["shapes"][2]["vertices"] == ordered_json::parse("[[2.0,0.0],[3.0,0.0],[3.0,0.3],[2.0,0.3]]"));
  CHECK(near(bars["cog"][0].get<double>(), 2.6, 1e-12));
}
