#include "cli.hpp"

#include "fuzzassess/classroom.hpp"
#include "fuzzassess/errors.hpp"
#include "fuzzassess/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>

namespace fuzzassess::cli {

namespace {

struct GeometryFlags {
  double base = TrapezoidGeometry::standard().base;
  double top = TrapezoidGeometry::standard().top;
  double stride = TrapezoidGeometry::standard().stride;

  void attach(CLI::App *cmd) {
    cmd->add_option("--base", base, "Trapezoid base length")->capture_default_str();
    cmd->add_option("--top", top, "Trapezoid top length (0 for triangles)")->capture_default_str();
    cmd->add_option("--stride", stride, "Distance between consecutive trapezoids")->capture_default_str();
  }

  TrapezoidGeometry get() const {
    TrapezoidGeometry g{base, top, stride};
    g.validate();
    return g;
  }
};

std::vector<GroupRecord> read_groups(const std::string &input, std::istream &in) {
  if (input == "-") {
    return parse_scores_csv(in);
  }
  return parse_scores_csv(std::filesystem::path(input));
}

std::optional<std::filesystem::path> optional_path(const std::string &s) {
  if (s.empty()) {
    return std::nullopt;
  }
  return std::filesystem::path(s);
}

std::array<std::uint64_t, kGradeCount> parse_counts(const std::string &text) {
  std::array<std::uint64_t, kGradeCount> counts{};
  std::size_t k = 0;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto field = rest.substr(0, comma);
    if (k == kGradeCount) {
      throw InputError("--counts takes exactly five values F,D,C,B,A");
    }
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), counts[k]);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw InputError(fmt::format("--counts value '{}' is not a non-negative integer", field));
    }
    ++k;
    if (comma == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  if (k != kGradeCount) {
    throw InputError("--counts takes exactly five values F,D,C,B,A");
  }
  return counts;
}

std::string verdict_line(const std::string &a, const std::string &b, const ComparisonVerdict &v) {
  const std::string winner = v.winner == Winner::FIRST ? a : v.winner == Winner::SECOND ? b : "tie";
  return fmt::format("{:<4}  winner {} ({})", to_string(v.measure), winner, to_string(v.rule));
}

}  // namespace

int run(std::span<const std::string> args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Assess graded cohorts with mean, GPA, center-of-gravity and trapezoidal fuzzy measures",
               std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string input;
  std::string scale_path;
  bool json = false;
  GeometryFlags geometry;

  auto *report_cmd = app.add_subcommand("report", "Compute every measure for each group in a score file");
  report_cmd->add_option("-i,--input", input, "CSV with header group,score ('-' for stdin)")->required();
  report_cmd->add_option("--scale", scale_path, "JSON grade scale of lower bounds");
  report_cmd->add_flag("--json", json, "Emit JSON instead of text");
  geometry.attach(report_cmd);

  std::vector<std::string> pair;
  double eps = kDefaultTieEps;
  auto *compare_cmd = app.add_subcommand("compare", "Verdicts between two groups under every measure");
  compare_cmd->add_option("-i,--input", input, "CSV with header group,score ('-' for stdin)")->required();
  compare_cmd->add_option("--groups", pair, "The two group ids (default: the file's only two groups)")
      ->expected(2);
  compare_cmd->add_option("--scale", scale_path, "JSON grade scale of lower bounds");
  compare_cmd->add_option("--eps", eps, "Tie tolerance")->capture_default_str();
  compare_cmd->add_flag("--json", json, "Emit JSON instead of text");
  geometry.attach(compare_cmd);

  std::string counts_text;
  std::string group_id;
  auto *scheme_cmd = app.add_subcommand("scheme", "Emit membership scheme polygons and centroids as JSON");
  auto *counts_opt = scheme_cmd->add_option("--counts", counts_text, "Student counts F,D,C,B,A");
  auto *input_opt = scheme_cmd->add_option("-i,--input", input, "CSV with header group,score ('-' for stdin)");
  scheme_cmd->add_option("--group", group_id, "Group to draw from --input (default: first)")->needs(input_opt);
  scheme_cmd->add_option("--scale", scale_path, "JSON grade scale of lower bounds");
  counts_opt->excludes(input_opt);
  geometry.attach(scheme_cmd);

  auto *check_cmd = app.add_subcommand("paper-check",
                                       "Recompute the bundled two-department example against its published values");
  check_cmd->add_flag("--json", json, "Emit JSON instead of text");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    const auto *sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "run '" << kToolName << (sub == &app ? "" : " " + sub->get_name()) << " --help' for usage\n";
    return kConfigError;
  }

  try {
    if (*report_cmd) {
      const auto scale = load_scale_config(optional_path(scale_path));
      const auto geom = geometry.get();
      const auto report = run_report(read_groups(input, in), scale, geom);
      out << (json ? to_json(report).dump(2) + "\n" : render_text(report));
      return kSuccess;
    }

    if (*compare_cmd) {
      const auto scale = load_scale_config(optional_path(scale_path));
      const auto geom = geometry.get();
      const auto all = read_groups(input, in);
      std::vector<GroupRecord> chosen;
      if (pair.empty()) {
        if (all.size() != 2) {
          throw InputError(fmt::format("file has {} groups; pick two with --groups", all.size()));
        }
        chosen = all;
      } else {
        for (const auto &id : pair) {
          const auto it = std::find_if(all.begin(), all.end(), [&](const GroupRecord &g) { return g.id == id; });
          if (it == all.end()) {
            throw InputError(fmt::format("group '{}' not found in input", id));
          }
          chosen.push_back(*it);
        }
        if (chosen[0].id == chosen[1].id) {
          throw InputError("compare needs two different groups");
        }
      }
      const auto report = run_report(chosen, scale, geom);
      const auto &a = report.groups[0];
      const auto &b = report.groups[1];
      const ComparisonVerdict verdicts[] = {
          compare_values(a.mean, b.mean, Measure::MEAN, eps),
          compare_values(a.gpa, b.gpa, Measure::GPA, eps),
          compare_points(a.cog, b.cog, criterion_threshold(Method::COG), eps),
          compare_points(a.tfam, b.tfam, criterion_threshold(geom), eps),
      };
      if (json) {
        nlohmann::ordered_json doc;
        doc["first"] = a.id;
        doc["second"] = b.id;
        doc["verdicts"] = nlohmann::ordered_json::array();
        for (const auto &v : verdicts) {
          const std::string winner = v.winner == Winner::FIRST ? a.id : v.winner == Winner::SECOND ? b.id : "tie";
          doc["verdicts"].push_back(
              {{"measure", to_string(v.measure)}, {"winner", winner}, {"rule", to_string(v.rule)}});
        }
        out << doc.dump(2) << '\n';
      } else {
        out << a.id << " vs " << b.id << '\n';
        for (const auto &v : verdicts) {
          out << "  " << verdict_line(a.id, b.id, v) << '\n';
        }
      }
      return kSuccess;
    }

    if (*scheme_cmd) {
      const auto geom = geometry.get();
      std::optional<GradeDistribution> dist;
      if (!counts_text.empty()) {
        dist = GradeDistribution(parse_counts(counts_text));
      } else if (!input.empty()) {
        const auto scale = load_scale_config(optional_path(scale_path));
        const auto all = read_groups(input, in);
        auto it = all.begin();
        if (!group_id.empty()) {
          it = std::find_if(all.begin(), all.end(), [&](const GroupRecord &g) { return g.id == group_id; });
          if (it == all.end()) {
            throw InputError(fmt::format("group '{}' not found in input", group_id));
          }
        }
        dist = distribution_from_scores(it->scores, scale);
      } else {
        throw InputError("scheme needs --counts or --input");
      }
      out << emit_scheme_geometry(frequencies(*dist), geom).dump(2) << '\n';
      return kSuccess;
    }

    if (*check_cmd) {
      const auto rows = classroom::check();
      if (json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
          doc.push_back({{"quantity", r.quantity},
                         {"computed", r.computed},
                         {"published", r.published},
                         {"matches", r.matches},
                         {"note", r.note}});
        }
        out << doc.dump(2) << '\n';
      } else {
        out << classroom::render_check(rows);
      }
      return kSuccess;
    }
  } catch (const InputError &e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConfigError &e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace fuzzassess::cli
