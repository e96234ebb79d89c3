#include "hardy/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <vector>

#include "hardy/analysis.hpp"
#include "hardy/errors.hpp"
#include "hardy/model_io.hpp"
#include "hardy/report.hpp"
#include "hardy/scan.hpp"

namespace hardy::cli {
namespace {

double parse_real(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a number: " + std::string(text));
  }
  return value;
}

using Expectations = std::vector<std::pair<std::string, bool>>;
using Facts = std::map<std::string, bool>;

Expectations read_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open expect file " + path);
  Expectations out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    const std::string name = eq == std::string::npos ? "" : line.substr(0, eq);
    const std::string value = eq == std::string::npos ? "" : line.substr(eq + 1);
    if (name.empty() || (value != "true" && value != "false")) {
      throw std::invalid_argument(path + ":" + std::to_string(number) +
                                  ": expected name=true|false");
    }
    out.emplace_back(name, value == "true");
  }
  return out;
}

// Returns kAssertionFailed if any expectation is violated.
int check_expectations(const Expectations& expected, const Facts& facts, std::ostream& err) {
  int code = kOk;
  for (const auto& [name, value] : expected) {
    const auto it = facts.find(name);
    if (it == facts.end()) {
      std::string known;
      for (const auto& [k, v] : facts) known += (known.empty() ? "" : ", ") + k;
      throw std::invalid_argument("unknown expectation `" + name + "` (this command reports: " +
                                  (known.empty() ? "nothing" : known) + ")");
    }
    if (it->second != value) {
      err << "expectation failed: " << name << " is " << (it->second ? "true" : "false")
          << ", expected " << (value ? "true" : "false") << '\n';
      code = kAssertionFailed;
    }
  }
  return code;
}

}  // namespace

ModelSource parse_model_source(std::string_view text) {
  if (text == "canonical") return CanonicalSource{};
  if (text.starts_with("family:")) return FamilySource{parse_real(text.substr(7))};
  if (text.starts_with("file:") && text.size() > 5) return FileSource{std::string(text.substr(5))};
  throw std::invalid_argument("model must be canonical, family:<x> or file:<path>");
}

HardyModel build_model(const ModelSource& source) {
  if (const auto* f = std::get_if<FamilySource>(&source)) return hardy_family(f->x);
  if (const auto* f = std::get_if<FileSource>(&source)) return load_model(f->path);
  return canonical_hardy_model();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Possible-worlds checker for Hardy-type counterfactual statements", "hardy"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string model_text;
  std::optional<double> family;
  std::string frame_text = "l-first";
  std::string locality_text = "loc1";
  std::string format_text = "text";
  bool strict = false;
  std::string expect_path;

  app.add_option("--model", model_text, "canonical | family:<x> | file:<path>");
  app.add_option("--family", family, "shorthand for --model family:<x>");
  app.add_option("--epsilon", config.epsilon, "zero-probability threshold, in (0, 0.1)");
  app.add_option("--frame", frame_text, "which region is earlier in the frame")
      ->check(CLI::IsMember({"l-first", "r-first"}));
  app.add_option("--locality", locality_text, "counterfactual locality condition")
      ->check(CLI::IsMember({"loc1", "lightcone"}));
  app.add_option("--format", format_text, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", strict, "exit 1 when a checked formula is false");
  app.add_option("--expect", expect_path, "file of name=true|false lines to assert");

  auto* model_cmd = app.add_subcommand("model", "inspect the possible worlds");
  model_cmd->require_subcommand(1);
  model_cmd->add_subcommand("show", "list the possible worlds with their probabilities");
  std::string formula_text;
  auto* check_cmd = app.add_subcommand("check", "evaluate a formula over the model");
  check_cmd->add_option("formula", formula_text, "formula text")->required();
  app.add_subcommand("suite", "evaluate the catalogue statements stmt1, stmt2, stmt3");
  app.add_subcommand("flow", "dependence of SR on the left-hand choice");
  app.add_subcommand("frames", "compare frames and locality conditions");
  app.add_subcommand("lhv", "deterministic local-hidden-variable feasibility");
  std::size_t steps = 1000;
  auto* scan_cmd = app.add_subcommand("hardy-scan", "maximize P(L1+,R2+) over the Hardy family");
  scan_cmd->add_option("--steps", steps, "grid size (>= 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageOrParseError;
  }

  Expectations expected;
  try {
    if (!model_text.empty() && family) {
      throw std::invalid_argument("give either --model or --family, not both");
    }
    if (family) config.source = FamilySource{*family};
    if (!model_text.empty()) config.source = parse_model_source(model_text);
    if (!(config.epsilon > 0.0 && config.epsilon < 0.1)) {
      throw std::invalid_argument("--epsilon must lie in (0, 0.1)");
    }
    config.frame = frame_text == "r-first" ? FrameOrdering::RightBeforeLeft
                                           : FrameOrdering::LeftBeforeRight;
    config.locality =
        locality_text == "lightcone" ? LocalityCondition::LightCone : LocalityCondition::LOC1;
    config.format = format_text == "json" ? Format::Json : Format::Text;
    if (scan_cmd->parsed() && steps < 10) throw std::invalid_argument("--steps must be >= 10");
    if (!expect_path.empty()) expected = read_expectations(expect_path);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  }

  const bool json = config.format == Format::Json;
  auto emit = [&](const nlohmann::ordered_json& j, const std::string& text) {
    if (json) {
      out << j.dump(2) << '\n';
    } else {
      out << text;
    }
  };

  try {
    Facts facts;
    int code = kOk;
    if (scan_cmd->parsed()) {
      const ScanResult r = hardy_scan(steps);
      emit(report::to_json(r, steps), report::to_text(r, steps));
      return check_expectations(expected, facts, err);
    }

    const HardyModel model = build_model(config.source);
    const JointProbabilityTable table = probability_table(model.state, model.config);

    if (app.got_subcommand("lhv")) {
      const FeasibilityReport r = lhv_feasibility(table, config.epsilon);
      emit(report::to_json(r), report::to_text(r));
      facts["feasible"] = r.feasible;
      return check_expectations(expected, facts, err);
    }
    if (app.got_subcommand("frames")) {
      const ComparisonReport r = frame_comparison(table, config.epsilon);
      emit(report::to_json(r), report::to_text(r));
      for (const auto& v : r.variants)
        for (const auto& [name, t] : v.suite) facts[v.label + "." + name] = t.holds;
      facts["stmt1_frame_dependent"] = r.stmt1_frame_dependent;
      if (r.probe_loc1) facts["probe_loc1"] = *r.probe_loc1;
      if (r.probe_lightcone) facts["probe_lightcone"] = *r.probe_lightcone;
      return check_expectations(expected, facts, err);
    }

    const WorldModel worlds = enumerate_worlds(table, config.epsilon, config.frame);
    if (model_cmd->parsed()) {
      emit(report::worlds_json(worlds), report::worlds_text(worlds));
      facts["hardy_satisfied"] = verify_hardy_constraints(table, config.epsilon).satisfied;
    } else if (check_cmd->parsed()) {
      const TruthReport r = eval_model(worlds, parse(formula_text), config.locality);
      emit(report::to_json(r), report::to_text(r));
      facts["holds"] = r.holds;
      if (strict && !r.holds) code = kAssertionFailed;
    } else if (app.got_subcommand("suite")) {
      const SuiteReport r = theorem_suite(worlds, config.locality);
      emit(report::suite_json(r, config.locality, config.frame),
           report::suite_text(r, config.locality, config.frame));
      for (const auto& [name, t] : r) facts[name] = t.holds;
    } else if (app.got_subcommand("flow")) {
      const FlowReport r = information_flow(worlds, config.locality);
      emit(report::to_json(r, config.locality, config.frame),
           report::to_text(r, config.locality, config.frame));
      facts["f_of_L2"] = r.f_of_L2;
      facts["f_of_L1"] = r.f_of_L1;
      facts["dependent"] = r.dependent;
    }
    return std::max(code, check_expectations(expected, facts, err));
  } catch (const FormulaError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  } catch (const InvalidModelError& e) {
    err << "invalid model: " << e.what() << '\n';
    return kModelError;
  } catch (const InconsistentModelError& e) {
    err << "inconsistent model: " << e.what() << '\n';
    return kModelError;
  } catch (const DomainError& e) {
    err << "invalid model: " << e.what() << '\n';
    return kModelError;
  }
}

}  // namespace hardy::cli
