#include "hardy/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hardy::report {
namespace {

using nlohmann::ordered_json;

constexpr long kMaxDenominator = 100;
constexpr double kFractionTolerance = 1e-9;

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string world_list(const std::vector<World>& worlds) {
  if (worlds.empty()) return "none";
  std::string out;
  for (const World& w : worlds) {
    if (!out.empty()) out += ' ';
    out += to_string(w);
  }
  return out;
}

}  // namespace

std::string format_probability(double p) {
  std::string out = fixed9(p);
  for (long q = 1; q <= kMaxDenominator; ++q) {
    const double n = std::round(p * static_cast<double>(q));
    if (std::abs(p - n / static_cast<double>(q)) <= kFractionTolerance) {
      const long num = static_cast<long>(n);
      out += " (=" + std::to_string(num);
      if (q != 1) out += "/" + std::to_string(q);
      out += ")";
      break;
    }
  }
  return out;
}

ordered_json to_json(const World& w) {
  ordered_json j;
  j["left_setting"] = to_string(Setting::L(w.left_setting));
  j["right_setting"] = to_string(Setting::R(w.right_setting));
  j["left_outcome"] = std::string(1, sign_char(w.left_outcome));
  j["right_outcome"] = std::string(1, sign_char(w.right_outcome));
  j["probability"] = w.probability;
  return j;
}

ordered_json to_json(const TruthReport& r) {
  ordered_json j;
  j["formula"] = pretty_print(r.formula);
  j["holds"] = r.holds;
  j["witnesses"] = ordered_json::array();
  for (const World& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  j["locality"] = to_string(r.locality);
  j["frame"] = to_string(r.frame);
  j["vacuous_flags"] = ordered_json::array();
  for (const VacuousFlag& v : r.vacuous_flags) {
    j["vacuous_flags"].push_back({{"world", to_json(v.world)}, {"antecedent", to_string(v.antecedent)}});
  }
  return j;
}

ordered_json worlds_json(const WorldModel& model) {
  ordered_json j = ordered_json::array();
  for (const World& w : model.worlds()) j.push_back(to_json(w));
  return j;
}

ordered_json suite_json(const SuiteReport& suite, LocalityCondition locality,
                        FrameOrdering frame) {
  ordered_json j;
  j["locality"] = to_string(locality);
  j["frame"] = to_string(frame);
  for (const auto& [name, r] : suite) j[name] = r.holds;
  ordered_json reports;
  for (const auto& [name, r] : suite) reports[name] = to_json(r);
  j["reports"] = reports;
  return j;
}

ordered_json to_json(const FlowReport& r, LocalityCondition locality, FrameOrdering frame) {
  ordered_json j;
  j["locality"] = to_string(locality);
  j["frame"] = to_string(frame);
  j["f_of_L2"] = r.f_of_L2;
  j["f_of_L1"] = r.f_of_L1;
  j["dependent"] = r.dependent;
  j["witness"] = r.witness ? to_json(*r.witness) : ordered_json(nullptr);
  j["interpretation"] = r.interpretation;
  return j;
}

ordered_json to_json(const ComparisonReport& r) {
  ordered_json j;
  j["variants"] = ordered_json::array();
  for (const SuiteVariant& v : r.variants) {
    ordered_json entry;
    entry["label"] = v.label;
    entry["locality"] = to_string(v.locality);
    entry["frame"] = to_string(v.frame);
    for (const auto& [name, t] : v.suite) entry[name] = t.holds;
    j["variants"].push_back(entry);
  }
  j["stmt1_frame_dependent"] = r.stmt1_frame_dependent;
  if (r.probe_loc1 && r.probe_lightcone) {
    j["probe"] = {{"formula", pretty_print(parse(kLocalityProbe))},
                  {"world", to_json(world(2, 1, '+', '-'))},
                  {"loc1_l_first", *r.probe_loc1},
                  {"lightcone", *r.probe_lightcone}};
  } else {
    j["probe"] = nullptr;
  }
  return j;
}

ordered_json to_json(const FeasibilityReport& r) {
  ordered_json j;
  j["feasible"] = r.feasible;
  j["excluded_strategies"] = ordered_json::array();
  for (const auto& e : r.excluded_strategies) {
    j["excluded_strategies"].push_back({{"strategy", to_string(e.strategy)}, {"constraint", e.constraint}});
  }
  j["surviving_strategies"] = ordered_json::array();
  for (const auto& s : r.surviving_strategies) j["surviving_strategies"].push_back(to_string(s));
  j["contradiction_trace"] = r.contradiction_trace;
  return j;
}

ordered_json to_json(const ScanResult& r, std::size_t steps) {
  ordered_json j;
  j["steps"] = steps;
  j["x_best"] = r.x_best;
  j["p_best"] = r.p_best;
  j["evaluations"] = r.evaluations;
  return j;
}

std::string worlds_text(const WorldModel& model) {
  std::ostringstream os;
  for (const World& w : model.worlds()) {
    os << to_string(Setting::L(w.left_setting)) << ' ' << to_string(Setting::R(w.right_setting))
       << ' ' << sign_char(w.left_outcome) << ' ' << sign_char(w.right_outcome)
       << " p=" << format_probability(w.probability) << '\n';
  }
  return os.str();
}

std::string to_text(const TruthReport& r) {
  std::ostringstream os;
  os << "formula: " << pretty_print(r.formula) << '\n'
     << "locality: " << to_string(r.locality) << '\n'
     << "frame: " << to_string(r.frame) << '\n'
     << "holds: " << yes_no(r.holds) << '\n'
     << "witnesses: " << world_list(r.witnesses) << '\n';
  os << "vacuous: ";
  if (r.vacuous_flags.empty()) os << "none";
  for (std::size_t i = 0; i < r.vacuous_flags.size(); ++i) {
    os << (i ? " " : "") << to_string(r.vacuous_flags[i].antecedent) << "@"
       << to_string(r.vacuous_flags[i].world);
  }
  os << '\n';
  return os.str();
}

std::string suite_text(const SuiteReport& suite, LocalityCondition locality,
                       FrameOrdering frame) {
  std::ostringstream os;
  os << "locality: " << to_string(locality) << "  frame: " << to_string(frame) << '\n';
  for (const auto& [name, r] : suite) {
    os << name << ": " << yes_no(r.holds) << "  " << pretty_print(r.formula);
    if (!r.witnesses.empty()) os << "  witnesses: " << world_list(r.witnesses);
    os << '\n';
  }
  return os.str();
}

std::string to_text(const FlowReport& r, LocalityCondition locality, FrameOrdering frame) {
  std::ostringstream os;
  os << "locality: " << to_string(locality) << "  frame: " << to_string(frame) << '\n'
     << "SR = " << pretty_print(catalog::sr()) << '\n'
     << "f(L2) = " << yes_no(r.f_of_L2) << '\n'
     << "f(L1) = " << yes_no(r.f_of_L1) << '\n'
     << "dependent: " << yes_no(r.dependent) << '\n';
  if (r.witness) os << "witness: " << to_string(*r.witness) << '\n';
  for (const auto& line : r.interpretation) os << "note: " << line << '\n';
  return os.str();
}

std::string to_text(const ComparisonReport& r) {
  std::ostringstream os;
  for (const SuiteVariant& v : r.variants) {
    os << v.label << ":";
    for (const auto& [name, t] : v.suite) os << ' ' << name << '=' << yes_no(t.holds);
    os << '\n';
  }
  os << "stmt1 frame-dependent under loc1: " << yes_no(r.stmt1_frame_dependent) << '\n';
  if (r.probe_loc1 && r.probe_lightcone) {
    os << pretty_print(parse(kLocalityProbe)) << " at " << to_string(world(2, 1, '+', '-'))
       << ": loc1/l-first=" << yes_no(*r.probe_loc1)
       << " lightcone=" << yes_no(*r.probe_lightcone) << '\n';
  }
  return os.str();
}

std::string to_text(const FeasibilityReport& r) {
  std::ostringstream os;
  os << "feasible: " << yes_no(r.feasible) << '\n'
     << "excluded strategies: " << r.excluded_strategies.size() << " of 16\n";
  for (const auto& e : r.excluded_strategies) {
    os << "  " << to_string(e.strategy) << "  by " << e.constraint << '\n';
  }
  os << "surviving strategies: " << r.surviving_strategies.size() << '\n';
  for (const auto& s : r.surviving_strategies) os << "  " << to_string(s) << '\n';
  os << r.contradiction_trace;
  if (!r.contradiction_trace.empty() && r.contradiction_trace.back() != '\n') os << '\n';
  return os.str();
}

std::string to_text(const ScanResult& r, std::size_t steps) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "steps: %zu\nx_best: %.12f\np_best: %.12f\nevaluations: %zu\n",
                steps, r.x_best, r.p_best, r.evaluations);
  return buf;
}

}  // namespace hardy::report
