#pragma once

// JSON and text renderings of the analysis results. Output is deterministic:
// no timestamps, fixed key order, probabilities to 9 decimals.

#include <string>

#include <json.hpp>

#include "hardy/analysis.hpp"
#include "hardy/scan.hpp"

namespace hardy::report {

// "0.083333333 (=1/12)"; the fraction is shown only within 1e-9.
std::string format_probability(double p);

nlohmann::ordered_json to_json(const World& w);
nlohmann::ordered_json to_json(const TruthReport& r);
nlohmann::ordered_json worlds_json(const WorldModel& model);
nlohmann::ordered_json suite_json(const SuiteReport& suite, LocalityCondition locality,
                                  FrameOrdering frame);
nlohmann::ordered_json to_json(const FlowReport& r, LocalityCondition locality,
                               FrameOrdering frame);
nlohmann::ordered_json to_json(const ComparisonReport& r);
nlohmann::ordered_json to_json(const FeasibilityReport& r);
nlohmann::ordered_json to_json(const ScanResult& r, std::size_t steps);

// "L1 R1 + + p=0.166666667 (=1/6)" per world.
std::string worlds_text(const WorldModel& model);
std::string to_text(const TruthReport& r);
std::string suite_text(const SuiteReport& suite, LocalityCondition locality, FrameOrdering frame);
std::string to_text(const FlowReport& r, LocalityCondition locality, FrameOrdering frame);
std::string to_text(const ComparisonReport& r);
std::string to_text(const FeasibilityReport& r);
std::string to_text(const ScanResult& r, std::size_t steps);

}  // namespace hardy::report
