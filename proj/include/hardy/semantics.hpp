#pragma once

// Truth conditions. (E []-> O) holds at W iff O holds in every possible world
// that agrees with W except for what changing the choice to E may affect:
// the other region keeps its choice, and keeps its outcome whenever the
// active locality condition protects it.

#include <optional>
#include <vector>

#include "hardy/formula.hpp"
#include "hardy/worlds.hpp"

namespace hardy {

struct AccessibleSet {
  World source;
  Region changed_region = Region::Left;
  Setting new_setting;
  std::vector<World> worlds;
};

enum class CounterfactualValue { True, False, Vacuous };

std::string to_string(CounterfactualValue v);

// Whether changing a choice in `changed` leaves the other region's outcome fixed.
bool protects_other_outcome(Region changed, FrameOrdering frame, LocalityCondition locality);

// Throws UnknownWorldError if w is not a world of the model.
AccessibleSet accessible_worlds(const WorldModel& model, const World& w, Setting e,
                                LocalityCondition locality);

// Vacuous when no world is accessible; never conflated with True.
CounterfactualValue eval_counterfactual(const WorldModel& model, const World& w, Setting e,
                                        const Formula& consequent, LocalityCondition locality);

// A counterfactual whose accessible set came out empty during evaluation.
struct VacuousFlag {
  World world;
  Setting antecedent;
};

// World-level truth. Vacuous counterfactuals count as false and are appended
// to `vacuous` when given. Throws NestingError on `=>`.
bool eval_world(const WorldModel& model, const World& w, const Formula& f,
                LocalityCondition locality, std::vector<VacuousFlag>* vacuous = nullptr);

struct TruthReport {
  Formula formula;
  bool holds = false;
  // Worlds where the antecedent holds and the consequent fails.
  std::vector<World> witnesses;
  LocalityCondition locality = LocalityCondition::LOC1;
  FrameOrdering frame = FrameOrdering::LeftBeforeRight;
  std::vector<VacuousFlag> vacuous_flags;
};

// Entailment over the model: an Entails root is checked as antecedent =>
// consequent, any other formula as true => f.
TruthReport eval_model(const WorldModel& model, const Formula& f, LocalityCondition locality);

}  // namespace hardy
