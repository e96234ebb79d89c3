#include "hardy/semantics.hpp"

#include "hardy/errors.hpp"

namespace hardy {

std::string to_string(CounterfactualValue v) {
  switch (v) {
    case CounterfactualValue::True:
      return "true";
    case CounterfactualValue::False:
      return "false";
    case CounterfactualValue::Vacuous:
      return "vacuous";
  }
  return "?";
}

bool protects_other_outcome(Region changed, FrameOrdering frame, LocalityCondition locality) {
  if (locality == LocalityCondition::LightCone) return true;
  // LOC1: nothing done later reaches back to an outcome already seen earlier.
  return is_earlier(other(changed), frame);
}

AccessibleSet accessible_worlds(const WorldModel& model, const World& w, Setting e,
                                LocalityCondition locality) {
  const World& source = model.find(w);
  AccessibleSet result{source, e.region, e, {}};
  if (source.setting(e.region) == e) {
    result.worlds.push_back(source);
    return result;
  }
  const Region kept = other(e.region);
  const bool protect = protects_other_outcome(e.region, model.frame(), locality);
  for (const World& candidate : model.worlds()) {
    if (candidate.setting(e.region) != e) continue;
    if (candidate.setting(kept) != source.setting(kept)) continue;
    if (protect && candidate.outcome(kept) != source.outcome(kept)) continue;
    result.worlds.push_back(candidate);
  }
  return result;
}

namespace {

CounterfactualValue counterfactual_value(const WorldModel& model, const World& w, Setting e,
                                         const Formula& consequent, LocalityCondition locality,
                                         std::vector<VacuousFlag>* vacuous) {
  const AccessibleSet access = accessible_worlds(model, w, e, locality);
  if (access.worlds.empty()) return CounterfactualValue::Vacuous;
  for (const World& target : access.worlds) {
    if (!eval_world(model, target, consequent, locality, vacuous)) {
      return CounterfactualValue::False;
    }
  }
  return CounterfactualValue::True;
}

}  // namespace

CounterfactualValue eval_counterfactual(const WorldModel& model, const World& w, Setting e,
                                        const Formula& consequent, LocalityCondition locality) {
  if (consequent.contains_entails()) {
    throw NestingError("counterfactual consequent may not contain `=>`");
  }
  return counterfactual_value(model, w, e, consequent, locality, nullptr);
}

bool eval_world(const WorldModel& model, const World& w, const Formula& f,
                LocalityCondition locality, std::vector<VacuousFlag>* vacuous) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::SettingAtom:
      return w.setting(f.setting().region) == f.setting();
    case K::OutcomeAtom:
      return w.setting(f.setting().region) == f.setting() &&
             w.outcome(f.setting().region) == f.outcome();
    case K::Not:
      return !eval_world(model, w, f.lhs(), locality, vacuous);
    case K::And:
      return eval_world(model, w, f.lhs(), locality, vacuous) &&
             eval_world(model, w, f.rhs(), locality, vacuous);
    case K::Or:
      return eval_world(model, w, f.lhs(), locality, vacuous) ||
             eval_world(model, w, f.rhs(), locality, vacuous);
    case K::Implies:
      return !eval_world(model, w, f.lhs(), locality, vacuous) ||
             eval_world(model, w, f.rhs(), locality, vacuous);
    case K::Counterfactual: {
      const auto value = counterfactual_value(model, w, f.setting(), f.rhs(), locality, vacuous);
      if (value == CounterfactualValue::Vacuous && vacuous != nullptr) {
        vacuous->push_back({w, f.setting()});
      }
      return value == CounterfactualValue::True;
    }
    case K::Entails:
      throw NestingError("`=>` cannot be evaluated at a single world");
  }
  return false;
}

TruthReport eval_model(const WorldModel& model, const Formula& f, LocalityCondition locality) {
  TruthReport report{f, true, {}, locality, model.frame(), {}};
  const bool rooted = f.kind() == Formula::Kind::Entails;
  for (const World& w : model.worlds()) {
    if (rooted && !eval_world(model, w, f.lhs(), locality, &report.vacuous_flags)) continue;
    const Formula& claim = rooted ? f.rhs() : f;
    if (!eval_world(model, w, claim, locality, &report.vacuous_flags)) {
      report.witnesses.push_back(w);
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

}  // namespace hardy
