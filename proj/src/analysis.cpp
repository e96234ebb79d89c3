#include "hardy/analysis.hpp"

#include <sstream>
#include <stdexcept>

namespace hardy {

namespace catalog {

Formula stmt1() { return parse(kStmt1); }
Formula stmt2() { return parse(kStmt2); }
Formula stmt3() { return parse(kStmt3); }
Formula sr() { return parse(kSR); }

Formula sr_template(Setting left) {
  if (left.region != Region::Left) {
    throw std::invalid_argument("SR template takes a left-hand experiment choice");
  }
  return Formula::entails(Formula::setting_atom(left), sr());
}

}  // namespace catalog

SuiteReport theorem_suite(const WorldModel& model, LocalityCondition locality) {
  SuiteReport suite;
  suite.emplace("stmt1", eval_model(model, catalog::stmt1(), locality));
  suite.emplace("stmt2", eval_model(model, catalog::stmt2(), locality));
  suite.emplace("stmt3", eval_model(model, catalog::stmt3(), locality));
  return suite;
}

FlowReport information_flow(const WorldModel& model, LocalityCondition locality) {
  const TruthReport with_l2 = eval_model(model, catalog::sr_template(Setting::L(2)), locality);
  const TruthReport with_l1 = eval_model(model, catalog::sr_template(Setting::L(1)), locality);
  FlowReport report;
  report.f_of_L2 = with_l2.holds;
  report.f_of_L1 = with_l1.holds;
  report.dependent = report.f_of_L2 != report.f_of_L1;
  if (report.dependent) {
    const TruthReport& failing = report.f_of_L2 ? with_l1 : with_l2;
    report.witness = failing.witnesses.front();
    report.interpretation = {
        "SR, whose symbols all refer to region R, changes truth value with the choice L1/L2 "
        "made in region L.",
        "Read with LOC1: information about the free choice in L must get to the region R.",
        "Read with light-cone locality alone: the dependence is of a counterfactual's truth value and "
        "need not count as information transfer.",
    };
  } else {
    report.interpretation = {"SR has the same truth value under L1 and L2: no dependence on the "
                             "left-hand choice is exhibited."};
  }
  return report;
}

ComparisonReport frame_comparison(const JointProbabilityTable& table, double epsilon) {
  const WorldModel l_first = enumerate_worlds(table, epsilon, FrameOrdering::LeftBeforeRight);
  const WorldModel r_first = l_first.with_frame(FrameOrdering::RightBeforeLeft);

  ComparisonReport report;
  report.variants.push_back({"loc1/l-first", LocalityCondition::LOC1, l_first.frame(),
                             theorem_suite(l_first, LocalityCondition::LOC1)});
  report.variants.push_back({"loc1/r-first", LocalityCondition::LOC1, r_first.frame(),
                             theorem_suite(r_first, LocalityCondition::LOC1)});
  report.variants.push_back({"lightcone", LocalityCondition::LightCone, l_first.frame(),
                             theorem_suite(l_first, LocalityCondition::LightCone)});
  report.stmt1_frame_dependent = report.variants[0].suite.at("stmt1").holds !=
                                 report.variants[1].suite.at("stmt1").holds;

  const World probe_world = world(2, 1, '+', '-');
  if (l_first.contains(probe_world)) {
    const Formula probe = parse(kLocalityProbe);
    report.probe_loc1 = eval_world(l_first, probe_world, probe, LocalityCondition::LOC1);
    report.probe_lightcone = eval_world(l_first, probe_world, probe, LocalityCondition::LightCone);
  }
  return report;
}

std::string to_string(const DeterministicStrategy& s) {
  std::string out;
  out += "L1";
  out += sign_char(s.left[0]);
  out += " L2";
  out += sign_char(s.left[1]);
  out += " R1";
  out += sign_char(s.right[0]);
  out += " R2";
  out += sign_char(s.right[1]);
  return out;
}

std::array<DeterministicStrategy, 16> all_strategies() {
  std::array<DeterministicStrategy, 16> out{};
  for (std::size_t bits = 0; bits < 16; ++bits) {
    auto pick = [&](std::size_t bit) { return (bits >> bit) & 1U ? Outcome::Minus : Outcome::Plus; };
    out[bits].left = {pick(3), pick(2)};
    out[bits].right = {pick(1), pick(0)};
  }
  return out;
}

namespace {

std::string entry_text(int l, int r, Outcome lo, Outcome ro) {
  std::ostringstream os;
  os << "P(L" << l << sign_char(lo) << ",R" << r << sign_char(ro) << "|L" << l << ",R" << r
     << ")";
  return os.str();
}

std::string constraint_name(int l, int r, Outcome lo, Outcome ro) {
  using O = Outcome;
  std::string prefix;
  if (l == 2 && r == 2 && lo == O::Minus && ro == O::Plus) prefix = "h1_zero: ";
  if (l == 2 && r == 1 && lo == O::Plus && ro == O::Plus) prefix = "h2_zero: ";
  if (l == 1 && r == 1 && lo == O::Plus && ro == O::Minus) prefix = "h3_zero: ";
  return prefix + entry_text(l, r, lo, ro) + "=0";
}

// The first zero-probability entry the strategy would have to produce.
std::optional<std::string> violated_zero(const DeterministicStrategy& s,
                                         const JointProbabilityTable& table, double epsilon) {
  for (int l = 1; l <= 2; ++l) {
    for (int r = 1; r <= 2; ++r) {
      const Outcome lo = s.left[static_cast<std::size_t>(l - 1)];
      const Outcome ro = s.right[static_cast<std::size_t>(r - 1)];
      if (table.at(l, r, lo, ro) <= epsilon) return constraint_name(l, r, lo, ro);
    }
  }
  return std::nullopt;
}

}  // namespace

FeasibilityReport lhv_feasibility(const JointProbabilityTable& table, double epsilon) {
  FeasibilityReport report;
  std::array<std::optional<std::string>, 16> reasons;
  const auto strategies = all_strategies();
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    reasons[i] = violated_zero(strategies[i], table, epsilon);
    if (reasons[i]) {
      report.excluded_strategies.push_back({strategies[i], *reasons[i]});
    } else {
      report.surviving_strategies.push_back(strategies[i]);
    }
  }

  // A mixture with positive weight on every survivor has exactly the union of
  // their supports, so feasibility means every positive entry is covered.
  std::ostringstream trace;
  report.feasible = true;
  for (int l = 1; l <= 2; ++l) {
    for (int r = 1; r <= 2; ++r) {
      for (Outcome lo : kOutcomes) {
        for (Outcome ro : kOutcomes) {
          if (table.at(l, r, lo, ro) <= epsilon) continue;
          bool covered = false;
          for (const auto& s : report.surviving_strategies) {
            covered = covered || (s.outcome(Setting::L(l)) == lo && s.outcome(Setting::R(r)) == ro);
          }
          if (covered) continue;
          report.feasible = false;
          trace << entry_text(l, r, lo, ro) << " > 0 needs a strategy with L" << l
                << sign_char(lo) << " and R" << r << sign_char(ro) << "; every such strategy "
                << "is excluded:\n";
          for (std::size_t i = 0; i < strategies.size(); ++i) {
            const auto& s = strategies[i];
            if (s.outcome(Setting::L(l)) == lo && s.outcome(Setting::R(r)) == ro) {
              trace << "  [" << to_string(s) << "] by " << *reasons[i] << "\n";
            }
          }
        }
      }
    }
  }
  if (report.feasible) {
    trace << report.surviving_strategies.size()
          << " deterministic strategies survive and their mixture covers every possible outcome";
  } else if (verify_hardy_constraints(table, epsilon).satisfied) {
    trace << "Hardy chain: L1+ and R2+ force L2+ (else h1_zero), L2+ forces R1- (else h2_zero), "
             "and L1+ with R1- violates h3_zero: no local assignment yields P(L1+,R2+) > 0";
  }
  report.contradiction_trace = trace.str();
  return report;
}

}  // namespace hardy
