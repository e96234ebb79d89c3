#pragma once

// Possible worlds: every (choice, choice, outcome, outcome) combination with
// positive probability under the quantum table, tagged with the frame
// ordering that decides which region counts as earlier.

#include <compare>
#include <string>
#include <vector>

#include "hardy/quantum.hpp"
#include "hardy/types.hpp"

namespace hardy {

class Formula;

enum class FrameOrdering { LeftBeforeRight, RightBeforeLeft };

inline std::string to_string(FrameOrdering f) {
  return f == FrameOrdering::LeftBeforeRight ? "l-first" : "r-first";
}

// Whether `region` happens strictly before the other region in the frame.
inline bool is_earlier(Region region, FrameOrdering frame) {
  return (region == Region::Left) == (frame == FrameOrdering::LeftBeforeRight);
}

struct World {
  int left_setting = 1;   // L1 or L2
  int right_setting = 1;  // R1 or R2
  Outcome left_outcome = Outcome::Plus;
  Outcome right_outcome = Outcome::Plus;
  double probability = 0.0;

  Setting setting(Region r) const {
    return r == Region::Left ? Setting::L(left_setting) : Setting::R(right_setting);
  }
  Outcome outcome(Region r) const { return r == Region::Left ? left_outcome : right_outcome; }

  // Identity is the coordinates; probability is carried for reporting only.
  bool same_coordinates(const World& o) const {
    return left_setting == o.left_setting && right_setting == o.right_setting &&
           left_outcome == o.left_outcome && right_outcome == o.right_outcome;
  }
};

// Sort order: left setting, right setting, left outcome, right outcome (+ first).
bool operator<(const World& a, const World& b);
bool operator==(const World& a, const World& b);

// "(L2,R2,+,+)".
std::string to_string(const World& w);

// Convenience for tests and callers that name worlds by coordinates.
World world(int left_setting, int right_setting, char left_sign, char right_sign);

class WorldModel {
 public:
  const std::vector<World>& worlds() const { return worlds_; }
  const JointProbabilityTable& table() const { return table_; }
  double epsilon() const { return epsilon_; }
  FrameOrdering frame() const { return frame_; }

  bool contains(const World& w) const;
  // Returns the stored world (with its probability) or throws UnknownWorldError.
  const World& find(const World& w) const;

  // Same table and epsilon, other frame tag.
  WorldModel with_frame(FrameOrdering frame) const;

 private:
  friend WorldModel enumerate_worlds(const JointProbabilityTable&, double, FrameOrdering);

  std::vector<World> worlds_;
  JointProbabilityTable table_;
  double epsilon_ = kDefaultEpsilon;
  FrameOrdering frame_ = FrameOrdering::LeftBeforeRight;
};

// Throws DomainError for epsilon outside (0, 0.1) and InconsistentModelError
// when some setting pair has no world.
WorldModel enumerate_worlds(const JointProbabilityTable& table, double epsilon = kDefaultEpsilon,
                            FrameOrdering frame = FrameOrdering::LeftBeforeRight);

// Throws NestingError if f contains `=>`.
std::vector<World> worlds_satisfying(const WorldModel& model, const Formula& f,
                                     LocalityCondition locality = LocalityCondition::LOC1);

}  // namespace hardy
