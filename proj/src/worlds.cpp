#include "hardy/worlds.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hardy/errors.hpp"
#include "hardy/formula.hpp"
#include "hardy/semantics.hpp"

namespace hardy {
namespace {

auto key(const World& w) {
  return std::make_tuple(w.left_setting, w.right_setting, outcome_rank(w.left_outcome),
                         outcome_rank(w.right_outcome));
}

Outcome parse_sign(char c) {
  if (c == '+') return Outcome::Plus;
  if (c == '-') return Outcome::Minus;
  throw std::invalid_argument(std::string("bad outcome sign '") + c + "'");
}

}  // namespace

bool operator<(const World& a, const World& b) { return key(a) < key(b); }
bool operator==(const World& a, const World& b) { return a.same_coordinates(b); }

std::string to_string(const World& w) {
  std::ostringstream os;
  os << "(L" << w.left_setting << ",R" << w.right_setting << "," << sign_char(w.left_outcome)
     << "," << sign_char(w.right_outcome) << ")";
  return os.str();
}

World world(int left_setting, int right_setting, char left_sign, char right_sign) {
  return World{left_setting, right_setting, parse_sign(left_sign), parse_sign(right_sign), 0.0};
}

bool WorldModel::contains(const World& w) const {
  return std::binary_search(worlds_.begin(), worlds_.end(), w);
}

const World& WorldModel::find(const World& w) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), w);
  if (it == worlds_.end() || !(*it == w)) {
    throw UnknownWorldError("world " + to_string(w) + " is not a possible world of the model");
  }
  return *it;
}

WorldModel WorldModel::with_frame(FrameOrdering frame) const {
  WorldModel copy = *this;
  copy.frame_ = frame;
  return copy;
}

WorldModel enumerate_worlds(const JointProbabilityTable& table, double epsilon,
                            FrameOrdering frame) {
  if (!(epsilon > 0.0 && epsilon < 0.1)) {
    throw DomainError("epsilon must lie in (0, 0.1)");
  }
  WorldModel model;
  model.table_ = table;
  model.epsilon_ = epsilon;
  model.frame_ = frame;
  for (int l = 1; l <= 2; ++l) {
    for (int r = 1; r <= 2; ++r) {
      bool any = false;
      for (Outcome lo : kOutcomes) {
        for (Outcome ro : kOutcomes) {
          const double p = table.at(l, r, lo, ro);
          if (p > epsilon) {
            model.worlds_.push_back(World{l, r, lo, ro, p});
            any = true;
          }
        }
      }
      if (!any) {
        throw InconsistentModelError("free choice violated: settings (L" + std::to_string(l) +
                                     ",R" + std::to_string(r) +
                                     ") have no possible outcome");
      }
    }
  }
  // Generated in sort order already.
  return model;
}

std::vector<World> worlds_satisfying(const WorldModel& model, const Formula& f,
                                     LocalityCondition locality) {
  if (f.contains_entails()) {
    throw NestingError("`=>` cannot be evaluated at a single world");
  }
  std::vector<World> out;
  for (const World& w : model.worlds()) {
    if (eval_world(model, w, f, locality)) out.push_back(w);
  }
  return out;
}

}  // namespace hardy
