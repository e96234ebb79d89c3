#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

namespace hardy {

enum class Region { Left, Right };

enum class Outcome { Plus, Minus };

inline constexpr std::array<Outcome, 2> kOutcomes{Outcome::Plus, Outcome::Minus};

// One of the four experiment choices L1, L2, R1, R2.
struct Setting {
  Region region = Region::Left;
  int index = 1;  // 1 or 2

  static constexpr Setting L(int i) { return {Region::Left, i}; }
  static constexpr Setting R(int i) { return {Region::Right, i}; }

  auto operator<=>(const Setting&) const = default;
};

inline constexpr std::array<Setting, 2> kLeftSettings{Setting::L(1), Setting::L(2)};
inline constexpr std::array<Setting, 2> kRightSettings{Setting::R(1), Setting::R(2)};
inline constexpr std::array<Setting, 4> kAllSettings{Setting::L(1), Setting::L(2),
                                                     Setting::R(1), Setting::R(2)};

inline Region other(Region r) { return r == Region::Left ? Region::Right : Region::Left; }

// How far the consequences of a changed choice may reach: LOC1 protects only
// outcomes earlier in the model's frame; LightCone protects everything
// spacelike to the changed region.
enum class LocalityCondition { LOC1, LightCone };

inline std::string to_string(LocalityCondition l) {
  return l == LocalityCondition::LOC1 ? "loc1" : "lightcone";
}

inline char sign_char(Outcome o) { return o == Outcome::Plus ? '+' : '-'; }

inline std::string to_string(Setting s) {
  return std::string(1, s.region == Region::Left ? 'L' : 'R') + static_cast<char>('0' + s.index);
}

inline std::string to_string(Region r) { return r == Region::Left ? "L" : "R"; }

inline int outcome_rank(Outcome o) { return o == Outcome::Plus ? 0 : 1; }

}  // namespace hardy
