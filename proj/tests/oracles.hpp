#pragma once

// Test-only reference computations. Nothing here calls into the library's
// probability, world or evaluation code paths; the tests compare the library
// against these.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// Direct 4-term sum <l (x) r | psi>, squared.
inline double born(const std::array<cd, 4>& psi, const std::array<cd, 2>& l,
                   const std::array<cd, 2>& r) {
  cd s = std::conj(l[0]) * std::conj(r[0]) * psi[0] + std::conj(l[0]) * std::conj(r[1]) * psi[1] +
         std::conj(l[1]) * std::conj(r[0]) * psi[2] + std::conj(l[1]) * std::conj(r[1]) * psi[3];
  return std::norm(s);
}

inline const double kS3 = 1.0 / std::sqrt(3.0);
inline const double kS2 = 1.0 / std::sqrt(2.0);
inline const std::array<cd, 4> kHardyState{kS3, kS3, kS3, 0.0};
inline const std::array<cd, 2> kOne{0.0, 1.0};
inline const std::array<cd, 2> kZero{1.0, 0.0};
inline const std::array<cd, 2> kDiagPlus{kS2, -kS2};
inline const std::array<cd, 2> kDiagMinus{kS2, kS2};

// Canonical vectors: side 0 = left, 1 = right; setting 1 or 2; sign 0 = +, 1 = -.
inline std::array<cd, 2> canonical_vector(int side, int setting, int sign) {
  const bool computational = (side == 0) == (setting == 2);
  if (computational) return sign == 0 ? kOne : kZero;
  return sign == 0 ? kDiagPlus : kDiagMinus;
}

// Oracle table, index ((l-1)*2 + (r-1))*4 + lo*2 + ro.
inline std::array<double, 16> canonical_table() {
  std::array<double, 16> t{};
  for (int l = 1; l <= 2; ++l)
    for (int r = 1; r <= 2; ++r)
      for (int lo = 0; lo < 2; ++lo)
        for (int ro = 0; ro < 2; ++ro)
          t[static_cast<std::size_t>(((l - 1) * 2 + (r - 1)) * 4 + lo * 2 + ro)] =
              born(kHardyState, canonical_vector(0, l, lo), canonical_vector(1, r, ro));
  return t;
}

inline double hardy_closed_form(double x) { return (1 - 2 * x) * x * x / ((1 - x) * (1 - x)); }

inline double hardy_analytic_max() { return (5.0 * std::sqrt(5.0) - 11.0) / 2.0; }

// Dense brute-force maximum of the closed form over (0, 1/2).
inline double hardy_grid_max(int n) {
  double best = 0.0;
  for (int i = 1; i < n; ++i) best = std::max(best, hardy_closed_form(0.5 * i / n));
  return best;
}

// A world as plain coordinates: settings 1/2, outcomes 0 (+) / 1 (-).
struct Coord {
  int ls, rs, lo, ro;
  bool operator==(const Coord&) const = default;
};

inline std::vector<Coord> possible(const std::array<double, 16>& t, double eps) {
  std::vector<Coord> out;
  for (int l = 1; l <= 2; ++l)
    for (int r = 1; r <= 2; ++r)
      for (int lo = 0; lo < 2; ++lo)
        for (int ro = 0; ro < 2; ++ro)
          if (t[static_cast<std::size_t>(((l - 1) * 2 + (r - 1)) * 4 + lo * 2 + ro)] > eps)
            out.push_back({l, r, lo, ro});
  return out;
}

// Rules (i)-(iii) spelled out literally. side: 0 left, 1 right changed.
// left_first: frame ordering; lightcone overrides it.
inline std::vector<Coord> accessible(const std::vector<Coord>& worlds, Coord w, int side,
                                     int setting, bool left_first, bool lightcone) {
  std::vector<Coord> out;
  const int current = side == 0 ? w.ls : w.rs;
  if (current == setting) return {w};
  for (const Coord& c : worlds) {
    if (side == 0) {
      if (c.ls != setting || c.rs != w.rs) continue;
      // Right is unchanged; protected if right is earlier or under light-cone.
      const bool protect = lightcone || !left_first;
      if (protect && c.ro != w.ro) continue;
    } else {
      if (c.rs != setting || c.ls != w.ls) continue;
      const bool protect = lightcone || left_first;
      if (protect && c.lo != w.lo) continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace oracle
