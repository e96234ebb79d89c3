#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/semantics.hpp"
#include "oracles.hpp"

using namespace hardy;
using LC = LocalityCondition;

namespace {

constexpr auto kLFirst = FrameOrdering::LeftBeforeRight;
constexpr auto kRFirst = FrameOrdering::RightBeforeLeft;

WorldModel canonical(FrameOrdering frame = kLFirst) {
  const HardyModel m = canonical_hardy_model();
  return enumerate_worlds(probability_table(m.state, m.config), 1e-9, frame);
}

oracle::Coord coord(const World& w) {
  return {w.left_setting, w.right_setting, w.left_outcome == Outcome::Plus ? 0 : 1,
          w.right_outcome == Outcome::Plus ? 0 : 1};
}

bool subset(const std::vector<World>& a, const std::vector<World>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const World& w) { return std::find(b.begin(), b.end(), w) != b.end(); });
}

Qubit random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Qubit v{ComplexAmplitude{g(rng), g(rng)}, ComplexAmplitude{g(rng), g(rng)}};
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v[0] / n, v[1] / n};
}

MeasurementBasis random_basis(std::mt19937_64& rng) {
  const Qubit p = random_qubit(rng);
  // Orthogonal complement of (a, b) is (-conj b, conj a).
  return MeasurementBasis(p, {-std::conj(p[1]), std::conj(p[0])});
}

WorldModel random_quantum_model(std::mt19937_64& rng, FrameOrdering frame) {
  std::normal_distribution<double> g;
  std::array<ComplexAmplitude, 4> a{};
  double n = 0;
  for (auto& x : a) {
    x = {g(rng), g(rng)};
    n += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(n);
  ExperimentConfig config{{random_basis(rng), random_basis(rng)},
                          {random_basis(rng), random_basis(rng)}};
  return enumerate_worlds(probability_table(BipartiteState(a), config), 1e-9, frame);
}

}  // namespace

TEST_CASE("accessible worlds: worked examples") {
  const WorldModel model = canonical();
  SUBCASE("right choice changed, earlier left outcome protected") {
    const auto s = accessible_worlds(model, world(2, 2, '+', '+'), Setting::R(1), LC::LOC1);
    CHECK(s.worlds == std::vector<World>{world(2, 1, '+', '-')});
    CHECK(s.changed_region == Region::Right);
  }
  SUBCASE("unchanged choice is the identity") {
    for (const World& w : model.worlds()) {
      for (Setting e : {w.setting(Region::Left), w.setting(Region::Right)}) {
        CHECK(accessible_worlds(model, w, e, LC::LOC1).worlds == std::vector<World>{w});
        CHECK(accessible_worlds(model, w, e, LC::LightCone).worlds == std::vector<World>{w});
      }
    }
  }
  SUBCASE("left choice changed, later right outcome unprotected under LOC1") {
    const auto loc1 = accessible_worlds(model, world(2, 1, '+', '-'), Setting::L(1), LC::LOC1);
    CHECK(loc1.worlds ==
          std::vector<World>{world(1, 1, '+', '+'), world(1, 1, '-', '+'), world(1, 1, '-', '-')});
    const auto cone = accessible_worlds(model, world(2, 1, '+', '-'), Setting::L(1), LC::LightCone);
    CHECK(cone.worlds == std::vector<World>{world(1, 1, '-', '-')});
  }
  SUBCASE("unknown world") {
    CHECK_THROWS_AS(accessible_worlds(model, world(2, 2, '-', '+'), Setting::R(1), LC::LOC1),
                    UnknownWorldError);
  }
}

TEST_CASE("eval_counterfactual") {
  const WorldModel model = canonical();
  CHECK(eval_counterfactual(model, world(2, 2, '+', '+'), Setting::R(1), parse("R1-"), LC::LOC1) ==
        CounterfactualValue::True);
  CHECK(eval_counterfactual(model, world(1, 2, '+', '+'), Setting::R(1), parse("R1-"), LC::LOC1) ==
        CounterfactualValue::False);
  CHECK(accessible_worlds(model, world(1, 2, '+', '+'), Setting::R(1), LC::LOC1).worlds ==
        std::vector<World>{world(1, 1, '+', '+')});
  CHECK(eval_counterfactual(model, world(2, 2, '+', '+'), Setting::R(1), parse("L2+"), LC::LOC1) ==
        CounterfactualValue::True);
  CHECK_THROWS_AS(
      eval_counterfactual(model, world(2, 2, '-', '+'), Setting::R(1), parse("R1-"), LC::LOC1),
      UnknownWorldError);
  CHECK_THROWS_AS(
      eval_counterfactual(model, world(2, 2, '+', '+'), Setting::R(1), parse("L1 => R1-"), LC::LOC1),
      NestingError);
}

TEST_CASE("vacuous counterfactuals are reported, not silently true") {
  // (L2,R1) has only left outcome -, so from (L2,R2,+,+) with L protected
  // nothing is reachable: a partial table outside quantum theory.
  std::array<double, 16> e{};
  e.fill(0.25);
  for (std::size_t i = 8; i < 12; ++i) e[i] = 0.0;
  e[JointProbabilityTable::index(2, 1, Outcome::Minus, Outcome::Minus)] = 1.0;
  const WorldModel model = enumerate_worlds(JointProbabilityTable::unvalidated(e));
  CHECK(eval_counterfactual(model, world(2, 2, '+', '+'), Setting::R(1), parse("R1-"), LC::LOC1) ==
        CounterfactualValue::Vacuous);
  std::vector<VacuousFlag> flags;
  CHECK_FALSE(eval_world(model, world(2, 2, '+', '+'), parse("R1 []-> R1-"), LC::LOC1, &flags));
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].world == world(2, 2, '+', '+'));
  const TruthReport r = eval_model(model, parse("R1 []-> R1-"), LC::LOC1);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.vacuous_flags.empty());
}

TEST_CASE("eval_world") {
  const WorldModel model = canonical();
  const Formula sr = parse("(R2 & R2+) -> (R1 []-> R1-)");
  CHECK(eval_world(model, world(2, 2, '+', '+'), parse("R2 & R2+"), LC::LOC1));
  CHECK(eval_world(model, world(2, 2, '+', '+'), sr, LC::LOC1));
  CHECK_FALSE(eval_world(model, world(1, 2, '+', '+'), sr, LC::LOC1));
  CHECK_THROWS_AS(eval_world(model, world(2, 2, '+', '+'), parse("L2 => R2"), LC::LOC1),
                  NestingError);
}

TEST_CASE("eval_model: the three statements") {
  const WorldModel model = canonical();
  const TruthReport s1 = eval_model(model, parse("L2 => ((R2 & R2+) -> (R1 []-> R1-))"), LC::LOC1);
  CHECK(s1.holds);
  CHECK(s1.witnesses.empty());

  const TruthReport s2 = eval_model(model, parse("L1 => ((R2 & R2+) -> (R1 []-> R1-))"), LC::LOC1);
  CHECK_FALSE(s2.holds);
  CHECK(s2.witnesses == std::vector<World>{world(1, 2, '+', '+'), world(1, 2, '-', '+')});
  CHECK(accessible_worlds(model, world(1, 2, '-', '+'), Setting::R(1), LC::LOC1).worlds ==
        std::vector<World>{world(1, 1, '-', '+'), world(1, 1, '-', '-')});

  const TruthReport s3 = eval_model(model, parse("(L2 & R2 & L2+) => (R1 []-> L2+)"), LC::LOC1);
  CHECK(s3.holds);
  CHECK(s3.frame == kLFirst);
  CHECK(s3.locality == LC::LOC1);

  const TruthReport contradiction = eval_model(model, parse("L2 & ~L2"), LC::LOC1);
  CHECK_FALSE(contradiction.holds);
  CHECK(contradiction.witnesses.size() == 13);
}

TEST_CASE("accessible sets agree with the literal filter") {
  const auto worlds = oracle::possible(oracle::canonical_table(), 1e-9);
  for (FrameOrdering frame : {kLFirst, kRFirst}) {
    const WorldModel model = canonical(frame);
    for (LC locality : {LC::LOC1, LC::LightCone}) {
      for (const World& w : model.worlds()) {
        for (Setting e : kAllSettings) {
          const auto got = accessible_worlds(model, w, e, locality).worlds;
          const auto want = oracle::accessible(worlds, coord(w), e.region == Region::Left ? 0 : 1,
                                               e.index, frame == kLFirst,
                                               locality == LC::LightCone);
          REQUIRE(got.size() == want.size());
          for (std::size_t i = 0; i < got.size(); ++i) CHECK(coord(got[i]) == want[i]);
        }
      }
    }
  }
}

TEST_CASE("structural properties of accessibility") {
  std::mt19937_64 rng(99);
  std::vector<WorldModel> models{canonical(), canonical(kRFirst)};
  for (int i = 0; i < 20; ++i) models.push_back(random_quantum_model(rng, i % 2 ? kLFirst : kRFirst));

  for (const WorldModel& model : models) {
    for (const World& w : model.worlds()) {
      for (Setting e : kAllSettings) {
        const auto loc1 = accessible_worlds(model, w, e, LC::LOC1).worlds;
        const auto cone = accessible_worlds(model, w, e, LC::LightCone).worlds;
        CHECK(subset(cone, loc1));
        CHECK_FALSE(loc1.empty());
        CHECK_FALSE(cone.empty());
        for (const World& v : loc1) {
          CHECK(v.setting(e.region) == e);
          CHECK(v.setting(other(e.region)) == w.setting(other(e.region)));
        }
      }
    }
  }
}

TEST_CASE("self-accessibility reduces to factual truth") {
  const WorldModel model = canonical();
  const Formula f = parse("R2+ | L1-");
  for (const World& w : model.worlds()) {
    const Setting own = w.setting(Region::Right);
    const bool factual = eval_world(model, w, f, LC::LOC1);
    CHECK((eval_counterfactual(model, w, own, f, LC::LOC1) == CounterfactualValue::True) == factual);
  }
}

TEST_CASE("outcome atoms presuppose their setting") {
  const WorldModel model = enumerate_worlds(JointProbabilityTable::uniform());
  const WorldModel hardy = canonical();
  for (const WorldModel* m : {&model, &hardy}) {
    for (Setting s : kAllSettings) {
      const std::string name = to_string(s);
      for (const char* sign : {"+", "-"}) {
        const Formula implication = parse(name + sign + " -> " + name);
        const Formula impossible = parse(name + sign + " & ~" + name);
        for (const World& w : m->worlds()) {
          CHECK(eval_world(*m, w, implication, LC::LOC1));
          CHECK_FALSE(eval_world(*m, w, impossible, LC::LOC1));
        }
      }
      if (s.region == Region::Right) {
        const Formula both = parse(name + " & " + name + "+");
        const Formula alone = parse(name + "+");
        for (const World& w : m->worlds()) {
          CHECK(eval_world(*m, w, both, LC::LOC1) == eval_world(*m, w, alone, LC::LOC1));
        }
      }
    }
  }
}

namespace {

// Truth-table oracle: a formula as a 16-bit mask over the coordinate tuples
// of the uniform model (bit = ((ls-1)*2+(rs-1))*4 + lo*2 + ro).
std::uint32_t atom_mask(Setting s, std::optional<int> sign) {
  std::uint32_t m = 0;
  for (int l = 1; l <= 2; ++l)
    for (int r = 1; r <= 2; ++r)
      for (int lo = 0; lo < 2; ++lo)
        for (int ro = 0; ro < 2; ++ro) {
          const bool left = s.region == Region::Left;
          const bool performed = left ? l == s.index : r == s.index;
          const int outcome = left ? lo : ro;
          if (performed && (!sign || *sign == outcome)) m |= 1U << (((l - 1) * 2 + (r - 1)) * 4 + lo * 2 + ro);
        }
  return m;
}

struct Generated {
  Formula f;
  std::uint32_t mask;
};

Generated random_classical(std::mt19937& rng, int depth) {
  const Setting s = kAllSettings[rng() % 4];
  const int kind = depth <= 1 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 6);
  constexpr std::uint32_t all = 0xFFFF;
  switch (kind) {
    case 0:
      return {Formula::setting_atom(s), atom_mask(s, std::nullopt)};
    case 1: {
      const int sign = static_cast<int>(rng() % 2);
      return {Formula::outcome_atom(s, sign == 0 ? Outcome::Plus : Outcome::Minus), atom_mask(s, sign)};
    }
    case 2: {
      auto a = random_classical(rng, depth - 1);
      return {Formula::negation(a.f), ~a.mask & all};
    }
    case 3: {
      auto a = random_classical(rng, depth - 1), b = random_classical(rng, depth - 1);
      return {Formula::conjunction(a.f, b.f), a.mask & b.mask};
    }
    case 4: {
      auto a = random_classical(rng, depth - 1), b = random_classical(rng, depth - 1);
      return {Formula::disjunction(a.f, b.f), a.mask | b.mask};
    }
    default: {
      auto a = random_classical(rng, depth - 1), b = random_classical(rng, depth - 1);
      return {Formula::implication(a.f, b.f), (~a.mask & all) | b.mask};
    }
  }
}

}  // namespace

TEST_CASE("classical connectives match the truth-table oracle") {
  const WorldModel model = enumerate_worlds(JointProbabilityTable::uniform());
  std::mt19937 rng(3);
  for (int n = 0; n < 500; ++n) {
    const Generated g = random_classical(rng, 5);
    // Tautologies built from the generated formula.
    const Formula excluded_middle = Formula::disjunction(g.f, Formula::negation(g.f));
    for (const World& w : model.worlds()) {
      const auto c = coord(w);
      const int bit = ((c.ls - 1) * 2 + (c.rs - 1)) * 4 + c.lo * 2 + c.ro;
      INFO(pretty_print(g.f));
      CHECK(eval_world(model, w, g.f, LC::LOC1) == (((g.mask >> bit) & 1U) != 0));
      CHECK(eval_world(model, w, excluded_middle, LC::LOC1));
    }
  }
}
