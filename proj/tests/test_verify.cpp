#include <algorithm>
#include <fstream>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "orlicz/errors.hpp"
#include "orlicz/verify.hpp"

using namespace orlicz;

namespace {

SuiteConfig cheap(std::uint64_t seed) {
  SuiteConfig c;
  c.seed = seed;
  c.suites = {"inverse-sandwich", "rearrangement", "maximal", "herz", "weight-criteria"};
  return c;
}

}  // namespace

TEST(Suites, IdsInOrder) {
  const auto& ids = suite_ids();
  ASSERT_EQ(ids.size(), 14u);
  EXPECT_EQ(ids.front(), "inverse-sandwich");
  EXPECT_EQ(ids.back(), "fefferman-stein");
}

TEST(Suites, UnknownIdRejected) {
  SuiteConfig c;
  c.suites = {"nope"};
  EXPECT_THROW(run_suite(c), PreconditionError);
}

TEST(Suites, EmptySelectionPasses) {
  SuiteConfig c;
  const auto r = run_suite(c);
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.passed());
}

TEST(Suites, DuplicatesAndOrder) {
  SuiteConfig a;
  a.suites = {"maximal", "rearrangement", "maximal"};
  SuiteConfig b;
  b.suites = {"rearrangement", "maximal"};
  EXPECT_EQ(run_suite(a).to_json().dump(), run_suite(b).to_json().dump());
}

TEST(Suites, Deterministic) {
  const auto a = run_suite(cheap(7)).to_json().dump();
  const auto b = run_suite(cheap(7)).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, run_suite(cheap(8)).to_json().dump());
}

TEST(Suites, CheapSuitesPassOnFreshSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto r = run_suite(cheap(seed));
    EXPECT_TRUE(r.passed()) << r.to_json().dump(1);
  }
}

TEST(Suites, AnchorsFromScopeList) {
  const std::set<std::string> allowed{
      "Φ(Φ^{-1}(t))≤t≤Φ^{-1}(Φ(t))",
      "r≤Φ^{-1}(r)\\widetilde{Φ}^{-1}(r)≤2r",
      "Δ₂/∇₂",
      "indices p±",
      "Φ_θ",
      "weak Orlicz norm",
      "Orlicz-Lorentz/Orlicz/weak-type definitions",
      "closed-form examples",
      "L^{Φ,1} quasi-norm",
      "2‖f‖_{L^{Φ,1}}‖h‖_{wL^{Φ̃}}",
      "rearrangement-pairing step",
      "Λ^{φ,q}",
      "radial construction",
      "(Mf)^* (t) ∼ (1/t)∫₀ᵗ f^*(s) ds",
      "empirical boundedness check",
      "empirical constant-boundedness checks",
  };
  SuiteConfig c;
  c.suites = {"all"};
  c.step_functions = 5;
  c.grid_pairs = 5;
  c.maximal_grids = 5;
  c.herz_functions = 5;
  c.lorentz_functions = 2;
  c.fs_families = 3;
  const auto r = run_suite(c);
  std::set<std::string> suites;
  for (const auto& rec : r.records) {
    EXPECT_TRUE(allowed.count(rec.anchor)) << rec.suite << "/" << rec.check << ": " << rec.anchor;
    suites.insert(rec.suite);
  }
  EXPECT_EQ(suites.size(), suite_ids().size());
}

TEST(Herz, FrozenBandMatchesDataFile) {
  std::ifstream in(std::string(ORLICZ_DATA_DIR) + "/herz_band.json");
  ASSERT_TRUE(in.good());
  const auto j = nlohmann::json::parse(in);
  const auto band = frozen_herz_band();
  EXPECT_EQ(band.c1, j.at("c1").get<double>());
  EXPECT_EQ(band.c2, j.at("c2").get<double>());
  EXPECT_LT(band.c1, 1.0);
  EXPECT_GT(band.c2, 1.0);
}

TEST(Herz, CalibrationReproducesBand) {
  const auto cal = calibrate_herz(0, 200);
  const auto band = frozen_herz_band();
  EXPECT_NEAR(cal.min_ratio / 1.1, band.c1, 1e-15);
  EXPECT_NEAR(cal.max_ratio * 1.1, band.c2, 1e-15);
  EXPECT_EQ(cal.functions, 200);
}

TEST(Constants, HypothesisRefusals) {
  CorpusSpec s;
  s.families = 2;
  EXPECT_THROW(estimate_constant(power_law(2), 0.0, s), DomainError);
  EXPECT_THROW(estimate_constant(power_law(2), 1.0, s), HypothesisError);
  EXPECT_THROW(estimate_constant(power_law(1), kInf, s), HypothesisError);
  EXPECT_THROW(estimate_constant(exp_minus_one(), 2.0, s), HypothesisError);
  EXPECT_THROW(estimate_constant(power_log(), 2.0, s), HypothesisError);
  EXPECT_NO_THROW(estimate_constant(power_law(1), kInf, s, true));
}

TEST(Constants, FiniteAndStable) {
  CorpusSpec s;
  s.families = 10;
  s.members = 4;
  const auto e = estimate_constant(power_law(2), 2.0, s);
  EXPECT_GE(e.constant, 1.0);
  EXPECT_TRUE(std::isfinite(e.constant));
  EXPECT_GE(e.stability, 0.5);
  EXPECT_LE(e.stability, 2.0);
  EXPECT_EQ(e.constant, std::max(e.first, e.second));
}

TEST(Constants, SingleMemberIgnoresAggregate) {
  CorpusSpec s;
  s.families = 5;
  s.members = 1;
  const auto a = estimate_constant(power_law(2), kInf, s);
  const auto b = estimate_constant(power_law(2), 2.0, s);
  EXPECT_NEAR(a.constant, b.constant, 1e-12 * a.constant);
}
