#include <algorithm>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "orlicz/corpus.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/rearrange.hpp"

using namespace orlicz;

namespace {

MeasureStepFunction step(std::vector<Cell> cells) {
  MeasureStepFunction f;
  f.cells = std::move(cells);
  return f;
}

// Brute-force distribution straight from the cells.
double brute_distribution(const MeasureStepFunction& f, double t) {
  double m = 0.0;
  for (const auto& c : f.cells)
    if (c.value > t) m += c.measure;
  return m;
}

}  // namespace

TEST(Rearrange, MergesAndSorts) {
  const auto f = step({{1.0, 2.0}, {3.0, 0.5}, {1.0, 1.0}, {0.0, 4.0}});
  const auto r = rearrangement(f);
  ASSERT_EQ(r.pieces(), 2u);
  EXPECT_EQ(r.values[0], 3.0);
  EXPECT_EQ(r.values[1], 1.0);
  EXPECT_DOUBLE_EQ(r.breakpoints[1], 0.5);
  EXPECT_DOUBLE_EQ(r.support(), 3.5);
  EXPECT_EQ(r(0.2), 3.0);
  EXPECT_EQ(r(0.5), 1.0);
  EXPECT_EQ(r(3.5), 0.0);
  EXPECT_DOUBLE_EQ(r.integral(1.0), 1.5 + 0.5);
}

TEST(Rearrange, Distribution) {
  const auto f = step({{1.0, 2.0}, {3.0, 0.5}});
  EXPECT_EQ(distribution(f, 0.0), 2.5);
  EXPECT_EQ(distribution(f, 1.0), 0.5);
  EXPECT_EQ(distribution(f, 3.0), 0.0);
  EXPECT_THROW(distribution(f, -1.0), DomainError);
}

TEST(Rearrange, Averaged) {
  const auto f = step({{2.0, 1.0}, {1.0, 1.0}});
  EXPECT_DOUBLE_EQ(averaged_rearrangement(f, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(averaged_rearrangement(f, 2.0), 1.5);
  EXPECT_DOUBLE_EQ(averaged_rearrangement(f, 4.0), 0.75);
  EXPECT_THROW(averaged_rearrangement(f, 0.0), DomainError);
}

TEST(Rearrange, Pairing) {
  const auto f = rearrangement(step({{2.0, 1.0}, {1.0, 1.0}}));
  const auto g = rearrangement(step({{3.0, 1.5}}));
  EXPECT_DOUBLE_EQ(rearranged_pairing(f, g), 2.0 * 3.0 + 0.5 * 3.0);
}

TEST(Rearrange, Validation) {
  EXPECT_THROW(step({{-1.0, 1.0}}).validate(), PreconditionError);
  EXPECT_THROW(step({{1.0, 0.0}}).validate(), PreconditionError);
  EXPECT_THROW(step({{1.0, std::nan("")}}).validate(), PreconditionError);
  GridFunction1D g;
  g.cell_width = 0.0;
  g.samples = {1.0};
  EXPECT_THROW(g.validate(), PreconditionError);
}

TEST(Rearrange, GridMatchesStep) {
  GridFunction1D g{-1.0, 0.25, {0.0, 2.0, 1.0, 2.0}};
  const auto a = rearrangement(g);
  const auto b = rearrangement(g.to_step());
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.breakpoints, b.breakpoints);
  EXPECT_DOUBLE_EQ(a.support(), 0.75);
}

TEST(Rearrange, RadialProfileKeepsShellMeasures) {
  const auto g = rearrangement(step({{3.0, 1.0}, {1.0, 2.0}}));
  for (int n : {1, 2, 3}) {
    const auto shells = radial_profile_nd(g, n);
    EXPECT_EQ(shells.ambient_dim, n);
    const auto back = rearrangement(shells);
    EXPECT_EQ(back.values, g.values);
    for (std::size_t i = 0; i < g.breakpoints.size(); ++i)
      EXPECT_NEAR(back.breakpoints[i], g.breakpoints[i], 1e-12);
  }
}

// Property: f* is equimeasurable with f and non-increasing.
TEST(RearrangeProperty, Equimeasurable) {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_step_function(rng, 32);
    const auto r = rearrangement(f);
    for (std::size_t j = 1; j < r.values.size(); ++j) EXPECT_LT(r.values[j], r.values[j - 1]);
    for (int k = 0; k < 10; ++k) {
      const double t = rng.uniform(0.0, 1.1 * f.max_value());
      const double want = brute_distribution(f, t);
      EXPECT_NEAR(r.level_measure(t), want, 1e-12 * std::max(1.0, want));
    }
    EXPECT_NEAR(r.integral(r.support()),
                [&] {
                  double s = 0;
                  for (const auto& c : f.cells) s += c.value * c.measure;
                  return s;
                }(),
                1e-10 * std::max(1.0, r.integral(r.support())));
  }
}

// Property: f** is non-increasing and dominates f*.
TEST(RearrangeProperty, AveragedDominates) {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_step_function(rng, 16);
    const auto r = rearrangement(f);
    double prev = std::numeric_limits<double>::infinity();
    for (double t = 1e-3; t < 2 * r.support(); t *= 1.5) {
      const double a = averaged_rearrangement(r, t);
      EXPECT_GE(a * (1 + 1e-12), r(t));
      EXPECT_LE(a, prev * (1 + 1e-12));
      prev = a;
    }
  }
}
