#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "orlicz/corpus.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/maximal.hpp"

using namespace orlicz;

namespace {

// int_{-inf}^{y} f for a grid function.
double primitive(const GridFunction1D& f, double y) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double l = f.left(i);
    const double r = l + f.cell_width;
    if (y <= l) break;
    s += f.samples[i] * (std::min(y, r) - l);
  }
  return s;
}

double value_at(const GridFunction1D& f, double x) {
  const double k = std::floor((x - f.origin) / f.cell_width);
  if (k < 0 || k >= static_cast<double>(f.size())) return 0.0;
  return f.samples[static_cast<std::size_t>(k)];
}

// Sup of averages over [a, b] containing x, with a and b ranging over the
// breakpoints on their side of x and x itself.
double brute_maximal(const GridFunction1D& f, double x) {
  std::vector<double> left{x};
  std::vector<double> right{x};
  for (std::size_t i = 0; i <= f.size(); ++i) {
    const double p = f.left(i);
    if (p < x) left.push_back(p);
    if (p > x) right.push_back(p);
  }
  double best = value_at(f, x);
  for (double a : left)
    for (double b : right) best = std::max(best, (primitive(f, b) - primitive(f, a)) / (b - a));
  return best;
}

GridFunction1D chi01() {
  GridFunction1D f{-4.0, 1.0 / 16.0, std::vector<double>(144, 0.0)};
  for (std::size_t i = 64; i < 80; ++i) f.samples[i] = 1.0;
  return f;
}

}  // namespace

TEST(Maximal, ExactMatchesBruteForce) {
  Rng rng(41);
  for (int k = 0; k < 40; ++k) {
    const auto f = random_grid(rng, 24, 4);
    const auto m = maximal_1d(f);
    const auto o = maximal_1d(f, MaximalMode::oracle);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double want = brute_maximal(f, f.midpoint(i));
      EXPECT_NEAR(m.samples[i], want, 1e-12 * std::max(1.0, want));
      EXPECT_NEAR(o.samples[i], want, 1e-12 * std::max(1.0, want));
    }
  }
}

TEST(Maximal, IndicatorClosedForm) {
  const auto f = chi01();
  const auto m = maximal_1d(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.midpoint(i);
    const double want = x < 0 ? 1.0 / (1.0 - x) : (x <= 1 ? 1.0 : 1.0 / x);
    EXPECT_NEAR(m.samples[i], want, 1e-12) << x;
  }
  EXPECT_NEAR(maximal_1d_at(f, -10.0), 1.0 / 11.0, 1e-12);
  EXPECT_NEAR(maximal_1d_at(f, 0.3), 1.0, 1e-12);
  EXPECT_NEAR(maximal_1d_at(f, 3.0), 1.0 / 3.0, 1e-12);
}

TEST(Maximal, VectorL2Example) {
  // chi_[0,1] and chi_[1,2] at x = 3: M gives 1/3 and 1/2.
  const GridFunction1D f1{0.0, 1.0, {1.0, 0.0}};
  const GridFunction1D f2{0.0, 1.0, {0.0, 1.0}};
  const double a = maximal_1d_at(f1, 3.0);
  const double b = maximal_1d_at(f2, 3.0);
  EXPECT_NEAR(a, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(b, 0.5, 1e-12);
  EXPECT_NEAR(std::hypot(a, b), std::sqrt(1.0 / 9.0 + 1.0 / 4.0), 1e-12);

  // On a grid, the vector maximal function is the memberwise combination.
  GridFunction1D g1{0.0, 1.0, {1.0, 0.0, 0.0, 0.0}};
  GridFunction1D g2{0.0, 1.0, {0.0, 1.0, 0.0, 0.0}};
  const auto v2 = vector_maximal({g1, g2}, 2.0);
  const auto vi = vector_maximal({g1, g2}, kInf);
  const auto m1 = maximal_1d(g1);
  const auto m2 = maximal_1d(g2);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(v2.samples[i], std::hypot(m1.samples[i], m2.samples[i]), 1e-12);
    EXPECT_NEAR(vi.samples[i], std::max(m1.samples[i], m2.samples[i]), 1e-12);
  }
  EXPECT_NEAR(v2.samples[3], std::sqrt(1.0 / 3.5 / 3.5 + 1.0 / 2.5 / 2.5), 1e-12);
}

TEST(Maximal, Aggregate) {
  const GridFunction1D g1{0.0, 1.0, {3.0, 0.0}};
  const GridFunction1D g2{0.0, 1.0, {4.0, 1.0}};
  const auto a = lq_aggregate({g1, g2}, 2.0);
  EXPECT_NEAR(a.samples[0], 5.0, 1e-12);
  EXPECT_NEAR(a.samples[1], 1.0, 1e-12);
  EXPECT_THROW(lq_aggregate({g1, g2}, 0.0), DomainError);
  const GridFunction1D other{1.0, 1.0, {1.0, 1.0}};
  EXPECT_THROW(vector_maximal({g1, other}, 2.0), PreconditionError);
  EXPECT_THROW(vector_maximal(std::vector<GridFunction1D>{}, 2.0), PreconditionError);
}

TEST(Dyadic, OneDimensionalExample) {
  const auto m = dyadic_maximal(to_field(GridFunction1D{0.0, 1.0, {1.0, 0.0, 0.0, 0.0}}));
  ASSERT_EQ(m.size(), 4u);
  EXPECT_DOUBLE_EQ(m.samples[0], 1.0);
  EXPECT_DOUBLE_EQ(m.samples[1], 0.5);
  EXPECT_DOUBLE_EQ(m.samples[2], 0.25);
  EXPECT_DOUBLE_EQ(m.samples[3], 0.25);
}

TEST(Dyadic, ConstantFields) {
  for (int dim : {2, 3}) {
    GridFieldND f;
    f.dim = dim;
    f.side = 4;
    f.samples.assign(dim == 2 ? 16 : 64, 2.5);
    const auto m = dyadic_maximal(f);
    for (double v : m.samples) EXPECT_DOUBLE_EQ(v, 2.5);
  }
}

TEST(Dyadic, TwoDimensionalCorner) {
  // One hot cell in a 2x2 field: the whole square averages to 1/4.
  GridFieldND f;
  f.dim = 2;
  f.side = 2;
  f.samples = {4.0, 0.0, 0.0, 0.0};
  const auto m = dyadic_maximal(f);
  EXPECT_DOUBLE_EQ(m.samples[0], 4.0);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_DOUBLE_EQ(m.samples[i], 1.0);
}

TEST(Dyadic, Validation) {
  GridFieldND f;
  f.dim = 1;
  f.side = 3;
  f.samples.assign(3, 1.0);
  EXPECT_THROW(f.validate(), PreconditionError);
  f.dim = 4;
  f.side = 2;
  f.samples.assign(16, 1.0);
  EXPECT_THROW(f.validate(), PreconditionError);
  EXPECT_THROW(to_field(GridFunction1D{0.0, 1.0, {1.0, 1.0, 1.0}}), PreconditionError);
}

TEST(WeightCriteria, PowerClosedForms) {
  const std::vector<double> grid{1e-3, 1e-1, 1.0, 10.0, 1e3};
  for (double p : {1.5, 2.0, 4.0}) {
    const auto w = power_weight(1.0 / p);
    const auto r = weight_criterion_q(w, 2.0, grid);
    EXPECT_NEAR(r.sup_ratio, 1.0 / (p - 1.0), 1e-4 / (p - 1.0));
    EXPECT_EQ(r.per_r.size(), grid.size());
    EXPECT_NEAR(weight_criterion_inf(w, grid), p / (p - 1.0), 1e-4 * p / (p - 1.0));
  }
}

TEST(WeightCriteria, LinearWeightDiverges) {
  const auto r = weight_criterion_q(power_weight(1.0), 2.0, {0.5, 1.0, 2.0});
  EXPECT_TRUE(is_inf(r.sup_ratio));
  EXPECT_THROW(weight_criterion_q(power_weight(0.5), 0.0, {1.0}), DomainError);
  EXPECT_THROW(weight_criterion_q(power_weight(0.5), 2.0, {-1.0}), DomainError);
}

TEST(WeightCriteria, OrliczWeightOfNabla2Member) {
  const std::vector<double> grid{1e-2, 1.0, 1e2};
  EXPECT_TRUE(std::isfinite(weight_criterion_q(orlicz_weight(power_law(3)), 2.0, grid).sup_ratio));
  EXPECT_TRUE(std::isfinite(weight_criterion_inf(orlicz_weight(power_law(3)), grid)));
}

TEST(Herz, IndicatorAtOne) {
  const auto f = chi01();
  const auto r = herz_ratio(f, {1.0});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].second, 1.0, 2.0 * f.cell_width);
  EXPECT_THROW(herz_ratio(GridFunction1D{0.0, 1.0, {0.0, 0.0}}, {1.0}), DomainError);
}

// Property: M is sublinear and dominates |f|.
TEST(MaximalProperty, SublinearAndDominating) {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    auto [f, g] = random_grid_pair(rng, 32);
    GridFunction1D sum = f;
    for (std::size_t i = 0; i < f.size(); ++i) sum.samples[i] += g.samples[i];
    const auto mf = maximal_1d(f);
    const auto mg = maximal_1d(g);
    const auto ms = maximal_1d(sum);
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_GE(mf.samples[i], f.samples[i]);
      EXPECT_LE(ms.samples[i], (mf.samples[i] + mg.samples[i]) * (1 + 1e-12));
    }
  }
}

// Property: the dyadic maximal function never exceeds the uncentered one.
TEST(MaximalProperty, DyadicBelowUncentered) {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    GridFunction1D f{0.0, 1.0, std::vector<double>(32)};
    for (auto& v : f.samples) v = rng.chance(0.3) ? 0.0 : rng.log_uniform(1e-2, 1e2);
    const auto d = dyadic_maximal(to_field(f));
    const auto m = maximal_1d(f);
    for (std::size_t i = 0; i < 32; ++i) EXPECT_LE(d.samples[i], m.samples[i] * (1 + 1e-12));
  }
}
