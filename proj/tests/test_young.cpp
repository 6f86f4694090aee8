#include <cmath>

#include <gtest/gtest.h>

#include "orlicz/corpus.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/young.hpp"
#include "orlicz/young_json.hpp"

using namespace orlicz;

TEST(Young, CatalogValues) {
  EXPECT_DOUBLE_EQ(power_law(2)(3.0), 9.0);
  EXPECT_DOUBLE_EQ(power_log()(1.0), std::log(4.0));
  EXPECT_DOUBLE_EQ(exp_minus_one()(1.0), std::exp(1.0) - 1.0);
  EXPECT_EQ(deadzone()(0.5), 0.0);
  EXPECT_DOUBLE_EQ(deadzone()(3.0), 2.0);
  EXPECT_DOUBLE_EQ(capped(1.0)(1.0), 1.0);
  EXPECT_TRUE(is_inf(capped(1.0)(1.5)));
  EXPECT_EQ(power_law(2)(0.0), 0.0);
  EXPECT_TRUE(is_inf(power_law(2)(kInf)));
}

TEST(Young, Markers) {
  EXPECT_EQ(deadzone().a(), 1.0);
  EXPECT_TRUE(is_inf(deadzone().b()));
  EXPECT_EQ(capped(2.0).a(), 0.0);
  EXPECT_EQ(capped(2.0).b(), 2.0);
}

TEST(Young, RejectsBadArguments) {
  EXPECT_THROW(power_law(2)(-1.0), DomainError);
  EXPECT_THROW(power_law(2)(std::nan("")), DomainError);
  EXPECT_THROW(power_law(0.5), PreconditionError);
  EXPECT_THROW(capped(0.0), PreconditionError);
  EXPECT_THROW(gen_inverse(power_law(2), -1.0), DomainError);
  EXPECT_THROW(fundamental_weight(power_law(2), 0.0), DomainError);
}

TEST(Young, GeneralizedInverseExamples) {
  EXPECT_NEAR(gen_inverse(power_law(2), 4.0), 2.0, 1e-11);
  EXPECT_NEAR(gen_inverse(exp_minus_one(), std::exp(1.0) - 1.0), 1.0, 1e-11);
  EXPECT_NEAR(gen_inverse(deadzone(), 1.0), 2.0, 1e-11);
  // Flat part: inf{t : phi(t) > 0} is a.
  EXPECT_EQ(gen_inverse(deadzone(), 0.0), 1.0);
  // Past the jump to infinity the inverse sticks at b.
  EXPECT_EQ(gen_inverse(capped(1.0), 5.0), 1.0);
  EXPECT_TRUE(is_inf(gen_inverse(power_law(2), kInf)));
}

TEST(Young, FundamentalWeight) {
  // t^p: Phi^{-1}(1/t)^{-1} = t^{1/p}.
  EXPECT_NEAR(fundamental_weight(power_law(2), 9.0), 3.0, 1e-10);
  EXPECT_NEAR(fundamental_weight(power_law(4), 16.0), 2.0, 1e-10);
}

TEST(Conjugate, PowerClosedForm) {
  for (double p : {1.5, 2.0, 3.0}) {
    const double pp = p / (p - 1.0);
    const auto c = conjugate(power_law(p));
    for (double r : {0.01, 0.3, 1.0, 2.5, 40.0}) {
      const double want = (p - 1.0) * std::pow(r / p, pp);
      EXPECT_NEAR(c(r), want, 1e-9 * want) << "p=" << p << " r=" << r;
    }
  }
}

TEST(Conjugate, ExpClosedForm) {
  // sup_s (rs - e^s + 1) = r log r - r + 1 for r >= 1, 0 below.
  const auto c = conjugate(exp_minus_one());
  EXPECT_NEAR(c(0.5), 0.0, 1e-12);
  for (double r : {1.5, 3.0, 100.0}) {
    const double want = r * std::log(r) - r + 1.0;
    EXPECT_NEAR(c(r), want, 1e-9 * want);
  }
}

TEST(Conjugate, LinearPieces) {
  // deadzone: r on [0,1], inf beyond; capped at b: b max(r-1,0).
  const auto d = conjugate(deadzone());
  EXPECT_NEAR(d(0.5), 0.5, 1e-12);
  EXPECT_TRUE(is_inf(d(1.5)));
  const auto c = conjugate(capped(2.0));
  EXPECT_EQ(c(0.5), 0.0);
  EXPECT_NEAR(c(3.0), 4.0, 1e-9);
  EXPECT_NEAR(c.a(), 1.0, 1e-12);
}

TEST(Conjugate, BiconjugateIsIdentity) {
  const auto phi = power_log();
  const auto cc = conjugate(conjugate(phi));
  for (double t : {0.1, 1.0, 10.0}) EXPECT_DOUBLE_EQ(cc(t), phi(t));
}

TEST(Conjugate, InverseMatchesClosedForm) {
  // conj(t^2) = r^2/4, so its inverse is 2 sqrt(u).
  const auto c = conjugate(power_law(2));
  for (double u : {1e-6, 0.25, 1.0, 1e4}) {
    EXPECT_NEAR(gen_inverse(c, u), 2.0 * std::sqrt(u), 1e-10 * 2.0 * std::sqrt(u));
  }
}

TEST(PhiTheta, PowerClosedForm) {
  // int_0^{r^theta} t^{p-1} dt = r^{p theta} / p.
  for (double theta : {0.75, 1.0, 2.0}) {
    const auto f = phi_theta(power_law(2), theta);
    for (double r : {0.2, 1.0, 7.0}) {
      const double want = std::pow(r, 2.0 * theta) / 2.0;
      EXPECT_NEAR(f(r), want, 1e-8 * want) << theta << " " << r;
      EXPECT_NEAR(gen_inverse(f, want), r, 1e-9 * r);
    }
  }
}

TEST(PhiTheta, RejectsSmallTheta) {
  // p_-(t^2) = 2, so theta must be at least 1/2.
  EXPECT_THROW(phi_theta(power_law(2), 0.25), PreconditionError);
  EXPECT_THROW(phi_theta(power_law(1), 0.5), PreconditionError);
}

TEST(YoungJson, RoundTrip) {
  for (const auto& e : default_catalog()) {
    const auto back = parse_young(e.phi.describe());
    for (double t : {0.3, 1.0, 2.0}) {
      const double a = e.phi(t);
      const double b = back(t);
      if (is_inf(a)) {
        EXPECT_TRUE(is_inf(b));
      } else {
        EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, a)) << e.name;
      }
    }
  }
}

TEST(YoungJson, Errors) {
  EXPECT_THROW(parse_young({{"kind", "nope"}}), ParseError);
  EXPECT_THROW(parse_young({{"kind", "power"}}), ParseError);
  EXPECT_THROW(parse_young(nlohmann::json::array()), ParseError);
}

// Property: Phi(Phi^{-1}(u)) <= u <= Phi(Phi^{-1}(u)+) and
// u <= Phi^{-1}(u) conj^{-1}(u) <= 2u across the catalog.
TEST(YoungProperty, InverseSandwichRandom) {
  Rng rng(11);
  for (const auto& e : default_catalog()) {
    const auto c = conjugate(e.phi);
    for (int i = 0; i < 60; ++i) {
      const double u = rng.log_uniform(1e-6, 1e6);
      const double t = gen_inverse(e.phi, u);
      EXPECT_LE(e.phi(t), u * (1 + 1e-9)) << e.name;
      if (std::isfinite(t) && t < e.phi.b()) {
        const double up = e.phi(std::min(t * (1 + 1e-7) + 1e-300, e.phi.b()));
        EXPECT_GE(up * (1 + 1e-9), u) << e.name << " u=" << u;
      }
      const double prod = t * gen_inverse(c, u);
      EXPECT_GE(prod, u * (1 - 1e-6)) << e.name;
      EXPECT_LE(prod, 2 * u * (1 + 1e-6)) << e.name;
    }
  }
}

// Property: Young's inequality rs <= Phi(s) + conj(r).
TEST(YoungProperty, YoungInequality) {
  Rng rng(12);
  for (const auto& e : default_catalog()) {
    const auto c = conjugate(e.phi);
    for (int i = 0; i < 50; ++i) {
      const double s = rng.log_uniform(1e-3, 1e2);
      const double r = rng.log_uniform(1e-3, 1e2);
      const double rhs = ext_add(e.phi(s), c(r));
      EXPECT_LE(r * s, rhs * (1 + 1e-9) + 1e-12) << e.name;
    }
  }
}

// Property: convexity along random chords.
TEST(YoungProperty, Convexity) {
  Rng rng(13);
  for (const auto& e : default_catalog()) {
    for (int i = 0; i < 100; ++i) {
      const double x = rng.log_uniform(1e-2, 5.0);
      const double y = rng.log_uniform(1e-2, 5.0);
      const double l = rng.uniform();
      const double mid = e.phi(l * x + (1 - l) * y);
      const double chord = ext_add(ext_mul(l, e.phi(x)), ext_mul(1 - l, e.phi(y)));
      EXPECT_LE(mid, chord * (1 + 1e-9) + 1e-15) << e.name;
    }
  }
}
