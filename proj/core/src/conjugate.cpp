#include <cmath>
#include <optional>
#include <string>

#include "bracket.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

namespace {

// sup{ r s - phi(s) : s >= 0 }. The objective is concave in s, so its maximizer
// is where the (monotone) derivative of phi crosses r; that crossing is found
// by bracketing and false position.
class Conjugate final : public detail::YoungImpl {
 public:
  explicit Conjugate(YoungFunction base)
      : base_(std::move(base)),
        a_(base_.slope_at_zero()),
        b_(base_.slope_at_infinity()),
        smooth_(base_.has_derivative() && base_.a() == 0.0 && is_inf(base_.b()) && a_ == 0.0 &&
                is_inf(b_)) {}

  double a() const override { return a_; }
  double b() const override { return b_; }

  double value(double r) const override {
    const double s = argmax(r);
    if (is_inf(s)) return kInf;
    return std::max(objective(r, s), 0.0);
  }

  bool has_derivative() const override { return true; }
  double derivative(double r) const override { return argmax(r); }
  double elasticity(double r) const override {
    const double v = value(r);
    if (!(v > 0.0) || !std::isfinite(v)) return std::nan("");
    return r * argmax(r) / v;
  }

  const YoungFunction& base() const { return base_; }

  // For a C^1 base with phi'(0) = 0 and phi'(inf) = inf, s -> phi'(s) maps
  // onto (0, inf) and conj(phi')(s) = s phi'(s) - phi(s), so the inverse
  // solves one equation in s instead of nesting two searches.
  std::optional<double> inverse(double u, double rel_tol) const override {
    if (!smooth_) return std::nullopt;
    auto g = [&](double s) { return s * base_.derivative(s) - base_(s) - u; };
    double lo = 0.0;
    double hi = 1.0;
    if (g(hi) > 0.0) {
      while (g(hi * 0.0625) > 0.0) {
        hi *= 0.0625;
        if (hi < 1e-290) return std::nullopt;
      }
      lo = hi * 0.0625;
    } else {
      while (!(g(hi) > 0.0)) {
        lo = hi;
        hi *= 16.0;
        if (hi > 1e290) return std::nullopt;
      }
    }
    detail::refine_bracket(lo, hi, g, [](double v) { return v > 0.0; }, 0.01 * rel_tol);
    return lo > 0.0 ? base_.derivative(lo) : 0.0;
  }

  double slope_at_zero() const override { return base_.a(); }
  double slope_at_infinity() const override { return base_.b(); }

  nlohmann::json describe() const override {
    return {{"kind", "conjugate"}, {"base", base_.describe()}};
  }
  std::string label() const override { return "conj(" + base_.label() + ")"; }

 private:
  double objective(double r, double s) const { return r * s - base_(s); }

  // Right-continuous slope of phi with the flat and infinite parts made
  // explicit.
  double slope(double s) const {
    if (s <= base_.a()) return 0.0;
    if (s >= base_.b()) return kInf;
    return base_.derivative(s);
  }

  double argmax(double r) const {
    const double b0 = base_.b();
    double lo = 0.0;
    double hi;
    if (std::isfinite(b0)) {
      hi = b0;
      if (slope(std::nextafter(b0, 0.0)) < r) return b0;
    } else {
      hi = std::max(1.0, base_.a());
      while (slope(hi) < r) {
        lo = hi;
        hi *= 16.0;
        if (hi > 1e300) {
          // The slope never reached r, so r is the asymptotic slope and the
          // objective is non-decreasing. Its sup is finite only if it has
          // stopped growing.
          const double last = objective(r, lo);
          const double before = objective(r, 0.5 * lo);
          return last <= before * (1.0 + 1e-15) ? lo : kInf;
        }
      }
    }
    // Shrink the lower end towards zero so that the bracket is tight for
    // small maximizers.
    if (lo == 0.0) {
      double s = hi;
      while (s > 1e-300 && slope(s) >= r) {
        hi = s;
        s *= 0.0625;
      }
      lo = slope(s) < r ? s : 0.0;
    }
    detail::refine_bracket(
        lo, hi, [&](double s) { return slope(s) - r; }, [](double g) { return g >= 0.0; }, 1e-15);
    // Any point of the bracket gives a lower bound on the sup; keep the best.
    const double mid = lo + 0.5 * (hi - lo);
    double best = lo;
    if (objective(r, mid) > objective(r, best)) best = mid;
    if (objective(r, hi) > objective(r, best)) best = hi;
    return best;
  }

  YoungFunction base_;
  double a_;
  double b_;
  bool smooth_;
};

}  // namespace

YoungFunction conjugate(const YoungFunction& phi) {
  // Young functions are convex and lower semicontinuous, so the second
  // conjugate is the function itself.
  if (const auto* c = dynamic_cast<const Conjugate*>(&phi.impl())) return c->base();
  return YoungFunction(std::make_shared<Conjugate>(phi));
}

}  // namespace orlicz
