#include "orlicz/young.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "bracket.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

namespace detail {

double YoungImpl::derivative(double t) const {
  // Central difference, pulled inside (a, b] near the ends.
  const double h = 1e-6 * std::max(t, 1e-300);
  double lo = t - h;
  double hi = t + h;
  if (lo <= a()) lo = t;
  if (hi > b()) hi = t;
  if (hi == lo) return 0.0;
  return (value(hi) - value(lo)) / (hi - lo);
}

double YoungImpl::elasticity(double t) const {
  const double v = value(t);
  if (!(v > 0.0) || !std::isfinite(v)) return std::nan("");
  if (has_derivative()) return t * derivative(t) / v;
  constexpr double h = 1e-5;
  double lo = t * std::exp(-h);
  double hi = t * std::exp(h);
  if (lo <= a()) lo = t;
  if (hi > b()) hi = t;
  if (hi == lo) return std::nan("");
  const double vl = value(lo);
  const double vh = value(hi);
  if (!(vl > 0.0) || !std::isfinite(vh)) return std::nan("");
  return (std::log(vh) - std::log(vl)) / (std::log(hi) - std::log(lo));
}

double YoungImpl::slope_at_zero() const {
  if (a() > 0.0) return 0.0;
  // A ratio still falling between the two probes is read as zero.
  const double h1 = std::min(1e-100, 0.5 * b());
  const double h2 = 1e-50 * h1;
  const double s1 = value(h1) / h1;
  const double s2 = value(h2) / h2;
  if (s2 < s1 * (1.0 - 1e-6)) return 0.0;
  return s2;
}

double YoungImpl::slope_at_infinity() const {
  if (std::isfinite(b())) return kInf;
  const double s1 = value(1e12) / 1e12;
  const double s2 = value(1e15) / 1e15;
  if (!std::isfinite(s2) || s2 > s1 * (1.0 + 1e-6)) return kInf;
  return s2;
}

std::optional<double> YoungImpl::inverse(double, double) const { return std::nullopt; }

namespace {

class PowerLaw final : public YoungImpl {
 public:
  explicit PowerLaw(double p) : p_(p) {}
  double a() const override { return 0.0; }
  double b() const override { return kInf; }
  double value(double t) const override { return std::pow(t, p_); }
  bool has_derivative() const override { return true; }
  double derivative(double t) const override { return p_ * std::pow(t, p_ - 1.0); }
  double elasticity(double) const override { return p_; }
  double slope_at_zero() const override { return p_ == 1.0 ? 1.0 : 0.0; }
  double slope_at_infinity() const override { return p_ == 1.0 ? 1.0 : kInf; }
  nlohmann::json describe() const override { return {{"kind", "power"}, {"p", p_}}; }
  std::string label() const override { return "t^" + nlohmann::json(p_).dump(); }

 private:
  double p_;
};

class PowerLog final : public YoungImpl {
 public:
  double a() const override { return 0.0; }
  double b() const override { return kInf; }
  double value(double t) const override { return t * std::log(3.0 + t); }
  bool has_derivative() const override { return true; }
  double derivative(double t) const override { return std::log(3.0 + t) + t / (3.0 + t); }
  double elasticity(double t) const override {
    return 1.0 + t / ((3.0 + t) * std::log(3.0 + t));
  }
  double slope_at_zero() const override { return std::log(3.0); }
  double slope_at_infinity() const override { return kInf; }
  nlohmann::json describe() const override { return {{"kind", "power_log"}}; }
  std::string label() const override { return "t log(3+t)"; }
};

class ExpMinusOne final : public YoungImpl {
 public:
  double a() const override { return 0.0; }
  double b() const override { return kInf; }
  double value(double t) const override { return std::expm1(t); }
  bool has_derivative() const override { return true; }
  double derivative(double t) const override { return std::exp(t); }
  // t e^t / (e^t - 1) written without overflow.
  double elasticity(double t) const override { return t / -std::expm1(-t); }
  double slope_at_zero() const override { return 1.0; }
  double slope_at_infinity() const override { return kInf; }
  nlohmann::json describe() const override { return {{"kind", "exp_minus_one"}}; }
  std::string label() const override { return "e^t-1"; }
};

class Deadzone final : public YoungImpl {
 public:
  double a() const override { return 1.0; }
  double b() const override { return kInf; }
  double value(double t) const override { return t - 1.0; }
  bool has_derivative() const override { return true; }
  double derivative(double) const override { return 1.0; }
  double elasticity(double t) const override { return t / (t - 1.0); }
  double slope_at_zero() const override { return 0.0; }
  double slope_at_infinity() const override { return 1.0; }
  nlohmann::json describe() const override { return {{"kind", "deadzone"}}; }
  std::string label() const override { return "max(t-1,0)"; }
};

class Capped final : public YoungImpl {
 public:
  explicit Capped(double b) : b_(b) {}
  double a() const override { return 0.0; }
  double b() const override { return b_; }
  double value(double t) const override { return t; }
  bool has_derivative() const override { return true; }
  double derivative(double) const override { return 1.0; }
  double elasticity(double) const override { return 1.0; }
  double slope_at_zero() const override { return 1.0; }
  double slope_at_infinity() const override { return kInf; }
  nlohmann::json describe() const override { return {{"kind", "capped"}, {"b", b_}}; }
  std::string label() const override { return "t capped at " + nlohmann::json(b_).dump(); }

 private:
  double b_;
};

}  // namespace
}  // namespace detail

YoungFunction::YoungFunction(std::shared_ptr<const detail::YoungImpl> impl)
    : impl_(std::move(impl)) {
  if (!impl_) throw PreconditionError("YoungFunction: null evaluator");
}

double YoungFunction::operator()(double t) const {
  if (std::isnan(t) || t < 0.0) throw DomainError("Young function evaluated at negative argument");
  if (t == 0.0) return 0.0;
  if (is_inf(t)) return kInf;
  if (t <= impl_->a()) return 0.0;
  if (t > impl_->b()) return kInf;
  return impl_->value(t);
}

double YoungFunction::derivative(double t) const {
  if (!(t > impl_->a() && t < impl_->b())) {
    throw DomainError("derivative requested outside (a, b)");
  }
  return impl_->derivative(t);
}

double YoungFunction::elasticity(double t) const {
  if (!(t > impl_->a() && t <= impl_->b()) || !std::isfinite(t)) return std::nan("");
  return impl_->elasticity(t);
}

YoungFunction power_law(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("power_law requires 1 <= p < inf");
  return YoungFunction(std::make_shared<detail::PowerLaw>(p));
}

YoungFunction power_log() { return YoungFunction(std::make_shared<detail::PowerLog>()); }

YoungFunction exp_minus_one() { return YoungFunction(std::make_shared<detail::ExpMinusOne>()); }

YoungFunction deadzone() { return YoungFunction(std::make_shared<detail::Deadzone>()); }

YoungFunction capped(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw PreconditionError("capped requires 0 < b < inf");
  return YoungFunction(std::make_shared<detail::Capped>(b));
}

double eval(const YoungFunction& phi, double t) { return phi(t); }

double gen_inverse(const YoungFunction& phi, double u, double rel_tol) {
  if (std::isnan(u) || u < 0.0) throw DomainError("generalized inverse at negative argument");
  if (is_inf(u)) return kInf;
  const double a = phi.a();
  const double b = phi.b();
  if (u == 0.0) return a;
  if (std::isfinite(b) && phi(b) <= u) return b;
  if (const auto t = phi.impl().inverse(u, rel_tol)) return *t;

  // Bracket lo < hi with phi(lo) <= u < phi(hi), scanning geometrically in
  // the distance from a.
  const double base = a > 0.0 ? a : 1.0;
  auto at = [&](double step) { return std::min(a + step, b); };
  double step = base;
  double lo;
  double hi;
  if (phi(at(step)) > u) {
    hi = at(step);
    while (true) {
      step *= 0.0625;
      const double x = at(step);
      if (phi(x) <= u || step < 1e-300) {
        lo = x;
        break;
      }
      hi = x;
    }
  } else {
    lo = at(step);
    while (true) {
      step *= 16.0;
      const double x = at(step);
      if (phi(x) > u) {
        hi = x;
        break;
      }
      lo = x;
      if (!std::isfinite(x)) return kInf;
    }
  }
  detail::refine_bracket(
      lo, hi, [&](double t) { return phi(t) - u; }, [](double g) { return g > 0.0; }, rel_tol);
  // lo keeps phi(result) <= u exact.
  return lo;
}

double fundamental_weight(const YoungFunction& phi, double t) {
  if (!(t > 0.0)) throw DomainError("fundamental weight requires t > 0");
  return ext_recip(gen_inverse(phi, ext_recip(t)));
}

}  // namespace orlicz
