#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "orlicz/classify.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/quadrature.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

namespace {

constexpr double kQuadTol = 1e-13;

// r -> F(r^theta) with F(x) = int_0^x phi(t)/t dt. F is tabulated at the
// powers of two inside (a, b) so that one evaluation only integrates over a
// single factor-of-two cell.
class PhiTheta final : public detail::YoungImpl {
 public:
  PhiTheta(YoungFunction base, double theta) : base_(std::move(base)), theta_(theta) {
    const double a0 = base_.a();
    const double b0 = base_.b();
    if (a0 > 0.0) nodes_.push_back(a0);
    for (int k = -64; k <= 256; ++k) {
      const double x = std::ldexp(1.0, k);
      if (x > a0 && x < b0) nodes_.push_back(x);
    }
    if (std::isfinite(b0)) nodes_.push_back(b0);
    cumulative_.assign(nodes_.size(), 0.0);
    cumulative_[0] = integral(a0, nodes_[0]);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      cumulative_[i] = ext_add(cumulative_[i - 1], integral(nodes_[i - 1], nodes_[i]));
    }
    a_ = a0 > 0.0 ? std::pow(a0, 1.0 / theta_) : 0.0;
    b_ = std::isfinite(b0) ? std::pow(b0, 1.0 / theta_) : kInf;
  }

  double a() const override { return a_; }
  double b() const override { return b_; }

  double value(double r) const override { return primitive(std::pow(r, theta_)); }

  bool has_derivative() const override { return true; }
  double derivative(double r) const override {
    return theta_ * base_(std::pow(r, theta_)) / r;
  }
  double elasticity(double r) const override {
    const double x = std::pow(r, theta_);
    const double f = primitive(x);
    if (!(f > 0.0) || !std::isfinite(f)) return std::nan("");
    return theta_ * base_(x) / f;
  }

  // F^{-1}(u)^{1/theta}: locate the tabulated cell, then safeguarded Newton
  // with F'(x) = phi(x)/x inside it.
  std::optional<double> inverse(double u, double rel_tol) const override {
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) return std::nullopt;
    const std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
    double lo = i == 0 ? base_.a() : nodes_[i - 1];
    double hi = nodes_[i];
    double x = lo + 0.5 * (hi - lo);
    for (int k = 0; k < 100; ++k) {
      const double g = primitive(x) - u;
      if (g > 0.0) {
        hi = x;
      } else {
        lo = x;
      }
      const double slope = base_(x) / x;
      double next = slope > 0.0 ? x - g / slope : lo + 0.5 * (hi - lo);
      if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);
      const bool done = std::abs(next - x) <= 0.1 * rel_tol * x || hi - lo <= 0.1 * rel_tol * hi;
      x = next;
      if (done) break;
    }
    return std::pow(x, 1.0 / theta_);
  }

  double slope_at_zero() const override {
    if (a_ > 0.0 || theta_ > 1.0) return 0.0;
    if (theta_ == 1.0) return base_.slope_at_zero();
    return YoungImpl::slope_at_zero();
  }
  double slope_at_infinity() const override {
    if (std::isfinite(b_)) return kInf;
    if (theta_ == 1.0) return base_.slope_at_infinity();
    if (theta_ > 1.0 && base_.slope_at_infinity() > 0.0) return kInf;
    return YoungImpl::slope_at_infinity();
  }

  nlohmann::json describe() const override {
    return {{"kind", "phi_theta"}, {"base", base_.describe()}, {"theta", theta_}};
  }
  std::string label() const override {
    return "theta(" + base_.label() + ", " + nlohmann::json(theta_).dump() + ")";
  }

 private:
  double integral(double lo, double hi) const {
    if (!(hi > lo)) return 0.0;
    auto integrand = [this](double t) { return t > 0.0 ? base_(t) / t : base_.slope_at_zero(); };
    return integrate(integrand, lo, hi, kQuadTol).value;
  }

  double primitive(double x) const {
    const double a0 = base_.a();
    if (x <= a0) return 0.0;
    if (x > base_.b()) return kInf;
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    if (it == nodes_.begin()) return integral(a0, x);
    const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    return ext_add(cumulative_[i], integral(nodes_[i], x));
  }

  YoungFunction base_;
  double theta_;
  double a_ = 0.0;
  double b_ = kInf;
  std::vector<double> nodes_;
  std::vector<double> cumulative_;
};

}  // namespace

YoungFunction phi_theta(const YoungFunction& phi, double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw PreconditionError("phi_theta requires 0 < theta < inf");
  }
  if (theta < 1.0) {
    ClassifyOptions opts;
    opts.points_per_decade = 64;
    const double p_minus = classify(phi, opts).p_minus;
    if (theta * p_minus < 1.0 - 1e-6) {
      throw PreconditionError("phi_theta requires theta >= 1/p_-(phi); p_- = " +
                              nlohmann::json(p_minus).dump());
    }
  }
  return YoungFunction(std::make_shared<PhiTheta>(phi, theta));
}

}  // namespace orlicz
