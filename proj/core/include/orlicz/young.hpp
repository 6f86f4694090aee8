#pragma once

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "orlicz/ext_real.hpp"

namespace orlicz {

namespace detail {

// Closed-form or derived evaluator behind a YoungFunction handle. value() and
// derivative() are only called for a() < t <= b() with t finite; the handle
// applies the conventions outside that range.
class YoungImpl {
 public:
  virtual ~YoungImpl() = default;

  virtual double a() const = 0;
  virtual double b() const = 0;
  virtual double value(double t) const = 0;

  virtual bool has_derivative() const { return false; }
  virtual double derivative(double t) const;

  // t * phi'(t) / phi(t); the default uses derivative() when available and a
  // central difference of log(phi) in log(t) otherwise.
  virtual double elasticity(double t) const;

  // lim phi(t)/t as t -> 0 and as t -> inf. These are a() and b() of the
  // complementary function.
  virtual double slope_at_zero() const;
  virtual double slope_at_infinity() const;

  // Generalized inverse at 0 < u < phi(b), for evaluators that can do better
  // than bracketing phi itself. nullopt falls back to the generic solver.
  virtual std::optional<double> inverse(double u, double rel_tol) const;

  virtual nlohmann::json describe() const = 0;
  virtual std::string label() const = 0;
};

}  // namespace detail

// A convex non-decreasing phi: [0, inf] -> [0, inf] with phi(0) = 0, zero on
// [0, a] and +inf beyond b. Cheap to copy; the evaluator is shared and
// immutable, so handles may be used from several threads.
class YoungFunction {
 public:
  explicit YoungFunction(std::shared_ptr<const detail::YoungImpl> impl);

  // phi(t) for t in [0, inf]; throws DomainError for negative or NaN t.
  double operator()(double t) const;

  double a() const { return impl_->a(); }
  double b() const { return impl_->b(); }

  bool has_derivative() const { return impl_->has_derivative(); }
  // Derivative on (a, b); DomainError outside.
  double derivative(double t) const;
  double elasticity(double t) const;

  double slope_at_zero() const { return impl_->slope_at_zero(); }
  double slope_at_infinity() const { return impl_->slope_at_infinity(); }

  std::string label() const { return impl_->label(); }
  nlohmann::json describe() const { return impl_->describe(); }

  const detail::YoungImpl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const detail::YoungImpl> impl_;
};

// Catalog.
YoungFunction power_law(double p);        // t^p, p >= 1
YoungFunction power_log();                // t log(3 + t)
YoungFunction exp_minus_one();            // e^t - 1
YoungFunction deadzone();                 // 0 on [0,1], t - 1 after
YoungFunction capped(double b);           // t on [0,b], +inf after

// Complementary function sup{ r s - phi(s) : s >= 0 }, evaluated numerically.
// The conjugate of a conjugate is the original function.
YoungFunction conjugate(const YoungFunction& phi);

// r -> int_0^{r^theta} phi(t)/t dt. Requires theta >= 1/p_-(phi); throws
// PreconditionError otherwise.
YoungFunction phi_theta(const YoungFunction& phi, double theta);

double eval(const YoungFunction& phi, double t);

// inf{ t >= 0 : phi(t) > u }, with phi^{-1}(inf) = inf. Uses the evaluator's
// own inverse when it has one, otherwise an expanding bracket refined to the
// given relative tolerance whose lower end is returned, so phi(t) <= u.
double gen_inverse(const YoungFunction& phi, double u, double rel_tol = 1e-12);

// phi^{-1}(1/t)^{-1}, the fundamental weight of the Orlicz-Lorentz scale.
double fundamental_weight(const YoungFunction& phi, double t);

}  // namespace orlicz
