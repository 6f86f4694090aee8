#pragma once

#include <cmath>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "orlicz/rearrange.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class NormMethod { exact, bisection_quadrature };

std::string to_string(NormMethod m);

// value with an enclosing interval [lower, upper]. For exact results the
// interval collapses to the value.
struct NormResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  NormMethod method = NormMethod::exact;

  static NormResult exact(double v) { return {v, v, v, NormMethod::exact}; }
  bool is_finite() const { return std::isfinite(value); }
  // {"value":..,"lower":..,"upper":..,"method":..}; +inf is written as "inf".
  nlohmann::json to_json() const;
};

struct NormOptions {
  double bisection_tol = 1e-10;  // relative, on lambda
  double quad_tol = 1e-8;        // relative, per rearrangement piece
};

// Positive weight on (0, inf).
struct WeightFunction {
  std::function<double(double)> eval;
  std::string label;
  // Set for weights of the form Phi^{-1}(1/t)^{-1}; allows exact suprema.
  bool non_decreasing = false;

  double operator()(double t) const { return eval(t); }
};

WeightFunction power_weight(double exponent);          // t^exponent
WeightFunction orlicz_weight(const YoungFunction& phi); // Phi^{-1}(1/t)^{-1}

// inf{ lambda > 0 : sum_i Phi(v_i / lambda) mu_i <= 1 }.
NormResult luxemburg_norm(const YoungFunction& phi, const MeasureStepFunction& f,
                          const NormOptions& opts = {});

struct WeakNorms {
  NormResult wL;    // inf{ lambda : sup_t Phi(t) m(f/lambda, t) <= 1 }
  NormResult WL;    // sup_t t ||chi_{|f|>t}||_{L^Phi}
  NormResult Linf;  // sup_t Phi^{-1}(1/t)^{-1} f^*(t)
};
WeakNorms weak_norm_family(const YoungFunction& phi, const MeasureStepFunction& f,
                           const NormOptions& opts = {});

// Individual members of the family.
NormResult weak_orlicz_norm(const YoungFunction& phi, const MeasureStepFunction& f,
                            const NormOptions& opts = {});
NormResult orlicz_lorentz_inf(const YoungFunction& phi, const MeasureStepFunction& f);

// ( int_0^inf [ w(t) f^*(t) ]^q dt/t )^{1/q} for 0 < q < inf and
// sup_t w(t) f^*(t) for q = inf. Divergence at t -> 0 gives +inf.
NormResult generalized_lorentz_norm(const WeightFunction& w, double q,
                                    const MeasureStepFunction& f,
                                    const NormOptions& opts = {});
NormResult generalized_lorentz_norm(const WeightFunction& w, double q,
                                    const RearrangementStep& fstar,
                                    const NormOptions& opts = {});

// L^{Phi,q}; q may be +inf.
NormResult lorentz_norm(const YoungFunction& phi, double q, const MeasureStepFunction& f,
                        const NormOptions& opts = {});
NormResult lorentz_norm(const YoungFunction& phi, double q, const RearrangementStep& fstar,
                        const NormOptions& opts = {});

struct CharNormBounds {
  double lower = 0.0;        // q^{-1/q} Phi^{-1}(1/|E|)^{-1}
  double closed_form = 0.0;  // Phi^{-1}(1/|E|)^{-1}
  NormResult computed;       // ||chi_E||_{L^{Phi,q}} by quadrature
};
CharNormBounds char_norm_bounds(const YoungFunction& phi, double q, double e_measure,
                                const NormOptions& opts = {});

}  // namespace orlicz
