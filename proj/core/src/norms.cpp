#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "orlicz/errors.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

std::string to_string(NormMethod m) {
  return m == NormMethod::exact ? "exact" : "bisection+quadrature";
}

namespace {

nlohmann::json ext_json(double x) {
  if (is_inf(x)) return "inf";
  return x;
}

// Smallest log10(t) at which weights are evaluated.
constexpr double kTinyT = 1e-300;

NormResult infinite(NormMethod m) { return {kInf, kInf, kInf, m}; }

// inf{ lambda > 0 : g(lambda) <= 1 } for a non-increasing g that exceeds 1
// near 0 and tends to 0 at infinity. Bisection on log(lambda).
template <class G>
NormResult bisect_scale(const G& g, double start, double tol) {
  double lo;
  double hi;
  if (g(start) <= 1.0) {
    hi = start;
    lo = 0.5 * start;
    while (g(lo) <= 1.0) {
      hi = lo;
      lo *= 0.5;
      if (lo < std::numeric_limits<double>::min()) return {0.0, 0.0, hi, NormMethod::bisection_quadrature};
    }
  } else {
    lo = start;
    hi = 2.0 * start;
    while (g(hi) > 1.0) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) return infinite(NormMethod::bisection_quadrature);
    }
  }
  while (hi / lo - 1.0 > tol) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (!(mid > lo && mid < hi)) break;
    if (g(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {std::sqrt(lo) * std::sqrt(hi), lo, hi, NormMethod::bisection_quadrature};
}

NormResult luxemburg_of_indicator(const YoungFunction& phi, double measure, const NormOptions& opts) {
  return bisect_scale([&](double lambda) { return ext_mul(phi(1.0 / lambda), measure); }, 1.0,
                      opts.bisection_tol);
}

}  // namespace

nlohmann::json NormResult::to_json() const {
  return {{"value", ext_json(value)},
          {"lower", ext_json(lower)},
          {"upper", ext_json(upper)},
          {"method", to_string(method)}};
}

WeightFunction power_weight(double exponent) {
  WeightFunction w;
  w.eval = [exponent](double t) { return std::pow(t, exponent); };
  w.label = "t^" + nlohmann::json(exponent).dump();
  w.non_decreasing = exponent >= 0.0;
  return w;
}

WeightFunction orlicz_weight(const YoungFunction& phi) {
  WeightFunction w;
  w.eval = [phi](double t) { return fundamental_weight(phi, t); };
  w.label = "1/inv(" + phi.label() + ")(1/t)";
  w.non_decreasing = true;
  return w;
}

NormResult luxemburg_norm(const YoungFunction& phi, const MeasureStepFunction& f,
                          const NormOptions& opts) {
  f.validate();
  if (f.is_zero()) return NormResult::exact(0.0);
  auto modular = [&](double lambda) {
    double acc = 0.0;
    for (const Cell& c : f.cells) {
      acc = ext_add(acc, ext_mul(phi(c.value / lambda), c.measure));
      if (is_inf(acc)) break;
    }
    return acc;
  };
  return bisect_scale(modular, f.max_value(), opts.bisection_tol);
}

NormResult weak_orlicz_norm(const YoungFunction& phi, const MeasureStepFunction& f,
                            const NormOptions& opts) {
  f.validate();
  const RearrangementStep g = rearrangement(f);
  if (g.empty()) return NormResult::exact(0.0);
  // sup_t Phi(t) m(f/lambda, t) is attained as t increases to a level v_j/lambda,
  // where m(f/lambda, .) equals |{ |f| >= v_j }|.
  auto inner = [&](double lambda) {
    double best = 0.0;
    for (std::size_t j = 0; j < g.pieces(); ++j) {
      best = std::max(best, ext_mul(phi(g.values[j] / lambda), g.breakpoints[j + 1]));
      if (is_inf(best)) break;
    }
    return best;
  };
  return bisect_scale(inner, g.values.front(), opts.bisection_tol);
}

NormResult orlicz_lorentz_inf(const YoungFunction& phi, const MeasureStepFunction& f) {
  f.validate();
  const RearrangementStep g = rearrangement(f);
  double best = 0.0;
  for (std::size_t j = 0; j < g.pieces(); ++j) {
    best = std::max(best, ext_mul(g.values[j], fundamental_weight(phi, g.breakpoints[j + 1])));
  }
  return NormResult::exact(best);
}

WeakNorms weak_norm_family(const YoungFunction& phi, const MeasureStepFunction& f,
                           const NormOptions& opts) {
  WeakNorms out;
  out.wL = weak_orlicz_norm(phi, f, opts);

  const RearrangementStep g = rearrangement(f);
  if (g.empty()) {
    out.WL = NormResult::exact(0.0);
  } else {
    // t ||chi_{|f|>t}|| increases on each interval [v_{j+1}, v_j); its sup
    // there is v_j times the norm of the indicator of { |f| >= v_j }.
    NormResult acc{0.0, 0.0, 0.0, NormMethod::bisection_quadrature};
    for (std::size_t j = 0; j < g.pieces(); ++j) {
      const NormResult chi = luxemburg_of_indicator(phi, g.breakpoints[j + 1], opts);
      acc.value = std::max(acc.value, ext_mul(g.values[j], chi.value));
      acc.lower = std::max(acc.lower, ext_mul(g.values[j], chi.lower));
      acc.upper = std::max(acc.upper, ext_mul(g.values[j], chi.upper));
    }
    out.WL = acc;
  }
  out.Linf = orlicz_lorentz_inf(phi, f);
  return out;
}

NormResult generalized_lorentz_norm(const WeightFunction& w, double q, const RearrangementStep& g,
                                    const NormOptions& opts) {
  if (std::isnan(q) || !(q > 0.0)) throw DomainError("Lorentz exponent q must be positive");
  if (g.empty()) return NormResult::exact(0.0);

  if (is_inf(q)) {
    double best = 0.0;
    if (w.non_decreasing) {
      for (std::size_t j = 0; j < g.pieces(); ++j) {
        best = std::max(best, ext_mul(g.values[j], w(g.breakpoints[j + 1])));
      }
      return NormResult::exact(best);
    }
    // Sampled supremum on a log grid of each piece (the first piece reaches
    // down to 1e-30 of its length).
    constexpr int kSamples = 64;
    for (std::size_t j = 0; j < g.pieces(); ++j) {
      const double hi = g.breakpoints[j + 1];
      const double lo = j == 0 ? hi * 1e-30 : g.breakpoints[j];
      for (int i = 0; i <= kSamples; ++i) {
        double t = lo * std::pow(hi / lo, static_cast<double>(i) / kSamples);
        if (i == kSamples) t = std::nextafter(hi, 0.0);
        best = std::max(best, ext_mul(g.values[j], w(t)));
      }
    }
    return {best, best, best, NormMethod::bisection_quadrature};
  }

  // sum_j (c_j / c_1)^q int_{t_j}^{t_{j+1}} w(t)^q dt/t, in log t.
  const double c1 = g.values.front();
  double sum = 0.0;
  double err = 0.0;
  for (std::size_t j = 0; j < g.pieces(); ++j) {
    const double hi = g.breakpoints[j + 1];
    const double weight = std::pow(g.values[j] / c1, q);
    double piece;
    double piece_err;
    if (j == 0) {
      auto h = [&](double s) { return std::pow(w(hi * std::exp(-s)), q); };
      const double s_max = std::log(hi / kTinyT);
      const TailResult r = integrate_tail(h, s_max, opts.quad_tol);
      if (r.diverged) return infinite(NormMethod::bisection_quadrature);
      piece = r.value;
      piece_err = r.error;
    } else {
      auto h = [&](double u) { return std::pow(w(std::exp(u)), q); };
      const QuadResult r = integrate(h, std::log(g.breakpoints[j]), std::log(hi), opts.quad_tol);
      if (is_inf(r.value)) return infinite(NormMethod::bisection_quadrature);
      piece = r.value;
      piece_err = r.error;
    }
    sum += weight * piece;
    err += weight * piece_err;
  }
  if (!std::isfinite(sum)) return infinite(NormMethod::bisection_quadrature);
  const double inv_q = 1.0 / q;
  return {c1 * std::pow(sum, inv_q), c1 * std::pow(std::max(sum - err, 0.0), inv_q),
          c1 * std::pow(sum + err, inv_q), NormMethod::bisection_quadrature};
}

NormResult generalized_lorentz_norm(const WeightFunction& w, double q, const MeasureStepFunction& f,
                                    const NormOptions& opts) {
  f.validate();
  return generalized_lorentz_norm(w, q, rearrangement(f), opts);
}

NormResult lorentz_norm(const YoungFunction& phi, double q, const RearrangementStep& g,
                        const NormOptions& opts) {
  return generalized_lorentz_norm(orlicz_weight(phi), q, g, opts);
}

NormResult lorentz_norm(const YoungFunction& phi, double q, const MeasureStepFunction& f,
                        const NormOptions& opts) {
  f.validate();
  return lorentz_norm(phi, q, rearrangement(f), opts);
}

CharNormBounds char_norm_bounds(const YoungFunction& phi, double q, double e_measure,
                                const NormOptions& opts) {
  if (!(e_measure > 0.0) || !std::isfinite(e_measure)) {
    throw DomainError("indicator needs a set of finite positive measure");
  }
  CharNormBounds out;
  out.closed_form = fundamental_weight(phi, e_measure);
  out.lower = is_inf(q) ? out.closed_form : std::pow(q, -1.0 / q) * out.closed_form;
  MeasureStepFunction chi;
  chi.cells.push_back({1.0, e_measure});
  out.computed = lorentz_norm(phi, q, chi, opts);
  return out;
}

}  // namespace orlicz
