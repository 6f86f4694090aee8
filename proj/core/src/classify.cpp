#include "orlicz/classify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace orlicz {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no:
      return "no";
    case Verdict::yes:
      return "yes";
    case Verdict::unknown:
      break;
  }
  return "unknown";
}

nlohmann::json ClassifyResult::to_json() const {
  auto flag = [](Verdict v) -> nlohmann::json {
    if (v == Verdict::unknown) return "unknown";
    return v == Verdict::yes;
  };
  auto witness = [](const std::optional<double>& k) -> nlohmann::json {
    if (!k) return nullptr;
    return *k;
  };
  nlohmann::json out;
  out["delta2"] = flag(delta2);
  out["delta2_witness"] = witness(delta2_witness);
  out["nabla2"] = flag(nabla2);
  out["nabla2_witness"] = witness(nabla2_witness);
  out["p_plus"] = std::isfinite(p_plus) ? nlohmann::json(p_plus) : nlohmann::json("inf");
  out["p_minus"] = p_minus;
  return out;
}

namespace {

std::vector<double> log_grid(const ClassifyOptions& o) {
  const double decades = std::log10(o.t_max / o.t_min);
  const int n = static_cast<int>(std::lround(decades * o.points_per_decade));
  std::vector<double> grid(n + 1);
  for (int i = 0; i <= n; ++i) {
    grid[i] = o.t_min * std::pow(10.0, decades * i / n);
  }
  return grid;
}

// Golden-section refinement of a maximum of f bracketed by [lo, hi].
template <class F>
double refine_max(const F& f, double lo, double hi, double best) {
  constexpr double g = 0.6180339887498949;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-13 * hi; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

}  // namespace

ClassifyResult classify(const YoungFunction& phi, const ClassifyOptions& opts) {
  const std::vector<double> grid = log_grid(opts);
  const double a = phi.a();
  const double b = phi.b();

  // Elasticity on the part of the grid where phi is positive and finite.
  std::vector<double> ts;
  std::vector<double> es;
  for (double t : grid) {
    if (!(t > a && t <= b)) continue;
    const double e = phi.elasticity(t);
    if (!std::isfinite(e)) continue;
    ts.push_back(t);
    es.push_back(e);
  }

  ClassifyResult out;
  if (es.empty()) return out;

  const auto [min_it, max_it] = std::minmax_element(es.begin(), es.end());
  const double e_min = *min_it;
  const double e_max = *max_it;

  // An extreme attained within the last decade of either end is only trusted
  // if the elasticity has stopped moving there.
  const std::size_t window = static_cast<std::size_t>(opts.points_per_decade);
  auto settled = [&](std::size_t idx) {
    if (es.size() <= window) return true;
    if (idx >= window && idx + window < es.size()) return true;
    const std::size_t other = idx < window ? idx + window : idx - window;
    return std::abs(es[idx] - es[other]) <= opts.stability_tol;
  };
  const std::size_t imin = static_cast<std::size_t>(min_it - es.begin());
  const std::size_t imax = static_cast<std::size_t>(max_it - es.begin());

  const bool analytic_inf = a > 0.0 || std::isfinite(b);
  const bool elastic_inf = e_max > opts.infinite_elasticity;
  out.p_plus = (analytic_inf || elastic_inf) ? kInf : e_max;
  out.p_minus = std::max(1.0, e_min);

  if (analytic_inf || elastic_inf) {
    out.delta2 = Verdict::no;
  } else {
    out.delta2 = settled(imax) ? Verdict::yes : Verdict::unknown;
  }
  if (out.p_minus <= 1.0 + opts.index_tol) {
    out.nabla2 = settled(imin) ? Verdict::no : Verdict::unknown;
  } else {
    out.nabla2 = settled(imin) ? Verdict::yes : Verdict::unknown;
  }

  if (out.delta2 == Verdict::yes) {
    auto ratio = [&](double r) {
      const double v = phi(r);
      return v > 0.0 ? phi(2.0 * r) / v : 0.0;
    };
    double best = 0.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double q = ratio(grid[i]);
      if (q > best) {
        best = q;
        arg = i;
      }
    }
    const double lo = grid[arg > 0 ? arg - 1 : 0];
    const double hi = grid[std::min(arg + 1, grid.size() - 1)];
    best = refine_max(ratio, lo, hi, best);
    // The index bound phi(2r) <= 2^{p_+} phi(r) covers the unsampled tails.
    best = std::max(best, std::pow(2.0, out.p_plus));
    out.delta2_witness = best * (1.0 + 1e-9);
  }

  if (out.nabla2 == Verdict::yes) {
    const double k0 = std::pow(2.0, 1.0 / (out.p_minus - 1.0));
    for (int j = 0; j <= 64 && !out.nabla2_witness; ++j) {
      const double k = k0 * std::pow(2.0, j / 8.0);
      bool ok = true;
      for (double r : grid) {
        const double v = phi(r);
        if (v == 0.0) continue;
        if (phi(k * r) < 2.0 * k * v * (1.0 + 1e-9)) {
          ok = false;
          break;
        }
      }
      if (ok) out.nabla2_witness = k;
    }
    if (!out.nabla2_witness) out.nabla2 = Verdict::unknown;
  }
  return out;
}

}  // namespace orlicz
