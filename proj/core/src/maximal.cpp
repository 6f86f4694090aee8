#include "orlicz/maximal.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

namespace {

constexpr double kTinyT = 1e-300;
constexpr double kHugeT = 1e300;

// Work in cell units: cell m covers [m, m+1], so averages do not depend on
// origin or width.
std::vector<double> prefix_sums(const std::vector<double>& v) {
  std::vector<double> s(v.size() + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) s[i + 1] = s[i] + v[i];
  return s;
}

std::vector<double> maximal_exact(const std::vector<double>& f) {
  const std::size_t n = f.size();
  const std::vector<double> s = prefix_sums(f);
  std::vector<double> m(f);

  // Intervals [i, j] with both ends on breakpoints, i <= k < j.
  for (std::size_t i = 0; i < n; ++i) {
    double best = 0.0;
    for (std::size_t j = n; j > i; --j) {
      best = std::max(best, (s[j] - s[i]) / static_cast<double>(j - i));
      // best is now max over j' >= j, i.e. over intervals that contain cell
      // k = j - 1.
      m[j - 1] = std::max(m[j - 1], best);
    }
  }
  // One end at the evaluation point k + 1/2.
  for (std::size_t k = 0; k < n; ++k) {
    const double half = 0.5 * f[k];
    for (std::size_t j = k + 1; j <= n; ++j) {
      m[k] = std::max(m[k], (half + s[j] - s[k + 1]) / (static_cast<double>(j - k) - 0.5));
    }
    for (std::size_t i = 0; i <= k; ++i) {
      m[k] = std::max(m[k], (s[k] - s[i] + half) / (static_cast<double>(k - i) + 0.5));
    }
  }
  return m;
}

// Integral of the cell-unit step function over [l, r] by direct summation.
double direct_integral(const std::vector<double>& f, double l, double r) {
  double acc = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    const double lo = std::max(l, static_cast<double>(m));
    const double hi = std::min(r, static_cast<double>(m + 1));
    if (hi > lo) acc += f[m] * (hi - lo);
  }
  return acc;
}

std::vector<double> maximal_oracle(const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<double> m(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = static_cast<double>(k) + 0.5;
    std::vector<double> lefts{x};
    for (std::size_t i = 0; i <= k; ++i) lefts.push_back(static_cast<double>(i));
    std::vector<double> rights{x};
    for (std::size_t j = k + 1; j <= n; ++j) rights.push_back(static_cast<double>(j));
    double best = f[k];
    for (double l : lefts) {
      for (double r : rights) {
        if (r > l) best = std::max(best, direct_integral(f, l, r) / (r - l));
      }
    }
    m[k] = best;
  }
  return m;
}

void check_same_geometry(const std::vector<GridFunction1D>& fs) {
  for (const GridFunction1D& g : fs) {
    if (g.size() != fs.front().size() || g.origin != fs.front().origin ||
        g.cell_width != fs.front().cell_width) {
      throw PreconditionError("vector members must share their grid geometry");
    }
  }
}

void check_q(double q) {
  if (std::isnan(q) || !(q > 0.0)) throw DomainError("aggregate exponent q must be positive");
}

template <class Grid>
void aggregate_into(std::vector<double>& acc, const Grid& g, double q) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (is_inf(q)) {
      acc[i] = std::max(acc[i], g.samples[i]);
    } else {
      acc[i] += std::pow(g.samples[i], q);
    }
  }
}

void finish_aggregate(std::vector<double>& acc, double q) {
  if (is_inf(q)) return;
  for (double& v : acc) v = std::pow(v, 1.0 / q);
}

}  // namespace

GridFunction1D maximal_1d(const GridFunction1D& f, MaximalMode mode) {
  f.validate();
  GridFunction1D out = f;
  if (f.samples.empty()) return out;
  out.samples = mode == MaximalMode::exact ? maximal_exact(f.samples) : maximal_oracle(f.samples);
  return out;
}

double maximal_1d_at(const GridFunction1D& f, double x) {
  f.validate();
  const std::size_t n = f.size();
  const double u = (x - f.origin) / f.cell_width;
  const std::vector<double> s = prefix_sums(f.samples);
  auto primitive = [&](double y) {
    if (y <= 0.0) return 0.0;
    if (y >= static_cast<double>(n)) return s[n];
    const auto m = static_cast<std::size_t>(std::floor(y));
    return s[m] + f.samples[m] * (y - static_cast<double>(m));
  };
  double best = 0.0;
  if (u >= 0.0 && u < static_cast<double>(n)) best = f.samples[static_cast<std::size_t>(std::floor(u))];
  std::vector<double> lefts{u};
  std::vector<double> rights{u};
  for (std::size_t i = 0; i <= n; ++i) {
    const double b = static_cast<double>(i);
    if (b <= u) lefts.push_back(b);
    if (b >= u) rights.push_back(b);
  }
  for (double l : lefts) {
    for (double r : rights) {
      if (r > l) best = std::max(best, (primitive(r) - primitive(l)) / (r - l));
    }
  }
  return best;
}

void GridFieldND::validate() const {
  if (dim < 1 || dim > 3) throw PreconditionError("grid fields support dimensions 1 to 3");
  if (side == 0 || (side & (side - 1)) != 0) {
    throw PreconditionError("grid field side must be a power of two");
  }
  if (!std::isfinite(cell_volume) || !(cell_volume > 0.0)) {
    throw PreconditionError("cell volume must be finite and positive");
  }
  std::size_t expected = 1;
  for (int d = 0; d < dim; ++d) expected *= side;
  if (samples.size() != expected) {
    throw PreconditionError("grid field has " + std::to_string(samples.size()) +
                            " samples, expected " + std::to_string(expected));
  }
  for (double v : samples) {
    if (!std::isfinite(v) || v < 0.0) {
      throw PreconditionError("grid field samples must be finite and non-negative");
    }
  }
}

MeasureStepFunction GridFieldND::to_step() const {
  MeasureStepFunction f;
  f.ambient_dim = dim;
  for (double v : samples) {
    if (v > 0.0) f.cells.push_back({v, cell_volume});
  }
  return f;
}

GridFieldND to_field(const GridFunction1D& f) {
  GridFieldND g;
  g.dim = 1;
  g.side = f.size();
  g.cell_volume = f.cell_width;
  g.samples = f.samples;
  g.validate();
  return g;
}

GridFieldND dyadic_maximal(const GridFieldND& f) {
  f.validate();
  const int d = f.dim;
  // averages[s] holds the means over blocks of 2^s cells per axis.
  std::vector<std::vector<double>> averages{f.samples};
  std::vector<std::size_t> sides{f.side};
  while (sides.back() > 1) {
    const std::size_t child_side = sides.back();
    const std::size_t side = child_side / 2;
    std::size_t count = 1;
    for (int k = 0; k < d; ++k) count *= side;
    std::vector<double> next(count, 0.0);
    const std::vector<double>& child = averages.back();
    for (std::size_t idx = 0; idx < child.size(); ++idx) {
      std::size_t rest = idx;
      std::size_t parent = 0;
      std::size_t stride = 1;
      for (int k = 0; k < d; ++k) {
        const std::size_t coord = rest % child_side;
        rest /= child_side;
        parent += (coord / 2) * stride;
        stride *= side;
      }
      next[parent] += child[idx];
    }
    const double children = std::pow(2.0, d);
    for (double& v : next) v /= children;
    averages.push_back(std::move(next));
    sides.push_back(side);
  }
  // Top-down: best over the ancestors of each block.
  std::vector<double> best = averages.back();
  for (std::size_t level = averages.size() - 1; level-- > 0;) {
    const std::size_t side = sides[level];
    const std::size_t parent_side = sides[level + 1];
    std::vector<double> cur(averages[level].size());
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      std::size_t rest = idx;
      std::size_t parent = 0;
      std::size_t stride = 1;
      for (int k = 0; k < d; ++k) {
        const std::size_t coord = rest % side;
        rest /= side;
        parent += (coord / 2) * stride;
        stride *= parent_side;
      }
      cur[idx] = std::max(averages[level][idx], best[parent]);
    }
    best = std::move(cur);
  }
  GridFieldND out = f;
  out.samples = std::move(best);
  return out;
}

GridFunction1D vector_maximal(const std::vector<GridFunction1D>& fs, double q, MaximalMode mode) {
  check_q(q);
  if (fs.empty()) throw PreconditionError("vector maximal needs at least one member");
  check_same_geometry(fs);
  GridFunction1D out = fs.front();
  std::vector<double> acc(out.size(), 0.0);
  for (const GridFunction1D& g : fs) aggregate_into(acc, maximal_1d(g, mode), q);
  finish_aggregate(acc, q);
  out.samples = std::move(acc);
  return out;
}

GridFieldND vector_maximal(const std::vector<GridFieldND>& fs, double q) {
  check_q(q);
  if (fs.empty()) throw PreconditionError("vector maximal needs at least one member");
  for (const GridFieldND& g : fs) {
    if (g.dim != fs.front().dim || g.side != fs.front().side ||
        g.cell_volume != fs.front().cell_volume) {
      throw PreconditionError("vector members must share their grid geometry");
    }
  }
  GridFieldND out = fs.front();
  std::vector<double> acc(out.size(), 0.0);
  for (const GridFieldND& g : fs) aggregate_into(acc, dyadic_maximal(g), q);
  finish_aggregate(acc, q);
  out.samples = std::move(acc);
  return out;
}

GridFunction1D lq_aggregate(const std::vector<GridFunction1D>& fs, double q) {
  check_q(q);
  if (fs.empty()) throw PreconditionError("aggregate needs at least one member");
  check_same_geometry(fs);
  GridFunction1D out = fs.front();
  std::vector<double> acc(out.size(), 0.0);
  for (const GridFunction1D& g : fs) aggregate_into(acc, g, q);
  finish_aggregate(acc, q);
  out.samples = std::move(acc);
  return out;
}

CriterionResult weight_criterion_q(const WeightFunction& w, double q,
                                   const std::vector<double>& r_grid, double rel_tol) {
  if (std::isnan(q) || !(q > 0.0) || is_inf(q)) throw DomainError("criterion exponent must be finite and positive");
  CriterionResult out;
  for (double r : r_grid) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("criterion grid must be positive");
    // t = r e^s on the left, t = r e^{-s} on the right.
    auto left = [&](double s) {
      const double t = r * std::exp(s);
      return std::pow(w(t) / t, q);
    };
    auto right = [&](double s) { return std::pow(w(r * std::exp(-s)), q); };
    const TailResult l = integrate_tail(left, std::log(kHugeT / r), rel_tol);
    const TailResult rr = integrate_tail(right, std::log(r / kTinyT), rel_tol);
    CriterionPoint p;
    p.r = r;
    p.lhs = l.diverged ? kInf : l.value;
    p.rhs = rr.diverged ? kInf : std::pow(r, -q) * rr.value;
    if (is_inf(p.lhs)) {
      p.ratio = kInf;
    } else if (is_inf(p.rhs)) {
      p.ratio = 0.0;
    } else {
      p.ratio = p.lhs / p.rhs;
    }
    out.sup_ratio = std::max(out.sup_ratio, p.ratio);
    out.per_r.push_back(p);
  }
  return out;
}

double weight_criterion_inf(const WeightFunction& w, const std::vector<double>& t_grid,
                            double rel_tol) {
  if (t_grid.empty()) return 0.0;
  const double t_top = *std::max_element(t_grid.begin(), t_grid.end());

  // Running supremum of w on a log refinement grid, 64 points per decade.
  std::vector<double> nodes;
  std::vector<double> runmax;
  if (!w.non_decreasing) {
    const double lo = std::log10(kTinyT);
    const double hi = std::log10(t_top);
    const int n = static_cast<int>(std::ceil((hi - lo) * 64.0));
    double m = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double tau = std::pow(10.0, lo + (hi - lo) * i / n);
      m = std::max(m, w(tau));
      nodes.push_back(tau);
      runmax.push_back(m);
    }
  }
  auto psi = [&](double s) {
    if (w.non_decreasing) return w(s);
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
    double m = w(s);
    if (it != nodes.begin()) m = std::max(m, runmax[static_cast<std::size_t>(it - nodes.begin()) - 1]);
    return m;
  };

  double best = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("criterion grid must be positive");
    auto h = [&](double u) {
      const double s = t * std::exp(-u);
      return s / psi(s);
    };
    const TailResult r = integrate_tail(h, std::log(t / kTinyT), rel_tol);
    if (r.diverged) return kInf;
    best = std::max(best, w(t) / t * r.value);
  }
  return best;
}

std::vector<std::pair<double, double>> herz_ratio(const GridFunction1D& f,
                                                  const std::vector<double>& t_grid) {
  f.validate();
  const RearrangementStep fstar = rearrangement(f);
  if (fstar.empty()) throw DomainError("Herz ratio is undefined for the zero function");
  const RearrangementStep mstar = rearrangement(maximal_1d(f));
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    out.emplace_back(t, mstar(t) / averaged_rearrangement(fstar, t));
  }
  return out;
}

}  // namespace orlicz
