#include "orlicz/rearrange.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

void MeasureStepFunction::validate() const {
  if (ambient_dim < 1) throw PreconditionError("ambient dimension must be positive");
  for (const Cell& c : cells) {
    if (!std::isfinite(c.value) || c.value < 0.0) {
      throw PreconditionError("step function values must be finite and non-negative");
    }
    if (!std::isfinite(c.measure) || !(c.measure > 0.0)) {
      throw PreconditionError("cell measures must be finite and positive");
    }
  }
}

double MeasureStepFunction::total_measure() const {
  double m = 0.0;
  for (const Cell& c : cells) m += c.measure;
  return m;
}

double MeasureStepFunction::max_value() const {
  double v = 0.0;
  for (const Cell& c : cells) v = std::max(v, c.value);
  return v;
}

bool MeasureStepFunction::is_zero() const { return max_value() == 0.0; }

MeasureStepFunction MeasureStepFunction::scaled(double c) const {
  MeasureStepFunction out = *this;
  for (Cell& cell : out.cells) cell.value *= c;
  return out;
}

MeasureStepFunction MeasureStepFunction::dilated(double s) const {
  MeasureStepFunction out = *this;
  for (Cell& cell : out.cells) cell.measure *= s;
  return out;
}

double RearrangementStep::operator()(double t) const {
  if (t < 0.0) throw DomainError("rearrangement evaluated at negative t");
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  const auto j = static_cast<std::size_t>(it - breakpoints.begin());
  return j <= values.size() ? values[j - 1] : 0.0;
}

double RearrangementStep::level_measure(double lambda) const {
  // values are strictly decreasing; count those above lambda.
  const auto it = std::partition_point(values.begin(), values.end(),
                                       [lambda](double v) { return v > lambda; });
  return breakpoints[static_cast<std::size_t>(it - values.begin())];
}

double RearrangementStep::integral(double t) const {
  double acc = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double lo = breakpoints[j];
    if (t <= lo) break;
    acc += values[j] * (std::min(t, breakpoints[j + 1]) - lo);
  }
  return acc;
}

void GridFunction1D::validate() const {
  if (!std::isfinite(origin)) throw PreconditionError("grid origin must be finite");
  if (!std::isfinite(cell_width) || !(cell_width > 0.0)) {
    throw PreconditionError("grid cell width must be finite and positive");
  }
  for (double v : samples) {
    if (!std::isfinite(v) || v < 0.0) {
      throw PreconditionError("grid samples must be finite and non-negative");
    }
  }
}

MeasureStepFunction GridFunction1D::to_step() const {
  MeasureStepFunction f;
  for (double v : samples) {
    if (v > 0.0) f.cells.push_back({v, cell_width});
  }
  return f;
}

double distribution(const MeasureStepFunction& f, double t) {
  if (std::isnan(t) || t < 0.0) throw DomainError("distribution function at negative level");
  double m = 0.0;
  for (const Cell& c : f.cells) {
    if (c.value > t) m += c.measure;
  }
  return m;
}

RearrangementStep rearrangement(const MeasureStepFunction& f) {
  std::vector<Cell> cells;
  cells.reserve(f.cells.size());
  for (const Cell& c : f.cells) {
    if (c.value > 0.0) cells.push_back(c);
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& x, const Cell& y) { return x.value > y.value; });
  RearrangementStep g;
  double t = 0.0;
  for (std::size_t i = 0; i < cells.size();) {
    const double v = cells[i].value;
    double m = 0.0;
    for (; i < cells.size() && cells[i].value == v; ++i) m += cells[i].measure;
    t += m;
    g.values.push_back(v);
    g.breakpoints.push_back(t);
  }
  return g;
}

RearrangementStep rearrangement(const GridFunction1D& f) { return rearrangement(f.to_step()); }

MeasureStepFunction radial_profile_nd(const RearrangementStep& g, int n) {
  if (n < 1) throw PreconditionError("radial profile needs a positive dimension");
  MeasureStepFunction f;
  f.ambient_dim = n;
  for (std::size_t j = 0; j < g.values.size(); ++j) {
    if (j > 0 && !(g.values[j] <= g.values[j - 1])) {
      throw PreconditionError("radial profile needs a non-increasing g");
    }
    const double gap = g.breakpoints[j + 1] - g.breakpoints[j];
    if (g.values[j] > 0.0 && gap > 0.0) f.cells.push_back({g.values[j], gap});
  }
  return f;
}

double averaged_rearrangement(const RearrangementStep& fstar, double t) {
  if (std::isnan(t) || !(t > 0.0)) throw DomainError("averaged rearrangement needs t > 0");
  return fstar.integral(t) / t;
}

double averaged_rearrangement(const MeasureStepFunction& f, double t) {
  return averaged_rearrangement(rearrangement(f), t);
}

double rearranged_pairing(const RearrangementStep& f, const RearrangementStep& g) {
  double acc = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  double t = 0.0;
  while (i < f.pieces() && j < g.pieces()) {
    const double end = std::min(f.breakpoints[i + 1], g.breakpoints[j + 1]);
    acc += f.values[i] * g.values[j] * (end - t);
    t = end;
    if (f.breakpoints[i + 1] == end) ++i;
    if (g.breakpoints[j + 1] == end) ++j;
  }
  return acc;
}

}  // namespace orlicz
