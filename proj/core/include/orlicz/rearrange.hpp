#pragma once

#include <cstddef>
#include <vector>

namespace orlicz {

struct Cell {
  double value = 0.0;    // >= 0
  double measure = 0.0;  // > 0
};

// A simple function: finitely many values on sets of finite measure. Cell
// order carries no meaning. ambient_dim only matters for radial profiles.
struct MeasureStepFunction {
  std::vector<Cell> cells;
  int ambient_dim = 1;

  // Throws PreconditionError on negative or non-finite values and on
  // non-positive or non-finite measures.
  void validate() const;
  double total_measure() const;
  double max_value() const;
  bool is_zero() const;

  MeasureStepFunction scaled(double c) const;    // c f, c >= 0
  MeasureStepFunction dilated(double s) const;   // every measure times s
};

// Right-continuous non-increasing step function on (0, inf): value
// values[j] on [breakpoints[j], breakpoints[j+1]), zero from
// breakpoints.back() on. breakpoints[0] == 0; values strictly decrease and
// are positive.
struct RearrangementStep {
  std::vector<double> breakpoints{0.0};
  std::vector<double> values;

  std::size_t pieces() const { return values.size(); }
  double support() const { return breakpoints.back(); }
  bool empty() const { return values.empty(); }

  double operator()(double t) const;
  // |{ s : g(s) > lambda }| = sup{ s : g(s) > lambda }.
  double level_measure(double lambda) const;
  // Exact int_0^t g(s) ds.
  double integral(double t) const;
};

// Piecewise-constant function on [origin, origin + width * n) with one sample
// per cell, zero outside.
struct GridFunction1D {
  double origin = 0.0;
  double cell_width = 1.0;
  std::vector<double> samples;

  void validate() const;
  std::size_t size() const { return samples.size(); }
  double left(std::size_t i) const { return origin + cell_width * static_cast<double>(i); }
  double midpoint(std::size_t i) const { return left(i) + 0.5 * cell_width; }
  MeasureStepFunction to_step() const;
};

// m(f, t) = |{ |f| > t }|; DomainError for t < 0.
double distribution(const MeasureStepFunction& f, double t);

// f^*, exact: distinct values sorted downwards with their measures
// accumulated. Equal values merge; zero cells drop out.
RearrangementStep rearrangement(const MeasureStepFunction& f);
RearrangementStep rearrangement(const GridFunction1D& f);

// The function x -> g(nu_n |x|^n) on R^n as shells; the shell where g takes
// values[j] has measure breakpoints[j+1] - breakpoints[j] whatever n is.
MeasureStepFunction radial_profile_nd(const RearrangementStep& g, int n);

// f^{**}(t) = (1/t) int_0^t f^*(s) ds; DomainError for t <= 0.
double averaged_rearrangement(const MeasureStepFunction& f, double t);
double averaged_rearrangement(const RearrangementStep& fstar, double t);

// int_0^inf f^*(t) g^*(t) dt, exact.
double rearranged_pairing(const RearrangementStep& f, const RearrangementStep& g);

}  // namespace orlicz
