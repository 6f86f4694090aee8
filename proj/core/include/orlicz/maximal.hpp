#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/rearrange.hpp"

namespace orlicz {

enum class MaximalMode { exact, oracle };

// Uncentered Hardy-Littlewood maximal function of f, sampled at the cell
// midpoints of f's own grid (pad f with zeros to see further out). exact uses
// prefix sums and a 2-D running maximum, O(N^2); oracle sums every candidate
// interval directly, O(N^3) per cell.
GridFunction1D maximal_1d(const GridFunction1D& f, MaximalMode mode = MaximalMode::exact);

// Mf(x) at an arbitrary point x, including points outside the grid.
double maximal_1d_at(const GridFunction1D& f, double x);

// Cube field with side = 2^k cells per axis, dim in {1, 2, 3}, samples in
// row-major order (last axis fastest).
struct GridFieldND {
  int dim = 1;
  std::size_t side = 1;
  double cell_volume = 1.0;
  std::vector<double> samples;

  void validate() const;
  std::size_t size() const { return samples.size(); }
  MeasureStepFunction to_step() const;
};

GridFieldND to_field(const GridFunction1D& f);  // needs a power-of-two length

// Largest average over the dyadic cubes containing each cell.
GridFieldND dyadic_maximal(const GridFieldND& f);

// (sum_j (M f_j)^q)^{1/q}, or sup_j M f_j for q = inf. Members must share
// their geometry. DomainError for q <= 0.
GridFunction1D vector_maximal(const std::vector<GridFunction1D>& fs, double q,
                              MaximalMode mode = MaximalMode::exact);
GridFieldND vector_maximal(const std::vector<GridFieldND>& fs, double q);

// Pointwise l^q aggregate without the maximal operator: (sum_j |f_j|^q)^{1/q}.
GridFunction1D lq_aggregate(const std::vector<GridFunction1D>& fs, double q);

struct CriterionPoint {
  double r = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct CriterionResult {
  double sup_ratio = 0.0;  // +inf when any left side diverges
  std::vector<CriterionPoint> per_r;
};

// int_r^inf (w(t)/t)^q dt/t  against  r^{-q} int_0^r w(t)^q dt/t.
CriterionResult weight_criterion_q(const WeightFunction& w, double q,
                                   const std::vector<double>& r_grid, double rel_tol = 1e-8);

// max over t of (w(t)/t) int_0^t ds / sup_{0<tau<s} w(tau).
double weight_criterion_inf(const WeightFunction& w, const std::vector<double>& t_grid,
                            double rel_tol = 1e-8);

// (Mf)^*(t) / f^{**}(t) at each t, with Mf taken on f's grid.
std::vector<std::pair<double, double>> herz_ratio(const GridFunction1D& f,
                                                  const std::vector<double>& t_grid);

}  // namespace orlicz
