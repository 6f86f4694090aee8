#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orlicz/rearrange.hpp"

namespace orlicz {

// Seeded generator with portable draws (the standard distributions are
// implementation-defined, which would break byte-identical reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double uniform();                          // [0, 1)
  double uniform(double lo, double hi);      // [lo, hi)
  double log_uniform(double lo, double hi);  // log-uniform on [lo, hi)
  int integer(int lo, int hi);               // inclusive
  bool chance(double p);

  // Independent stream for sub-task i of this generator's seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t i);

 private:
  std::mt19937_64 engine_;
};

// 1 to max_cells cells, values and measures log-uniform on [1e-3, 1e3].
MeasureStepFunction random_step_function(Rng& rng, int max_cells = 64);

// Grid with 1 to max_cells cells, log-uniform width and values, a share of
// zero cells, and zero padding of pad cells on both sides.
GridFunction1D random_grid(Rng& rng, int max_cells = 63, int pad = 0);

// Two grids on one geometry.
std::pair<GridFunction1D, GridFunction1D> random_grid_pair(Rng& rng, int max_cells = 64);

// One family for the vector-valued probes: `members` functions on a shared
// unit grid with support_cells cells padded by as many zeros on each side.
// Each member is a ~1/|x - c| bump of random centre and reach up to the
// support, jittered by a log-uniform factor in [1/2, 2] and thinned at random.
// Reaches are log-uniform in [max(1, min_reach * support_cells), support_cells].
std::vector<GridFunction1D> random_family(Rng& rng, int members, int support_cells,
                                          double min_reach = 0.0);

}  // namespace orlicz
