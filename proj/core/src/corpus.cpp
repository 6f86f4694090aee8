#include "orlicz/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

bool Rng::chance(double p) { return uniform() < p; }

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 of the pair.
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + i + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MeasureStepFunction random_step_function(Rng& rng, int max_cells) {
  MeasureStepFunction f;
  const int n = rng.integer(1, max_cells);
  for (int i = 0; i < n; ++i) {
    const double v = rng.log_uniform(1e-3, 1e3);
    const double m = rng.log_uniform(1e-3, 1e3);
    f.cells.push_back({v, m});
  }
  return f;
}

GridFunction1D random_grid(Rng& rng, int max_cells, int pad) {
  GridFunction1D g;
  g.origin = rng.uniform(-10.0, 10.0);
  g.cell_width = rng.log_uniform(1e-2, 1e2);
  const int n = rng.integer(1, max_cells);
  g.samples.assign(static_cast<std::size_t>(n + 2 * pad), 0.0);
  for (int i = 0; i < n; ++i) {
    if (!rng.chance(0.25)) g.samples[static_cast<std::size_t>(pad + i)] = rng.log_uniform(1e-3, 1e3);
  }
  g.origin -= g.cell_width * pad;
  return g;
}

std::pair<GridFunction1D, GridFunction1D> random_grid_pair(Rng& rng, int max_cells) {
  GridFunction1D f = random_grid(rng, max_cells);
  GridFunction1D g = f;
  for (double& v : g.samples) v = rng.chance(0.25) ? 0.0 : rng.log_uniform(1e-3, 1e3);
  return {f, g};
}

std::vector<GridFunction1D> random_family(Rng& rng, int members, int support_cells,
                                          double min_reach) {
  const int n = 3 * support_cells;
  std::vector<GridFunction1D> family;
  for (int j = 0; j < members; ++j) {
    GridFunction1D g;
    g.origin = 0.0;
    g.cell_width = 1.0;
    g.samples.assign(static_cast<std::size_t>(n), 0.0);
    const int centre = support_cells + rng.integer(0, support_cells - 1);
    const double lo = std::max(1.0, min_reach * support_cells);
    const double reach = lo < support_cells ? rng.log_uniform(lo, support_cells) : lo;
    const double amplitude = rng.log_uniform(0.5, 2.0);
    for (int i = support_cells; i < 2 * support_cells; ++i) {
      const double d = std::abs(i - centre);
      if (d > reach || rng.chance(0.25)) continue;
      g.samples[static_cast<std::size_t>(i)] = amplitude * rng.log_uniform(0.5, 2.0) / (1.0 + d);
    }
    // Keep every member non-zero.
    g.samples[static_cast<std::size_t>(centre)] = amplitude;
    family.push_back(std::move(g));
  }
  return family;
}

}  // namespace orlicz
