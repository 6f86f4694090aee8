#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/report.hpp"
#include "orlicz/young.hpp"
#include "orlicz/young_json.hpp"

namespace orlicz {

// Band [c1, c2] for (Mf)^*(t) / f^{**}(t), frozen from a calibration run.
struct HerzBand {
  double c1 = 0.0;
  double c2 = 0.0;
};

// The band stored in data/herz_band.json (seed 0, 200 functions).
HerzBand frozen_herz_band();

struct HerzCalibration {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  int functions = 0;
  int samples = 0;
};

// Ratios over the Herz corpus drawn from `seed`.
HerzCalibration calibrate_herz(std::uint64_t seed, int functions);

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::vector<std::string> suites;  // ids, or "all"
  std::vector<CatalogEntry> catalog = default_catalog();
  int step_functions = 100;  // weak-norm and rearrangement corpora
  int grid_pairs = 100;
  int maximal_grids = 100;
  int herz_functions = 200;
  int lorentz_functions = 200;
  int fs_families = 50;
  NormOptions norms;
  HerzBand herz_band = frozen_herz_band();
};

// Suite ids in execution order.
const std::vector<std::string>& suite_ids();

// Runs the selected suites sequentially; identical configs give identical
// reports. Unknown ids raise PreconditionError.
Report run_suite(const SuiteConfig& config);

struct CorpusSpec {
  std::uint64_t seed = 0;
  int families = 50;
  int members = 8;
  int support_cells = 32;
  double min_reach = 0.0;  // see random_family
};

struct ConstantEstimate {
  double constant = 0.0;   // max of the two corpus constants
  double stability = 0.0;  // first corpus constant / second
  double first = 0.0;
  double second = 0.0;
};

// Largest ratio ||A(M f_j)||_{wL^Phi} / ||A(|f_j|)||_{wL^Phi} over two
// disjoint corpora, where A is sup_j for q = inf and the l^q sum for
// 1 < q < inf. Requires phi in nabla_2 (q = inf) or in delta_2 and nabla_2
// (finite q) unless negative_control is set; HypothesisError otherwise.
ConstantEstimate estimate_constant(const YoungFunction& phi, double q, const CorpusSpec& corpus,
                                   bool negative_control = false,
                                   const NormOptions& opts = {});

}  // namespace orlicz
