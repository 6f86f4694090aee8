#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "orlicz/young.hpp"

namespace orlicz {

enum class Verdict { no, yes, unknown };

std::string to_string(Verdict v);

struct ClassifyOptions {
  double t_min = 1e-8;
  double t_max = 1e8;
  int points_per_decade = 512;
  // Elasticity above this is read as p_+ = inf.
  double infinite_elasticity = 1e3;
  // p_- within this of 1 means "not above 1".
  double index_tol = 1e-3;
  // Largest drift of the elasticity over the last decade at either end of the
  // grid for an index attained there to count as settled.
  double stability_tol = 1e-3;
};

struct ClassifyResult {
  Verdict delta2 = Verdict::unknown;
  std::optional<double> delta2_witness;  // k with phi(2r) <= k phi(r)
  Verdict nabla2 = Verdict::unknown;
  std::optional<double> nabla2_witness;  // k with phi(r) <= phi(kr) / (2k)
  double p_plus = kInf;
  double p_minus = 1.0;

  nlohmann::json to_json() const;
};

// Indices from the elasticity t phi'(t) / phi(t) over a log grid restricted to
// (a, b), with the doubling conditions read off them and witnesses found by
// direct search. A nonzero a or finite b forces p_+ = inf.
ClassifyResult classify(const YoungFunction& phi, const ClassifyOptions& opts = {});

}  // namespace orlicz
