#pragma once

#include "orlicz/norms.hpp"
#include "orlicz/rearrange.hpp"
#include "orlicz/report.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct PairingValues {
  double grid_product = 0.0;        // int |f g| on the shared grid, exact
  double rearranged_product = 0.0;  // int f^* g^*, exact
  NormResult f_lorentz1;            // ||f||_{L^{Phi,1}}
  NormResult g_weak_conj;           // ||g||_{wL^{conj Phi}}
};

PairingValues pairing_values(const YoungFunction& phi, const GridFunction1D& f,
                             const GridFunction1D& g, const NormOptions& opts = {});

// Checks int |fg| <= int f^* g^* <= 2 ||f||_{L^{Phi,1}} ||g||_{wL^{conj Phi}}.
// The exact comparisons allow 1e-12 relative rounding; the last one compares
// against the upper end of the certified norm intervals. Infinite norms make
// the last check vacuous.
Report pairing_checks(const YoungFunction& phi, const GridFunction1D& f, const GridFunction1D& g,
                      const NormOptions& opts = {});

}  // namespace orlicz
