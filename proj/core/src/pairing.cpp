#include "orlicz/pairing.hpp"

#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr double kRounding = 1e-12;

}  // namespace

PairingValues pairing_values(const YoungFunction& phi, const GridFunction1D& f,
                             const GridFunction1D& g, const NormOptions& opts) {
  f.validate();
  g.validate();
  if (f.size() != g.size() || f.origin != g.origin || f.cell_width != g.cell_width) {
    throw PreconditionError("pairing needs two functions on the same grid");
  }
  PairingValues out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.grid_product += f.samples[i] * g.samples[i] * f.cell_width;
  }
  out.rearranged_product = rearranged_pairing(rearrangement(f), rearrangement(g));
  out.f_lorentz1 = lorentz_norm(phi, 1.0, f.to_step(), opts);
  out.g_weak_conj = weak_orlicz_norm(conjugate(phi), g.to_step(), opts);
  return out;
}

Report pairing_checks(const YoungFunction& phi, const GridFunction1D& f, const GridFunction1D& g,
                      const NormOptions& opts) {
  const PairingValues v = pairing_values(phi, f, g, opts);
  CheckRecord hl{"pairing", "grid-product<=rearranged-product", "rearrangement-pairing step"};
  hl.record(v.grid_product <= v.rearranged_product * (1.0 + kRounding),
            "int|fg| = " + std::to_string(v.grid_product) + " > int f*g* = " +
                std::to_string(v.rearranged_product));

  CheckRecord dual{"pairing", "rearranged-product<=2|f|_L1|g|_wL", "2‖f‖_{L^{Φ,1}}‖h‖_{wL^{Φ̃}}"};
  const double bound = 2.0 * v.f_lorentz1.upper * v.g_weak_conj.upper;
  if (std::isinf(bound) && v.rearranged_product > 0.0) {
    dual.record_vacuous();
  } else {
    dual.record(v.rearranged_product <= bound * (1.0 + kRounding),
                "int f*g* = " + std::to_string(v.rearranged_product) + " > " + std::to_string(bound));
    dual.intervals.emplace_back(2.0 * v.f_lorentz1.lower * v.g_weak_conj.lower, bound);
  }
  Report r;
  r.records.push_back(std::move(hl));
  r.records.push_back(std::move(dual));
  return r;
}

}  // namespace orlicz
