#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "orlicz/ext_real.hpp"

namespace orlicz {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // |Kronrod - Gauss| summed over segments
  bool converged = true;
};

namespace detail {

struct Gk15 {
  static constexpr std::array<double, 8> xgk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> wgk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  // Gauss weights for the odd Kronrod nodes xgk[1], xgk[3], xgk[5], xgk[7].
  static constexpr std::array<double, 4> wg = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
};

template <class F>
QuadResult gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = Gk15::wgk[7] * fc;
  double gauss = Gk15::wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * Gk15::xgk[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += Gk15::wgk[i] * pair;
    if (i % 2 == 1) gauss += Gk15::wg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss), std::isfinite(kronrod)};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]. The
// segment with the largest error estimate is bisected until the summed
// estimate drops below max(abs_tol, rel_tol * |value|). A non-finite sample
// makes the whole result +inf.
template <class F>
QuadResult integrate(const F& f, double a, double b, double rel_tol,
                     double abs_tol = 0.0, int max_segments = 400) {
  if (!(b > a)) return {};
  struct Segment {
    double lo, hi;
    QuadResult r;
  };
  std::vector<Segment> segments;
  segments.push_back({a, b, detail::gk15(f, a, b)});
  if (!segments.front().r.converged) return {kInf, kInf, false};

  while (true) {
    double value = 0.0;
    double error = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      value += segments[i].r.value;
      error += segments[i].r.error;
      if (segments[i].r.error > segments[worst].r.error) worst = i;
    }
    const double target = std::max(abs_tol, rel_tol * std::abs(value));
    if (error <= target) return {value, error, true};
    if (static_cast<int>(segments.size()) >= max_segments) return {value, error, false};

    const Segment s = segments[worst];
    const double mid = 0.5 * (s.lo + s.hi);
    if (!(mid > s.lo && mid < s.hi)) return {value, error, false};
    Segment left{s.lo, mid, detail::gk15(f, s.lo, mid)};
    Segment right{mid, s.hi, detail::gk15(f, mid, s.hi)};
    if (!left.r.converged || !right.r.converged) return {kInf, kInf, false};
    segments[worst] = left;
    segments.push_back(right);
  }
}

struct TailResult {
  double value = 0.0;
  double error = 0.0;
  bool diverged = false;
  int windows = 0;
};

// Integral of h over s in [0, inf) for an integrand that is expected to decay.
// The half-line is cut into doubling windows [0,1], [1,2], [2,4], ... and each
// window is integrated adaptively. The loop stops when a window contributes
// less than tail_fraction * rel_tol of the running sum, when the next window
// would cross s_max (the largest argument the caller can evaluate), or after
// max_doublings windows. In the last two cases the ratio rho of the last two
// window integrals decides: rho > divergence_ratio means the tail is not
// summable (reported as +inf); otherwise a geometric tail W*rho/(1-rho) is
// added; its error is the spread between the last two ratio estimates.
template <class H>
TailResult integrate_tail(const H& h, double s_max, double rel_tol,
                          int max_doublings = 60, double divergence_ratio = 0.95) {
  constexpr double tail_fraction = 1e-2;
  TailResult out;
  double older_window = -1.0;
  double prev_window = -1.0;
  double last_window = -1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int k = 0; k <= max_doublings; ++k) {
    if (hi > s_max) break;
    const double abs_tol = 0.1 * rel_tol * out.value;
    const QuadResult w = integrate(h, lo, hi, 0.1 * rel_tol, abs_tol);
    if (is_inf(w.value)) return {kInf, kInf, true, out.windows + 1};
    out.value += w.value;
    out.error += w.error;
    ++out.windows;
    older_window = prev_window;
    prev_window = last_window;
    last_window = w.value;
    if (w.value <= tail_fraction * rel_tol * out.value) return out;
    lo = hi;
    hi *= 2.0;
  }

  if (prev_window <= 0.0) {
    // Too few windows to judge the trend; an integrand that is still
    // non-negligible at the edge of the evaluable range is treated as divergent.
    if (last_window > tail_fraction * rel_tol * out.value) return {kInf, kInf, true, out.windows};
    return out;
  }
  const double rho = last_window / prev_window;
  if (rho > divergence_ratio) return {kInf, kInf, true, out.windows};
  const double tail = last_window * rho / (1.0 - rho);
  out.value += tail;
  if (older_window > 0.0) {
    const double rho_before = prev_window / older_window;
    const double alt = rho_before < 1.0 ? last_window * rho_before / (1.0 - rho_before) : 2.0 * tail;
    out.error += std::abs(tail - alt);
  } else {
    out.error += tail;
  }
  return out;
}

}  // namespace orlicz
