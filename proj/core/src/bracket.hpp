#pragma once

#include <cmath>

namespace orlicz::detail {

// Shrinks lo < hi, where above(g(lo)) is false and above(g(hi)) is true for a
// non-decreasing g, until hi - lo <= rel_tol * hi. Illinois false-position
// steps, with a bisection step whenever one of them fails to halve the
// bracket.
template <class G, class Above>
void refine_bracket(double& lo, double& hi, G g, Above above, double rel_tol, int max_iter = 400) {
  double glo = g(lo);
  double ghi = g(hi);
  int side = 0;
  bool bisect = false;
  for (int it = 0; it < max_iter && hi - lo > rel_tol * hi; ++it) {
    const double width = hi - lo;
    const double mid = lo + 0.5 * width;
    double x = mid;
    if (!bisect && std::isfinite(glo) && std::isfinite(ghi) && ghi > glo) {
      const double fp = lo + width * ((0.0 - glo) / (ghi - glo));
      if (fp > lo && fp < hi) x = fp;
    }
    if (x <= lo || x >= hi) break;
    const bool false_position = x != mid;
    const double gx = g(x);
    if (above(gx)) {
      hi = x;
      ghi = gx;
      if (side == -1) glo *= 0.5;
      side = -1;
    } else {
      lo = x;
      glo = gx;
      if (side == 1) ghi *= 0.5;
      side = 1;
    }
    bisect = false_position && hi - lo > 0.5 * width;
  }
}

}  // namespace orlicz::detail
