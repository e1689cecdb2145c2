#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace jscc {

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

// Maximum of a unimodal (in practice concave) function on [lo, hi] by golden
// section; xtol is the final bracket width.
template <class F>
GoldenResult maximize_golden(F&& f, double lo, double hi, double xtol = 1e-10) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  GoldenResult best{xm, fm};
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  // endpoints of the original interval can win when the max sits on the edge
  return best;
}

// Doubles hi until f stops improving across the last octave, so the maximum
// of a concave f is bracketed in [lo, hi]. Returns {hi, capped}.
template <class F>
std::pair<double, bool> expand_bracket(F&& f, double lo, double hi0, double cap) {
  double hi = hi0;
  while (hi < cap && f(hi) > f(0.5 * (lo + hi))) {
    hi = std::min(2.0 * hi, cap);
  }
  const bool capped = hi >= cap && f(hi) > f(0.5 * (lo + hi));
  return {hi, capped};
}

// Root of f on [lo, hi] given f(lo) and f(hi) of opposite sign (either
// orientation). Bisection, safe for any continuous monotone-through-zero f.
template <class F>
double bisect_root(F&& f, double lo, double hi, double xtol = 1e-13, double ftol = 0.0) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect_root: no sign change on the bracket");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::fabs(fm) <= ftol || (hi - lo) <= xtol * (1.0 + std::fabs(mid))) return mid;
    if ((fm > 0.0) == (fhi > 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace jscc
