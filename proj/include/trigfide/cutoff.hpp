#pragma once

#include <functional>

#include "trigfide/sine_series.hpp"

namespace trigfide {

using Function1D = std::function<double(double)>;

/// Support [s - delta, e + delta] of a smooth cut-off equal to 1 on [s, e].
/// The derived frame has offset o = s - delta and half-period b = e + delta - o.
struct CutoffSpec {
  double s = 0.0;
  double e = 1.0;
  double delta = 1.0;

  CutoffSpec() = default;
  /// Throws InvalidGridError unless s < e and delta > 0.
  CutoffSpec(double s, double e, double delta);

  double origin() const noexcept { return s - delta; }
  double half_period() const noexcept { return e + delta - origin(); }
  bool contains(double x, double tol = 0.0) const noexcept {
    return x >= s - tol && x <= e + tol;
  }
};

/// C-infinity bump: 1 on [s,e], 0 outside (s-delta, e+delta), with the
/// transition g(t) = psi(t) / (psi(t) + psi(1-t)), psi(t) = exp(-1/t).
double cutoff_eval(const CutoffSpec& spec, double x);

/// Trigonometric interpolant of h*f in the frame of `spec`; exact at every
/// interpolation node inside [s, e].
struct NonPeriodicInterpolant {
  SineSeries series;
  CutoffSpec valid;

  double operator()(double x) const { return eval_sine_series(series, x); }
};

/// Interpolates f on [s, e] with N = 2^(q+1) nodes over [-b, b]. Throws
/// EvaluationError (with the node position) if f returns a non-finite value.
NonPeriodicInterpolant interpolate_nonperiodic(const Function1D& f, const CutoffSpec& spec, int q);

}  // namespace trigfide
