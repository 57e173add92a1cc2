#include "trigfide/cutoff.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "trigfide/error.hpp"

namespace trigfide {

namespace {

double psi(double t) {
  // exp(-1/t) underflows long before t reaches this; avoids 1/0
  return t <= 1e-14 ? 0.0 : std::exp(-1.0 / t);
}

double transition(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = psi(t);
  return a / (a + psi(1.0 - t));
}

}  // namespace

CutoffSpec::CutoffSpec(double s_, double e_, double delta_) : s(s_), e(e_), delta(delta_) {
  if (!(s < e) || !std::isfinite(s) || !std::isfinite(e)) {
    throw InvalidGridError("cut-off interval needs s < e");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidGridError("cut-off margin delta must be positive");
  }
}

double cutoff_eval(const CutoffSpec& spec, double x) {
  if (x >= spec.s && x <= spec.e) return 1.0;
  if (x < spec.s) return transition((x - (spec.s - spec.delta)) / spec.delta);
  return transition((spec.e + spec.delta - x) / spec.delta);
}

NonPeriodicInterpolant interpolate_nonperiodic(const Function1D& f, const CutoffSpec& spec, int q) {
  if (q < 1) throw InvalidGridError("interpolation level q must be >= 1");
  const std::size_t M = std::size_t{1} << q;
  const double o = spec.origin();
  const double b = spec.half_period();
  const double lambda = b / static_cast<double>(M);

  std::vector<double> half(M - 1);
  for (std::size_t k = 1; k < M; ++k) {
    const double x = o + static_cast<double>(k) * lambda;
    const double h = cutoff_eval(spec, x);
    if (h == 0.0) {
      half[k - 1] = 0.0;
      continue;
    }
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg << "non-finite sample f(" << x << ") at node " << k;
      throw EvaluationError(msg.str());
    }
    half[k - 1] = h * fx;
  }
  return NonPeriodicInterpolant{SineSeries{b, o, sine_coeffs_from_half(half)}, spec};
}

}  // namespace trigfide
