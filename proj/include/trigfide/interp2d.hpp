#pragma once

#include <functional>
#include <span>

#include <Eigen/Dense>

#include "trigfide/cutoff.hpp"

namespace trigfide {

using Function2D = std::function<double(double, double)>;

/// sum_{0<j<M1, 0<k<M2} c_jk sin(j pi (x-o1)/b1) sin(k pi (y-o2)/b2).
/// coeffs(j-1, k-1) holds c_jk.
struct SineSeries2D {
  Eigen::MatrixXd coeffs;
  CutoffSpec x_spec;
  CutoffSpec y_spec;

  std::size_t m1() const noexcept { return static_cast<std::size_t>(coeffs.rows()) + 1; }
  std::size_t m2() const noexcept { return static_cast<std::size_t>(coeffs.cols()) + 1; }
  double o1() const noexcept { return x_spec.origin(); }
  double b1() const noexcept { return x_spec.half_period(); }
  double o2() const noexcept { return y_spec.origin(); }
  double b2() const noexcept { return y_spec.half_period(); }

  double operator()(double x, double y) const;
  /// Values on the tensor mesh xs x ys, using one sine matrix per axis.
  Eigen::MatrixXd eval_mesh(std::span<const double> xs, std::span<const double> ys) const;
};

enum class SweepOrder { XThenY, YThenX };

/// Tensor-product interpolation of h1(x) h2(y) f(x, y) with N_i = 2^(q_i+1)
/// nodes per axis. Samples only the positive quadrant; the odd extension is
/// implicit. Throws EvaluationError naming the grid indices of a non-finite
/// sample.
SineSeries2D interpolate_2d(const Function2D& f, const CutoffSpec& spec_x,
                            const CutoffSpec& spec_y, int q1, int q2,
                            SweepOrder order = SweepOrder::XThenY);

double eval_2d(const SineSeries2D& series, double x, double y);

struct InterpolationErrors {
  double err_g = 0.0;  ///< over interpolation nodes inside [s,e]^2
  double err_e = 0.0;  ///< over the 2^q_probe probe mesh inside [s,e]^2
};

/// Normalised max errors against f. Throws UndefinedMetricError if f vanishes
/// on either point set.
InterpolationErrors error_metrics(const SineSeries2D& series, const Function2D& f, int q_probe = 10);

/// Points o + k*b/2^q, k = 0..2^q, that fall inside [s, e].
std::vector<double> probe_points(const CutoffSpec& spec, int q);

}  // namespace trigfide
