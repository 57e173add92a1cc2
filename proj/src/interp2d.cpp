#include "trigfide/interp2d.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "trigfide/error.hpp"
#include "trigfide/sine_series.hpp"

namespace trigfide {

namespace {

// sin(j pi (x - o)/b) for each x (rows) and j = 1..m-1 (columns)
Eigen::MatrixXd sine_basis(std::span<const double> xs, double o, double b, std::size_t m) {
  Eigen::MatrixXd E(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(m - 1));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double theta = std::numbers::pi * (xs[i] - o) / b;
    for (std::size_t j = 1; j < m; ++j) {
      E(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j - 1)) =
          std::sin(static_cast<double>(j) * theta);
    }
  }
  return E;
}

// transform every row of `values` (interior half samples) to sine coefficients
void transform_rows(Eigen::MatrixXd& values) {
  std::vector<double> row(static_cast<std::size_t>(values.cols()));
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) row[static_cast<std::size_t>(c)] = values(r, c);
    const auto coeffs = sine_coeffs_from_half(row);
    for (Eigen::Index c = 0; c < values.cols(); ++c) values(r, c) = coeffs[static_cast<std::size_t>(c)];
  }
}

void transform_cols(Eigen::MatrixXd& values) {
  std::vector<double> col(static_cast<std::size_t>(values.rows()));
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    for (Eigen::Index r = 0; r < values.rows(); ++r) col[static_cast<std::size_t>(r)] = values(r, c);
    const auto coeffs = sine_coeffs_from_half(col);
    for (Eigen::Index r = 0; r < values.rows(); ++r) values(r, c) = coeffs[static_cast<std::size_t>(r)];
  }
}

std::vector<double> interior_nodes(const CutoffSpec& spec, std::size_t M) {
  const double lambda = spec.half_period() / static_cast<double>(M);
  std::vector<double> xs(M - 1);
  for (std::size_t k = 1; k < M; ++k) xs[k - 1] = spec.origin() + static_cast<double>(k) * lambda;
  return xs;
}

}  // namespace

std::vector<double> probe_points(const CutoffSpec& spec, int q) {
  const std::size_t P = std::size_t{1} << q;
  const double step = spec.half_period() / static_cast<double>(P);
  const double tol = 1e-12 * spec.half_period();
  std::vector<double> pts;
  for (std::size_t k = 0; k <= P; ++k) {
    const double x = spec.origin() + static_cast<double>(k) * step;
    if (spec.contains(x, tol)) pts.push_back(x);
  }
  return pts;
}

SineSeries2D interpolate_2d(const Function2D& f, const CutoffSpec& spec_x,
                            const CutoffSpec& spec_y, int q1, int q2, SweepOrder order) {
  if (q1 < 1 || q2 < 1) throw InvalidGridError("interpolation levels must be >= 1");
  const std::size_t M1 = std::size_t{1} << q1;
  const std::size_t M2 = std::size_t{1} << q2;
  const auto xs = interior_nodes(spec_x, M1);
  const auto ys = interior_nodes(spec_y, M2);

  std::vector<double> hx(xs.size()), hy(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) hx[i] = cutoff_eval(spec_x, xs[i]);
  for (std::size_t k = 0; k < ys.size(); ++k) hy[k] = cutoff_eval(spec_y, ys[k]);

  Eigen::MatrixXd values(static_cast<Eigen::Index>(M1 - 1), static_cast<Eigen::Index>(M2 - 1));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const double h = hx[i] * hy[k];
      double v = 0.0;
      if (h != 0.0) {
        const double fv = f(xs[i], ys[k]);
        if (!std::isfinite(fv)) {
          std::ostringstream msg;
          msg << "non-finite kernel sample at grid indices (" << i + 1 << ", " << k + 1
              << "), point (" << xs[i] << ", " << ys[k] << ")";
          throw EvaluationError(msg.str());
        }
        v = h * fv;
      }
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = v;
    }
  }

  // x sweep transforms each column (fixed y_k); y sweep each row
  if (order == SweepOrder::XThenY) {
    transform_cols(values);
    transform_rows(values);
  } else {
    transform_rows(values);
    transform_cols(values);
  }
  return SineSeries2D{std::move(values), spec_x, spec_y};
}

double SineSeries2D::operator()(double x, double y) const { return eval_2d(*this, x, y); }

Eigen::MatrixXd SineSeries2D::eval_mesh(std::span<const double> xs, std::span<const double> ys) const {
  const Eigen::MatrixXd Ex = sine_basis(xs, o1(), b1(), m1());
  const Eigen::MatrixXd Ey = sine_basis(ys, o2(), b2(), m2());
  return Ex * coeffs * Ey.transpose();
}

double eval_2d(const SineSeries2D& series, double x, double y) {
  const double tx = std::numbers::pi * (x - series.o1()) / series.b1();
  const double ty = std::numbers::pi * (y - series.o2()) / series.b2();
  Eigen::VectorXd sx(series.coeffs.rows()), sy(series.coeffs.cols());
  for (Eigen::Index j = 0; j < sx.size(); ++j) sx(j) = std::sin(static_cast<double>(j + 1) * tx);
  for (Eigen::Index k = 0; k < sy.size(); ++k) sy(k) = std::sin(static_cast<double>(k + 1) * ty);
  return sx.dot(series.coeffs * sy);
}

namespace {

double normalised_max_error(const SineSeries2D& series, const Function2D& f,
                            const std::vector<double>& xs, const std::vector<double>& ys,
                            const char* name) {
  if (xs.empty() || ys.empty()) {
    throw UndefinedMetricError(std::string(name) + ": empty point set");
  }
  const Eigen::MatrixXd approx = series.eval_mesh(xs, ys);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const double fv = f(xs[i], ys[k]);
      num = std::max(num, std::abs(fv - approx(static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(k))));
      den = std::max(den, std::abs(fv));
    }
  }
  if (den == 0.0) throw UndefinedMetricError(std::string(name) + ": target vanishes on point set");
  return num / den;
}

}  // namespace

InterpolationErrors error_metrics(const SineSeries2D& series, const Function2D& f, int q_probe) {
  const int q1 = static_cast<int>(std::lround(std::log2(static_cast<double>(series.m1()))));
  const int q2 = static_cast<int>(std::lround(std::log2(static_cast<double>(series.m2()))));
  if (q_probe < q1 || q_probe < q2) {
    throw InvalidGridError("probe level must be at least the interpolation level");
  }
  InterpolationErrors out;
  out.err_g = normalised_max_error(series, f, probe_points(series.x_spec, q1),
                                   probe_points(series.y_spec, q2), "err_g");
  out.err_e = normalised_max_error(series, f, probe_points(series.x_spec, q_probe),
                                   probe_points(series.y_spec, q_probe), "err_e");
  return out;
}

}  // namespace trigfide
