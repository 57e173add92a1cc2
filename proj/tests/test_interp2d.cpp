#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trigfide/error.hpp"
#include "trigfide/interp2d.hpp"

using namespace trigfide;
constexpr double kPi = std::numbers::pi;

TEST_CASE("probe points are the dyadic points inside [s,e]") {
  const CutoffSpec spec(2.0, 3.0, 1.0);  // o = 1, b = 3
  const auto pts = probe_points(spec, 2);  // 1, 1.75, 2.5, 3.25, 4
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == doctest::Approx(2.5));
  const auto fine = probe_points(spec, 10);
  CHECK(fine.front() >= 2.0);
  CHECK(fine.back() <= 3.0);
  CHECK(fine.size() == 341);
}

TEST_CASE("interpolant is exact at grid nodes inside the square") {
  const CutoffSpec spec(2.0, 3.0, 1.0);
  auto f = [](double x, double y) { return std::pow(std::abs(x - y), 0.5); };
  const auto s = interpolate_2d(f, spec, spec, 6, 6);
  const auto err = error_metrics(s, f);
  CHECK(err.err_g < 1e-11);
  CHECK(err.err_e > 1e-3);  // slow convergence across the diagonal kink
}

TEST_CASE("sweep order does not change the coefficients") {
  const CutoffSpec sx(2.0, 3.0, 1.0), sy(0.0, 2.0, 0.5);
  auto f = [](double x, double y) { return std::exp(x - y) + x * y; };
  const auto a = interpolate_2d(f, sx, sy, 5, 6, SweepOrder::XThenY);
  const auto b = interpolate_2d(f, sx, sy, 5, 6, SweepOrder::YThenX);
  CHECK(a.coeffs.rows() == 31);
  CHECK(a.coeffs.cols() == 63);
  CHECK((a.coeffs - b.coeffs).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("mesh evaluation agrees with pointwise evaluation") {
  const CutoffSpec spec(2.0, 3.0, 1.0);
  auto f = [](double x, double y) { return std::sin(x + y); };
  const auto s = interpolate_2d(f, spec, spec, 5, 5);
  const std::vector<double> xs{2.0, 2.31, 2.77}, ys{2.1, 2.9};
  const Eigen::MatrixXd mesh = s.eval_mesh(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < ys.size(); ++k) {
      CHECK(mesh(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) ==
            doctest::Approx(eval_2d(s, xs[i], ys[k])).epsilon(1e-13));
      CHECK(s(xs[i], ys[k]) == doctest::Approx(eval_2d(s, xs[i], ys[k])).epsilon(1e-13));
    }
}

TEST_CASE("coefficient (j-1, k-1) multiplies the (j, k) sine product") {
  const CutoffSpec spec(2.0, 3.0, 1.0);
  const double o = spec.origin(), b = spec.half_period();
  SineSeries2D s{Eigen::MatrixXd::Zero(7, 7), spec, spec};
  s.coeffs(2, 4) = 1.5;  // c_{3,5}
  const double x = 2.3, y = 2.8;
  CHECK(eval_2d(s, x, y) ==
        doctest::Approx(1.5 * std::sin(3.0 * kPi * (x - o) / b) * std::sin(5.0 * kPi * (y - o) / b)));
}

TEST_CASE("smooth kernels converge fast") {
  const CutoffSpec spec(2.0, 3.0, 1.0);
  auto f = [](double x, double y) { return std::exp(x + y); };
  const double e6 = error_metrics(interpolate_2d(f, spec, spec, 6, 6), f).err_e;
  const double e7 = error_metrics(interpolate_2d(f, spec, spec, 7, 7), f).err_e;
  CHECK(e7 < e6 / 10.0);
  CHECK(e7 < 5e-7);
}

TEST_CASE("error paths") {
  const CutoffSpec spec(2.0, 3.0, 1.0);
  auto nan_on_diag = [](double x, double y) { return 1.0 / (x - y); };
  CHECK_THROWS_AS(interpolate_2d(nan_on_diag, spec, spec, 4, 4), EvaluationError);
  auto zero = [](double, double) { return 0.0; };
  const auto s = interpolate_2d(zero, spec, spec, 4, 4);
  CHECK_THROWS_AS(error_metrics(s, zero), UndefinedMetricError);
  auto one = [](double, double) { return 1.0; };
  CHECK_THROWS_AS(error_metrics(interpolate_2d(one, spec, spec, 6, 6), one, 5), InvalidGridError);
}
