#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trigfide/collocation.hpp"
#include "trigfide/error.hpp"

using namespace trigfide;
constexpr double kPi = std::numbers::pi;

TEST_CASE("grid layout for s=1, e=3, delta=1") {
  const auto g = build_grid(1.0, 3.0, 1.0, 3);
  CHECK(g.M == 8);
  CHECK(g.N() == 16);
  CHECK(g.o == 0.0);
  CHECK(g.b == 4.0);
  CHECK(g.lambda == 0.5);
  CHECK(g.m == 2);
  CHECK(g.n == 4);
  CHECK(g.node(g.m) == 1.0);
  CHECK(g.node(g.m + g.n) == 3.0);
  CHECK(g.s_local() == 1.0);
  CHECK(g.e_local() == 3.0);
}

TEST_CASE("grids where s or e miss the nodes are rejected") {
  CHECK_THROWS_AS(build_grid(1.0, 1.3, 1.0, 4), CommensurabilityError);
  CHECK_THROWS_AS(build_grid(1.0, 3.0, 1.0, 1), InvalidGridError);
  CHECK_THROWS_AS(build_grid(1.0, 3.0, 0.0, 4), InvalidGridError);
  CHECK_THROWS_AS(build_grid(1.0, 3.0, 2.0, 2), CommensurabilityError);  // M delta / b = 4/3
  CHECK_NOTHROW(build_grid(1.0, 3.0, 1.0, 2));
}

TEST_CASE("Theta at M=4 by hand") {
  // S = [[r, 1, r], [1, 0, -1], [r, -1, r]], r = sqrt(2)/2; Theta = S diag(1, 1/4, 1/9) S / 2
  const Eigen::MatrixXd T = build_theta(4);
  const double r2 = std::sqrt(2.0);
  CHECK(T(0, 0) == doctest::Approx(29.0 / 72.0).epsilon(1e-14));
  CHECK(T(1, 1) == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
  CHECK(T(0, 1) == doctest::Approx(2.0 * r2 / 9.0).epsilon(1e-14));
  CHECK(T(0, 2) == doctest::Approx(0.5 * (0.5 - 0.25 + 0.5 / 9.0)).epsilon(1e-14));
  CHECK((T - T.transpose()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(build_theta(2), InvalidGridError);
}

TEST_CASE("Theta scales sine mode j by 1/j^2") {
  const std::size_t M = 16;
  const Eigen::MatrixXd T = build_theta(M);
  for (int j : {1, 5, 15}) {
    Eigen::VectorXd mode(static_cast<Eigen::Index>(M - 1));
    for (std::size_t k = 1; k < M; ++k) mode(static_cast<Eigen::Index>(k - 1)) = std::sin(j * kPi * static_cast<double>(k) / M);
    CHECK((T * mode - mode / (j * j)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("solution series derivatives agree with finite differences") {
  SolutionSeries sol{0.3, -0.7, {1.0, -0.5, 0.25, 2.0, 0.0, 0.1, -0.3}, 0.5, 4.0};
  const double h = 1e-4;
  for (double x : {0.7, 1.9, 3.3}) {
    const double fd1 = (eval_solution(sol, x + h) - eval_solution(sol, x - h)) / (2 * h);
    const double fd2 = (eval_solution(sol, x + h) - 2 * eval_solution(sol, x) + eval_solution(sol, x - h)) / (h * h);
    CHECK(eval_solution_derivative(sol, x) == doctest::Approx(fd1).epsilon(1e-7));
    CHECK(eval_solution_second_derivative(sol, x) == doctest::Approx(fd2).epsilon(1e-5));
  }
  CHECK(eval_solution(sol, sol.o) == doctest::Approx(0.3));
  CHECK(eval_solution(sol, sol.o + sol.b) == doctest::Approx(0.3 - 0.7 * 4.0));
}

TEST_CASE("sampling and b_from_v are inverse on the solution basis") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto g = build_grid(1.0, 3.0, 1.0, 5);
  SolutionSeries sol{u(rng), u(rng), std::vector<double>(g.M - 1), g.o, g.b};
  for (auto& v : sol.B) v = u(rng);
  const Eigen::VectorXd Ve = sample_solution(sol, g);
  const SolutionSeries back = b_from_v(g, Ve);
  CHECK(back.a_minus1 == doctest::Approx(sol.a_minus1));
  CHECK(back.a0 == doctest::Approx(sol.a0));
  for (std::size_t j = 0; j < sol.B.size(); ++j) CHECK(std::abs(back.B[j] - sol.B[j]) < 1e-12);
  CHECK_THROWS_AS(b_from_v(g, Eigen::VectorXd::Zero(5)), ShapeError);
}

TEST_CASE("A differentiates basis functions exactly at nodes") {
  const auto g = build_grid(1.0, 3.0, 1.0, 4);
  const double o = g.o, b = g.b;
  // v = 2 + 0.5 (x - o) + sin(3 pi (x - o)/b) lies in the basis
  auto v = [&](double x) { return 2.0 + 0.5 * (x - o) + std::sin(3 * kPi * (x - o) / b); };
  auto dv = [&](double x) { return 0.5 + 3 * kPi / b * std::cos(3 * kPi * (x - o) / b); };
  Eigen::VectorXd Ve(static_cast<Eigen::Index>(g.M + 1));
  for (std::size_t k = 0; k <= g.M; ++k) Ve(static_cast<Eigen::Index>(k)) = v(g.node(k));
  for (const auto& A : {derivative_matrix_composed(g), derivative_matrix_closed_form(g)}) {
    const Eigen::VectorXd U = A * Ve;
    for (std::size_t k = 0; k <= g.M; ++k) CHECK(U(static_cast<Eigen::Index>(k)) == doctest::Approx(dv(g.node(k))).epsilon(1e-12));
  }
}

TEST_CASE("closed-form and composed derivative matrices agree") {
  for (int q : {3, 4, 5, 6, 7}) {
    const auto g = build_grid(1.0, 3.0, 1.0, q);
    const Eigen::MatrixXd a = derivative_matrix_composed(g);
    const Eigen::MatrixXd c = derivative_matrix_closed_form(g);
    CAPTURE(q);
    CHECK((a - c).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff() < 1e-8);
  }
  CHECK_THROWS_AS(build_derivative_matrix(build_grid(1.0, 3.0, 1.0, 3), -1.0), ConstructionError);
}

TEST_CASE("spectral operators have consistent shapes") {
  const auto g = build_grid(1.0, 3.0, 1.0, 4);
  const auto ops = SpectralOperators::build(g);
  CHECK(ops.S.rows() == 15);
  CHECK(ops.theta.rows() == 15);
  CHECK(ops.A.rows() == 17);
  CHECK(ops.T.rows() == 15);
  CHECK(ops.T.cols() == 17);
  CHECK(ops.K(14) == 15.0);
}
