#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "trigfide/cutoff.hpp"

namespace trigfide {

/// Collocation nodes x_k = o + k*lambda, k = 0..M, lambda = b/M, with
/// s = x_m and e = x_{m+n}. All spectral formulas work in the local frame
/// where o = 0 and s = delta.
struct CollocationGrid {
  int q = 0;
  std::size_t M = 0;
  double o = 0.0;
  double b = 0.0;
  double lambda = 0.0;
  std::size_t m = 0;
  std::size_t n = 0;
  CutoffSpec cutoff;

  std::size_t N() const noexcept { return 2 * M; }
  double node(std::size_t k) const noexcept { return o + static_cast<double>(k) * lambda; }
  double local(std::size_t k) const noexcept { return static_cast<double>(k) * lambda; }
  double s_local() const noexcept { return local(m); }
  double e_local() const noexcept { return local(m + n); }
};

/// Throws CommensurabilityError if M*delta/b or M*(e-s)/b is not an integer.
CollocationGrid build_grid(double s, double e, double delta, int q);

/// v(x) = a_{-1} + a_0 (x-o) - (b/pi)^2 sum_j b_j/j^2 sin(j pi (x-o)/b)
struct SolutionSeries {
  double a_minus1 = 0.0;
  double a0 = 0.0;
  std::vector<double> B;  ///< b_j, j = 1..M-1
  double o = 0.0;
  double b = 1.0;
};

double eval_solution(const SolutionSeries& sol, double x);
double eval_solution_derivative(const SolutionSeries& sol, double x);
/// v'' = sum_j b_j sin(j pi (x-o)/b)
double eval_solution_second_derivative(const SolutionSeries& sol, double x);

/// V_e = (v(x_0), ..., v(x_M)).
Eigen::VectorXd sample_solution(const SolutionSeries& sol, const CollocationGrid& grid);

/// Theta = (2/M) S diag(1/K^2) S: maps right-hand-side samples to the
/// discrete-ODE left side. Throws InvalidGridError for M < 4.
Eigen::MatrixXd build_theta(std::size_t M);

/// (M-1) x (M+1) matrix T with B = T V_e.
Eigen::MatrixXd coefficient_map(const CollocationGrid& grid);

SolutionSeries b_from_v(const CollocationGrid& grid, const Eigen::VectorXd& Ve);

/// U_e = A V_e via V_e -> (a_{-1}, a_0, B) -> derivative samples.
Eigen::MatrixXd derivative_matrix_composed(const CollocationGrid& grid);
/// U_e = A V_e from the cot/tan closed-form entries.
Eigen::MatrixXd derivative_matrix_closed_form(const CollocationGrid& grid);

/// Builds A both ways; throws ConstructionError if they differ by more than
/// `tolerance` relative to max|A|. Returns the composed matrix.
Eigen::MatrixXd build_derivative_matrix(const CollocationGrid& grid, double tolerance = 1e-8);

/// Dense operators shared by every kernel path.
struct SpectralOperators {
  Eigen::MatrixXd S;      ///< (M-1)^2 sine matrix
  Eigen::MatrixXd theta;  ///< (M-1)^2
  Eigen::MatrixXd A;      ///< (M+1)^2 derivative matrix
  Eigen::MatrixXd T;      ///< (M-1)x(M+1), B = T V_e
  Eigen::VectorXd K;      ///< 1..M-1

  static SpectralOperators build(const CollocationGrid& grid);
};

}  // namespace trigfide
