#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "trigfide/collocation.hpp"
#include "trigfide/gmap.hpp"
#include "trigfide/kernel.hpp"

namespace trigfide {

/// Rows of D act on (y(s), y'(s), y(e), y'(e)); row 0 equals alpha, row 1 beta.
struct BoundarySpec {
  std::array<std::array<double, 4>, 2> D{};
  double alpha = 0.0;
  double beta = 0.0;

  /// Throws AssemblyError if sigma_2(D) <= 1e-10 sigma_1(D).
  void validate() const;
};

/// y'' = p y' + q y + r + mu * int_s^e k(x,t) y(t) dt on [s, e], plus two
/// boundary conditions. Coefficient functions must be evaluable on
/// [s - delta, e + delta].
struct FideProblem {
  Function1D p, q, r, mu;
  KernelSpec kernel;
  KernelPath path = KernelPath::Continuous;
  BoundarySpec bc;
  double s = 0.0, e = 1.0, delta = 1.0;
  /// t-direction interpolation level of the kernel; the effective level is max(q, kernel_q).
  int kernel_q = 13;
  /// Re-check the G-map against quadrature on a coarse grid before solving.
  bool validate = true;
};

struct LinearSystem {
  Eigen::MatrixXd Phi;
  Eigen::VectorXd Psi;
};

/// Rows 0 and M carry the boundary conditions; rows 1..M-1 the collocated
/// equation with G eliminated through `gmap`.
LinearSystem assemble_system(const FideProblem& problem, const CollocationGrid& grid,
                             const SpectralOperators& ops, const GMap& gmap);

struct DenseSolution {
  Eigen::VectorXd x;
  double rcond = 0.0;           ///< reciprocal condition estimate (1-norm)
  double backward_error = 0.0;  ///< ||Phi x - Psi|| / (||Phi|| ||x||), infinity norms
  bool ill_conditioned = false; ///< rcond < 1e-12
};

/// LU with partial pivoting. Throws SingularSystemError on an exact zero pivot.
DenseSolution solve_dense(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& Psi);

struct FideSolution {
  SolutionSeries series;
  CollocationGrid grid;
  Eigen::VectorXd Ve;
  double rcond = 0.0;
  double backward_error = 0.0;
  double validation_deviation = 0.0;  ///< coarse-grid G-map vs quadrature, relative
};

/// Samples of mu(x_k) h(x_k) at interior nodes.
Eigen::VectorXd nu_samples(const FideProblem& problem, const CollocationGrid& grid);

/// G-map oracle: relative max deviation of gmap.apply(sample(v)) from the
/// quadrature value nu_k h(x_k) int_s^e k(x_k,t) v(t) dt over a few random
/// in-basis v. For the continuous path the interpolated kernel is integrated;
/// for the singular path the true kernel. Reports the worst node.
struct OracleReport {
  double deviation = 0.0;
  std::size_t worst_node = 0;
};
OracleReport check_gmap_against_quadrature(const FideProblem& problem, const CollocationGrid& grid,
                                           const SpectralOperators& ops, const KernelRepr& repr,
                                           const GMap& gmap, int trials, std::uint64_t seed);

/// Full pipeline. Errors are rethrown as StageError tagged with the failing
/// stage (grid, operators, kernel, gmap, validation, assembly, solve).
FideSolution solve_fide(const FideProblem& problem, int q);

}  // namespace trigfide
