#pragma once

#include <optional>

#include <Eigen/Dense>

#include "trigfide/collocation.hpp"
#include "trigfide/kernel.hpp"

namespace trigfide {

/// Integral-term samples at interior nodes as an affine map of the solution
/// samples: G = C0 v_0 + Cm v_m + CM v_M + Crest V, V = (v_1..v_{M-1}).
struct GMap {
  Eigen::VectorXd C0;
  Eigen::VectorXd CM;
  std::optional<Eigen::VectorXd> Cm;
  Eigen::MatrixXd Crest;
  std::size_t m = 0;

  std::size_t M() const noexcept { return static_cast<std::size_t>(C0.size()) + 1; }
  Eigen::VectorXd apply(const Eigen::VectorXd& Ve) const;
  /// Dense (M-1) x (M+1) equivalent acting on V_e.
  Eigen::MatrixXd as_matrix() const;
};

/// (M2-1) x (M-1) matrix of (2 pi / b) int_s^e sin(j pi t/b) sin(l pi t/b) dt
/// in the local frame, j < M2, l < M.
Eigen::MatrixXd sine_product_integrals(const CollocationGrid& grid, std::size_t M2);

/// Continuous kernel: nu = mu(x_k) h(x_k) at interior nodes.
GMap g_map_continuous(const CollocationGrid& grid, const SpectralOperators& ops,
                      const SineSeries2D& C, const Eigen::VectorXd& nu);

/// Singular kernel via double integration by parts onto k2.
GMap g_map_singular(const CollocationGrid& grid, const SpectralOperators& ops,
                    const SingularKernel& kernel, const Eigen::VectorXd& nu);

GMap build_gmap(const CollocationGrid& grid, const SpectralOperators& ops,
                const KernelRepr& kernel, const Eigen::VectorXd& nu);

}  // namespace trigfide
