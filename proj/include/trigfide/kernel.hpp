#pragma once

#include <string>
#include <variant>

#include "trigfide/collocation.hpp"
#include "trigfide/interp2d.hpp"

namespace trigfide {

/// Kernel k(x, t) = |x - t|^gamma * kappa(x, t) with kappa smooth. When
/// available, k1 and k2 are the t-antiderivatives used by the singular path:
/// d k1/dt = k, d k2/dt = k1, k1(x, x) = k2(x, x) = 0.
struct KernelSpec {
  std::string label;
  double gamma = 0.0;
  Function2D k;
  Function2D kappa;
  Function2D k1;
  Function2D k2;

  bool has_antiderivatives() const noexcept { return static_cast<bool>(k1) && static_cast<bool>(k2); }
};

enum class KernelPath { Continuous, Singular };

std::string to_string(KernelPath path);

/// 2-D sine interpolant of k itself.
struct ContinuousKernel {
  SineSeries2D C;
};

/// 2-D sine interpolant of the second antiderivative k2, plus the closed forms
/// needed for the boundary terms of the twice-integrated-by-parts integral.
struct SingularKernel {
  double gamma = 0.0;
  Function2D k;
  Function2D k1;
  Function2D k2;
  SineSeries2D C2;
};

using KernelRepr = std::variant<ContinuousKernel, SingularKernel>;

/// Interpolates the kernel (or k2) on the collocation frame with q1 = grid.q
/// in x and q2 = max(grid.q, kernel_q) in t. Throws AssemblyError if the
/// singular path is requested for a kernel without antiderivatives.
KernelRepr build_kernel_repr(const KernelSpec& spec, KernelPath path,
                             const CollocationGrid& grid, int kernel_q);

}  // namespace trigfide
