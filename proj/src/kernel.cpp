#include "trigfide/kernel.hpp"

#include <algorithm>

#include "trigfide/error.hpp"

namespace trigfide {

std::string to_string(KernelPath path) {
  return path == KernelPath::Continuous ? "continuous" : "singular";
}

KernelRepr build_kernel_repr(const KernelSpec& spec, KernelPath path,
                             const CollocationGrid& grid, int kernel_q) {
  const int q2 = std::max(grid.q, kernel_q);
  if (path == KernelPath::Continuous) {
    if (!spec.k) throw AssemblyError("kernel '" + spec.label + "' has no k(x,t)");
    return ContinuousKernel{interpolate_2d(spec.k, grid.cutoff, grid.cutoff, grid.q, q2)};
  }
  if (!spec.has_antiderivatives()) {
    throw AssemblyError("kernel '" + spec.label + "' has no antiderivatives k1, k2; singular path unavailable");
  }
  if (!(spec.gamma > -1.0)) throw AssemblyError("singular path needs gamma > -1");
  return SingularKernel{spec.gamma, spec.k, spec.k1, spec.k2,
                        interpolate_2d(spec.k2, grid.cutoff, grid.cutoff, grid.q, q2)};
}

}  // namespace trigfide
