#pragma once

#include <array>
#include <functional>

namespace trigfide::quad {

using Integrand = std::function<double(double)>;

constexpr int kGaussOrder = 32;

struct GaussRule {
  std::array<double, kGaussOrder> nodes{};  ///< on [-1, 1]
  std::array<double, kGaussOrder> weights{};
};

const GaussRule& gauss_legendre_rule();

/// Composite 32-point Gauss-Legendre over `panels` equal panels of [lo, hi].
double gauss_legendre(const Integrand& g, double lo, double hi, int panels = 1);

/// int_lo^hi |t - x|^gamma g(t) dt for gamma > -1 and smooth g. Splits at
/// t = x when x is inside, substitutes u = |t - x|^(1+gamma) on each side and
/// grades panels geometrically toward u = 0. Accurate to ~1e-12 relative for
/// analytic g.
double weighted_singular(double x, double gamma, const Integrand& g, double lo, double hi);

}  // namespace trigfide::quad
