#include "trigfide/quadrature.hpp"

#include <array>
#include <cmath>

#include <boost/math/special_functions/legendre.hpp>

#include "trigfide/error.hpp"

namespace trigfide::quad {

namespace {

constexpr int kOrder = kGaussOrder;
constexpr int kGradedPanels = 48;
constexpr double kGrading = 0.3;

}  // namespace

const GaussRule& gauss_legendre_rule() {
  static const GaussRule r = [] {
    GaussRule out;
    const auto zeros = boost::math::legendre_p_zeros<double>(kOrder);  // non-negative half
    std::size_t i = 0;
    for (double z : zeros) {
      const double dp = boost::math::legendre_p_prime<double>(kOrder, z);
      const double w = 2.0 / ((1.0 - z * z) * dp * dp);
      out.nodes[i] = z;
      out.weights[i] = w;
      ++i;
      out.nodes[i] = -z;
      out.weights[i] = w;
      ++i;
    }
    return out;
  }();
  return r;
}

namespace {

double panel(const Integrand& g, double a, double b) {
  const GaussRule& r = gauss_legendre_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kOrder; ++i) sum += r.weights[i] * g(mid + half * r.nodes[i]);
  return half * sum;
}

// int_0^L tau^gamma g(tau) dtau via u = tau^(1+gamma)
double one_sided(double gamma, const Integrand& g, double L) {
  if (L <= 0.0) return 0.0;
  const double p = 1.0 + gamma;
  const double alpha = 1.0 / p;
  const double U = std::pow(L, p);
  auto mapped = [&](double u) { return g(std::pow(u, alpha)); };
  double total = 0.0;
  double hi = U;
  for (int i = 0; i < kGradedPanels; ++i) {
    const double lo = hi * kGrading;
    total += panel(mapped, lo, hi);
    hi = lo;
  }
  // the remaining [0, hi] sliver is below 1e-25 of U
  return total / p;
}

}  // namespace

double gauss_legendre(const Integrand& g, double lo, double hi, int panels) {
  if (panels < 1) panels = 1;
  const double width = (hi - lo) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) sum += panel(g, lo + i * width, lo + (i + 1) * width);
  return sum;
}

double weighted_singular(double x, double gamma, const Integrand& g, double lo, double hi) {
  if (!(gamma > -1.0)) throw Error("weighted_singular needs gamma > -1");
  if (hi < lo) return -weighted_singular(x, gamma, g, hi, lo);
  // right side: t = x + tau, tau in [max(lo-x,0), hi-x]
  auto right = [&](double tau) { return g(x + tau); };
  auto left = [&](double tau) { return g(x - tau); };
  double total = 0.0;
  if (hi > x) {
    const double a = std::max(lo - x, 0.0);
    total += one_sided(gamma, right, hi - x) - one_sided(gamma, right, a);
  }
  if (lo < x) {
    const double a = std::max(x - hi, 0.0);
    total += one_sided(gamma, left, x - lo) - one_sided(gamma, left, a);
  }
  return total;
}

}  // namespace trigfide::quad
