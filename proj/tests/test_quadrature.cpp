#include <doctest.h>

#include <cmath>

#include "trigfide/quadrature.hpp"

using namespace trigfide;

TEST_CASE("32-point rule integrates degree-63 polynomials exactly") {
  auto p = [](double t) { return std::pow(t, 63) + 3.0 * std::pow(t, 62) - t + 2.0; };
  // over [0, 1]: 1/64 + 3/63 - 1/2 + 2
  CHECK(quad::gauss_legendre(p, 0.0, 1.0) == doctest::Approx(1.0 / 64 + 3.0 / 63 - 0.5 + 2.0).epsilon(1e-14));
  CHECK(quad::gauss_legendre([](double) { return 1.0; }, -2.0, 5.0, 7) == doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("composite rule converges for oscillatory integrands") {
  auto f = [](double t) { return std::cos(40.0 * t); };
  CHECK(quad::gauss_legendre(f, 0.0, 2.0, 8) == doctest::Approx(std::sin(80.0) / 40.0).epsilon(1e-13).scale(1.0));
}

TEST_CASE("singular weight against closed-form moments") {
  // int_lo^hi |t - x|^g t^2 dt, expanding t = x + tau on each side
  auto exact = [](double x, double g, double lo, double hi) {
    auto side = [&](double L, double sign) {  // int_0^L tau^g (x + sign tau)^2 dtau
      return x * x * std::pow(L, g + 1) / (g + 1) + 2 * sign * x * std::pow(L, g + 2) / (g + 2) +
             std::pow(L, g + 3) / (g + 3);
    };
    return side(hi - x, 1.0) + side(x - lo, -1.0);
  };
  auto t2 = [](double t) { return t * t; };
  for (double g : {-0.9, -0.5, 0.0, 0.5, 1.5}) {
    for (double x : {1.0, 1.37, 2.0, 2.999}) {
      CAPTURE(g);
      CAPTURE(x);
      CHECK(quad::weighted_singular(x, g, t2, 1.0, 3.0) == doctest::Approx(exact(x, g, 1.0, 3.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("singular weight with x outside the interval") {
  // int_1^3 (t - 0.5)^{-1/2} dt = 2 (sqrt(2.5) - sqrt(0.5))
  auto one = [](double) { return 1.0; };
  CHECK(quad::weighted_singular(0.5, -0.5, one, 1.0, 3.0) ==
        doctest::Approx(2.0 * (std::sqrt(2.5) - std::sqrt(0.5))).epsilon(1e-13));
  CHECK(quad::weighted_singular(3.5, -0.5, one, 1.0, 3.0) ==
        doctest::Approx(2.0 * (std::sqrt(2.5) - std::sqrt(0.5))).epsilon(1e-13));
}

TEST_CASE("smooth factor with a log-type challenge") {
  // int_0^1 t^{-0.9} e^t dt = sum_n 1 / (n! (n + 0.1))
  double ref = 0.0, fact = 1.0;
  for (int n = 0; n < 30; ++n) {
    if (n > 0) fact *= n;
    ref += 1.0 / (fact * (n + 0.1));
  }
  CHECK(quad::weighted_singular(0.0, -0.9, [](double t) { return std::exp(t); }, 0.0, 1.0) ==
        doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("gamma must exceed -1") {
  CHECK_THROWS(quad::weighted_singular(0.0, -1.0, [](double) { return 1.0; }, 0.0, 1.0));
}
