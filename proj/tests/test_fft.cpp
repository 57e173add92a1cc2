#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "trigfide/error.hpp"
#include "trigfide/fft.hpp"

using cd = std::complex<double>;

namespace {

// O(N^2) reference with the same sign and scaling conventions
std::vector<cd> naive_dft(const std::vector<cd>& x, bool inverse) {
  const std::size_t n = x.size();
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cd acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      acc += x[j] * std::polar(1.0, ang);
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

std::vector<cd> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> v(n);
  for (auto& z : v) z = {u(rng), u(rng)};
  return v;
}

double max_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("fft matches the naive DFT in both directions") {
  for (std::size_t n : {1u, 2u, 4u, 8u, 32u, 128u}) {
    for (bool inverse : {false, true}) {
      auto x = random_vector(n, static_cast<unsigned>(n));
      const auto ref = naive_dft(x, inverse);
      trigfide::fft::transform(x, inverse);
      CAPTURE(n);
      CHECK(max_diff(x, ref) < 1e-12 * static_cast<double>(n));
    }
  }
}

TEST_CASE("forward then inverse is the identity") {
  const auto x0 = random_vector(1024, 7);
  auto x = x0;
  trigfide::fft::forward(x);
  trigfide::fft::inverse(x);
  CHECK(max_diff(x, x0) < 1e-14);
}

TEST_CASE("unit impulse transforms to a constant") {
  std::vector<cd> x(16, 0.0);
  x[0] = 1.0;
  trigfide::fft::forward(x);
  for (const auto& z : x) CHECK(std::abs(z - cd(1.0)) == doctest::Approx(0.0));
}

TEST_CASE("non power of two lengths are rejected") {
  std::vector<cd> x(12);
  CHECK_THROWS_AS(trigfide::fft::forward(x), trigfide::InvalidGridError);
  std::vector<cd> empty;
  CHECK_THROWS_AS(trigfide::fft::inverse(empty), trigfide::InvalidGridError);
  CHECK(trigfide::fft::is_power_of_two(64));
  CHECK_FALSE(trigfide::fft::is_power_of_two(96));
}
