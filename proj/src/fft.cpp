#include "trigfide/fft.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "trigfide/error.hpp"

namespace trigfide::fft {

void transform(std::span<std::complex<double>> data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw InvalidGridError("fft length " + std::to_string(n) + " is not a power of two");
  }
  if (n == 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t k = 0; k < half; ++k) {
      // twiddles computed directly; a running product drifts at large n
      const std::complex<double> w(std::cos(step * static_cast<double>(k)),
                                   std::sin(step * static_cast<double>(k)));
      for (std::size_t start = 0; start < n; start += len) {
        const std::complex<double> u = data[start + k];
        const std::complex<double> v = w * data[start + k + half];
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }

  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& z : data) z *= scale;
  }
}

}  // namespace trigfide::fft
