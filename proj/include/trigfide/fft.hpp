#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace trigfide::fft {

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

/// In-place iterative radix-2 transform. The inverse direction uses e^{+i...}
/// and includes the 1/N factor. Throws InvalidGridError unless the length is a
/// power of two.
void transform(std::span<std::complex<double>> data, bool inverse);

inline void forward(std::span<std::complex<double>> data) { transform(data, false); }
inline void inverse(std::span<std::complex<double>> data) { transform(data, true); }

}  // namespace trigfide::fft
