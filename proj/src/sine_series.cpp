#include "trigfide/sine_series.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "trigfide/error.hpp"
#include "trigfide/fft.hpp"

namespace trigfide {

namespace {

// a_j = (-1)^j * 2 * Im(ifft(y))_j, 0 < j < M
std::vector<double> coeffs_from_ifft(std::vector<std::complex<double>>& work) {
  fft::inverse(work);
  const std::size_t M = work.size() / 2;
  std::vector<double> a(M - 1);
  for (std::size_t j = 1; j < M; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    a[j - 1] = sign * 2.0 * work[j].imag();
  }
  return a;
}

}  // namespace

UniformGrid1D UniformGrid1D::make(std::size_t n, double b, double o) {
  if (n < 4 || !fft::is_power_of_two(n)) {
    throw InvalidGridError("node count " + std::to_string(n) +
                           " must be a power of two >= 4");
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw InvalidGridError("half-period must be positive and finite");
  }
  return UniformGrid1D{n, b, o, 2.0 * b / static_cast<double>(n)};
}

UniformGrid1D UniformGrid1D::from_level(int q, double b, double o) {
  if (q < 1 || q > 28) throw InvalidGridError("grid level q=" + std::to_string(q) + " out of range");
  return make(std::size_t{1} << (q + 1), b, o);
}

double SineSeries::operator()(double x) const { return eval_sine_series(*this, x); }

SineSeries forward_sine_coeffs(std::span<const double> samples, const UniformGrid1D& grid) {
  if (grid.n < 4 || !fft::is_power_of_two(grid.n)) {
    throw InvalidGridError("node count " + std::to_string(grid.n) +
                           " must be a power of two >= 4");
  }
  if (samples.size() != grid.n) {
    throw ShapeError("expected " + std::to_string(grid.n) + " samples, got " +
                     std::to_string(samples.size()));
  }
  std::vector<std::complex<double>> work(samples.begin(), samples.end());
  return SineSeries{grid.b, grid.o, coeffs_from_ifft(work)};
}

std::vector<double> sine_coeffs_from_half(std::span<const double> positive_half) {
  const std::size_t M = positive_half.size() + 1;
  if (M < 2 || !fft::is_power_of_two(M)) {
    throw InvalidGridError("half-grid size " + std::to_string(M) + " must be a power of two >= 2");
  }
  const std::size_t N = 2 * M;
  // nodes x_j = -b + j*lambda: j < M is the mirrored negative half, j = 0, M are zeros
  std::vector<std::complex<double>> work(N, 0.0);
  for (std::size_t k = 1; k < M; ++k) {
    work[M + k] = positive_half[k - 1];
    work[M - k] = -positive_half[k - 1];
  }
  return coeffs_from_ifft(work);
}

double eval_sine_series(const SineSeries& series, double x) {
  const double theta = std::numbers::pi * (x - series.o) / series.b;
  double sum = 0.0;
  for (std::size_t j = 0; j < series.coeffs.size(); ++j) {
    sum += series.coeffs[j] * std::sin(static_cast<double>(j + 1) * theta);
  }
  return sum;
}

Eigen::MatrixXd sine_matrix(std::size_t M) {
  if (M < 2) throw InvalidGridError("sine matrix needs M >= 2, got " + std::to_string(M));
  const std::size_t N = 2 * M;
  Eigen::MatrixXd S(M - 1, M - 1);
  for (std::size_t j = 1; j < M; ++j) {
    for (std::size_t k = j; k < M; ++k) {
      // reduce jk mod N so the argument stays in [0, 2 pi)
      const std::size_t r = (j * k) % N;
      const double v = std::sin(2.0 * std::numbers::pi * static_cast<double>(r) /
                                static_cast<double>(N));
      S(j - 1, k - 1) = v;
      S(k - 1, j - 1) = v;
    }
  }
  return S;
}

}  // namespace trigfide
