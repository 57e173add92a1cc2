#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace trigfide {

/// N equispaced nodes x_j = -b + j*spacing, j = 0..N-1, on the frame [-b, b)
/// shifted by o.
struct UniformGrid1D {
  std::size_t n = 0;
  double b = 1.0;
  double o = 0.0;
  double spacing = 0.0;

  /// Throws InvalidGridError unless n is a power of two >= 4 and b > 0.
  static UniformGrid1D make(std::size_t n, double b, double o = 0.0);
  /// Grid with N = 2^(q+1) nodes.
  static UniformGrid1D from_level(int q, double b, double o = 0.0);

  std::size_t half() const noexcept { return n / 2; }
  /// Frame-local node position.
  double node(std::size_t j) const noexcept {
    return -b + static_cast<double>(j) * spacing;
  }
};

/// Odd, 2b-periodic trigonometric polynomial sum_{0<j<M} a_j sin(j pi (x-o)/b).
/// coeffs[j-1] holds a_j.
struct SineSeries {
  double b = 1.0;
  double o = 0.0;
  std::vector<double> coeffs;

  std::size_t degree_bound() const noexcept { return coeffs.size() + 1; }
  double operator()(double x) const;
};

/// Interpolating sine coefficients of N samples taken at the grid nodes,
/// computed with one inverse FFT.
SineSeries forward_sine_coeffs(std::span<const double> samples, const UniformGrid1D& grid);

/// Sine coefficients from the positive-half samples F(k*b/M), k = 1..M-1, of an
/// odd function (the negative half and the zeros at 0, b are implied). M must
/// be a power of two >= 2. Output has M-1 entries.
std::vector<double> sine_coeffs_from_half(std::span<const double> positive_half);

double eval_sine_series(const SineSeries& series, double x);

/// S = (sin(2 pi j k / N)), 1 <= j,k < M, N = 2M.
Eigen::MatrixXd sine_matrix(std::size_t M);

}  // namespace trigfide
