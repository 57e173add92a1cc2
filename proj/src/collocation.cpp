#include "trigfide/collocation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "trigfide/error.hpp"
#include "trigfide/fft.hpp"
#include "trigfide/sine_series.hpp"

namespace trigfide {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::size_t integral_ratio(double value, const char* name) {
  const double r = std::round(value);
  if (std::abs(value - r) > 1e-9 * std::max(1.0, std::abs(value)) || r < 0.0) {
    std::ostringstream msg;
    msg.precision(12);
    msg << name << " = " << value << " is not an integer; s and e must fall on grid nodes";
    throw CommensurabilityError(msg.str());
  }
  return static_cast<std::size_t>(r);
}

// Cot(p pi / N), zero when p/N is an integer
double cot_index(long p, long N) {
  if (p % N == 0) return 0.0;
  return 1.0 / std::tan(kPi * static_cast<double>(p) / static_cast<double>(N));
}

}  // namespace

CollocationGrid build_grid(double s, double e, double delta, int q) {
  const CutoffSpec spec(s, e, delta);
  if (q < 2 || q > 20) throw InvalidGridError("collocation level q=" + std::to_string(q) + " out of range [2, 20]");
  CollocationGrid g;
  g.q = q;
  g.M = std::size_t{1} << q;
  g.o = spec.origin();
  g.b = spec.half_period();
  g.lambda = g.b / static_cast<double>(g.M);
  const double Md = static_cast<double>(g.M);
  g.m = integral_ratio(Md * delta / g.b, "M*delta/b");
  g.n = integral_ratio(Md * (e - s) / g.b, "M*(e-s)/b");
  if (g.m == 0 || g.n == 0 || g.m + g.n >= g.M) {
    throw CommensurabilityError("need 0 < m < m+n < M");
  }
  g.cutoff = spec;
  return g;
}

double eval_solution(const SolutionSeries& sol, double x) {
  const double xl = x - sol.o;
  const double theta = kPi * xl / sol.b;
  double sum = 0.0;
  for (std::size_t j = 1; j <= sol.B.size(); ++j) {
    const double jd = static_cast<double>(j);
    sum += sol.B[j - 1] / (jd * jd) * std::sin(jd * theta);
  }
  const double scale = sol.b / kPi;
  return sol.a_minus1 + sol.a0 * xl - scale * scale * sum;
}

double eval_solution_derivative(const SolutionSeries& sol, double x) {
  const double theta = kPi * (x - sol.o) / sol.b;
  double sum = 0.0;
  for (std::size_t j = 1; j <= sol.B.size(); ++j) {
    const double jd = static_cast<double>(j);
    sum += sol.B[j - 1] / jd * std::cos(jd * theta);
  }
  return sol.a0 - sol.b / kPi * sum;
}

double eval_solution_second_derivative(const SolutionSeries& sol, double x) {
  const double theta = kPi * (x - sol.o) / sol.b;
  double sum = 0.0;
  for (std::size_t j = 1; j <= sol.B.size(); ++j) {
    sum += sol.B[j - 1] * std::sin(static_cast<double>(j) * theta);
  }
  return sum;
}

Eigen::VectorXd sample_solution(const SolutionSeries& sol, const CollocationGrid& grid) {
  Eigen::VectorXd Ve(idx(grid.M + 1));
  for (std::size_t k = 0; k <= grid.M; ++k) Ve(idx(k)) = eval_solution(sol, grid.node(k));
  return Ve;
}

Eigen::MatrixXd build_theta(std::size_t M) {
  if (M < 4 || !fft::is_power_of_two(M)) {
    throw InvalidGridError("Theta needs M a power of two >= 4, got " + std::to_string(M));
  }
  const Eigen::MatrixXd S = sine_matrix(M);
  Eigen::VectorXd inv_k2(idx(M - 1));
  for (std::size_t k = 1; k < M; ++k) inv_k2(idx(k - 1)) = 1.0 / static_cast<double>(k * k);
  return (2.0 / static_cast<double>(M)) * S * inv_k2.asDiagonal() * S;
}

Eigen::MatrixXd coefficient_map(const CollocationGrid& grid) {
  const std::size_t M = grid.M;
  const double Md = static_cast<double>(M);
  // R V_e = a_{-1} I + a_0 x - V at interior nodes
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(idx(M - 1), idx(M + 1));
  for (std::size_t k = 1; k < M; ++k) {
    const double t = static_cast<double>(k) / Md;
    R(idx(k - 1), 0) = 1.0 - t;
    R(idx(k - 1), idx(M)) = t;
    R(idx(k - 1), idx(k)) = -1.0;
  }
  Eigen::VectorXd k2(idx(M - 1));
  for (std::size_t k = 1; k < M; ++k) k2(idx(k - 1)) = static_cast<double>(k * k);
  const double scale = 2.0 * kPi * kPi / (Md * grid.b * grid.b);
  return scale * (k2.asDiagonal() * (sine_matrix(M) * R));
}

SolutionSeries b_from_v(const CollocationGrid& grid, const Eigen::VectorXd& Ve) {
  if (Ve.size() != idx(grid.M + 1)) {
    throw ShapeError("V_e must have M+1 = " + std::to_string(grid.M + 1) + " entries");
  }
  if (!Ve.allFinite()) throw EvaluationError("V_e contains non-finite values");
  const Eigen::VectorXd B = coefficient_map(grid) * Ve;
  SolutionSeries sol;
  sol.a_minus1 = Ve(0);
  sol.a0 = (Ve(idx(grid.M)) - Ve(0)) / grid.b;
  sol.B.assign(B.data(), B.data() + B.size());
  sol.o = grid.o;
  sol.b = grid.b;
  return sol;
}

Eigen::MatrixXd derivative_matrix_composed(const CollocationGrid& grid) {
  const std::size_t M = grid.M;
  const double Md = static_cast<double>(M);
  // u_k = a_0 - (b/pi) sum_j b_j/j cos(j pi k / M)
  Eigen::MatrixXd Cd(idx(M + 1), idx(M - 1));
  for (std::size_t k = 0; k <= M; ++k) {
    for (std::size_t j = 1; j < M; ++j) {
      const std::size_t r = (j * k) % (2 * M);
      Cd(idx(k), idx(j - 1)) = std::cos(kPi * static_cast<double>(r) / Md) / static_cast<double>(j);
    }
  }
  Eigen::MatrixXd A = (-grid.b / kPi) * (Cd * coefficient_map(grid));
  A.col(0).array() -= 1.0 / grid.b;
  A.col(idx(M)).array() += 1.0 / grid.b;
  return A;
}

Eigen::MatrixXd derivative_matrix_closed_form(const CollocationGrid& grid) {
  const long M = static_cast<long>(grid.M);
  const long N = 2 * M;
  const double b = grid.b;
  const double Md = static_cast<double>(M);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M + 1, M + 1);

  auto alt = [](long k) { return (k % 2 == 0) ? 1.0 : -1.0; };  // I_a = (-1)^k

  double sum_ia_cot = 0.0, sum_ia_k_cot = 0.0, sum_ia_tan = 0.0, sum_k_cot = 0.0;
  for (long k = 1; k < M; ++k) {
    const double c = cot_index(k, N);
    const double t = std::tan(kPi * static_cast<double>(k) / static_cast<double>(N));
    sum_ia_cot += alt(k) * c;
    sum_ia_k_cot += alt(k) * static_cast<double>(k) * c;
    sum_ia_tan += alt(k) * t;
    sum_k_cot += static_cast<double>(k) * c;
  }

  A(0, 0) = kPi / b * sum_ia_cot - kPi / (b * Md) * sum_ia_k_cot - 1.0 / b;
  for (long k = 1; k < M; ++k) A(0, k) = -kPi / b * alt(k) * cot_index(k, N);
  A(0, M) = kPi / (b * Md) * sum_ia_k_cot + 1.0 / b;

  for (long i = 1; i < M; ++i) {
    const double sgn = alt(i);
    double s0 = 0.0, s1 = 0.0;
    for (long k = 1; k < M; ++k) {
      const double c = cot_index(k + i, N) + cot_index(k - i, N);
      s0 += sgn * c * alt(k);
      s1 += sgn * alt(k) * c * static_cast<double>(k);
      A(i, k) = kPi / (2.0 * b) * (-sgn) * alt(k) * c;
    }
    A(i, 0) = kPi / (2.0 * b) * s0 - kPi / (2.0 * b * Md) * s1 - 1.0 / b;
    A(i, M) = kPi / (2.0 * b * Md) * s1 + 1.0 / b;
  }

  A(M, 0) = -kPi / b * sum_ia_tan - kPi / (b * Md) * sum_k_cot - 1.0 / b;
  for (long k = 1; k < M; ++k) {
    A(M, k) = kPi / b * alt(k) * std::tan(kPi * static_cast<double>(k) / static_cast<double>(N));
  }
  A(M, M) = kPi / (b * Md) * sum_k_cot + 1.0 / b;
  return A;
}

Eigen::MatrixXd build_derivative_matrix(const CollocationGrid& grid, double tolerance) {
  Eigen::MatrixXd composed = derivative_matrix_composed(grid);
  const Eigen::MatrixXd closed = derivative_matrix_closed_form(grid);
  const double scale = std::max(composed.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::Index r = 0, c = 0;
  const double dev = (composed - closed).cwiseAbs().maxCoeff(&r, &c) / scale;
  if (!(dev <= tolerance)) {
    std::ostringstream msg;
    msg << "derivative matrix constructions disagree: relative deviation " << dev
        << " at entry (" << r << ", " << c << ")";
    throw ConstructionError(msg.str(), static_cast<std::size_t>(r), static_cast<std::size_t>(c), dev);
  }
  return composed;
}

SpectralOperators SpectralOperators::build(const CollocationGrid& grid) {
  SpectralOperators ops;
  ops.S = sine_matrix(grid.M);
  ops.theta = build_theta(grid.M);
  ops.A = build_derivative_matrix(grid);
  ops.T = coefficient_map(grid);
  ops.K = Eigen::VectorXd::LinSpaced(idx(grid.M - 1), 1.0, static_cast<double>(grid.M - 1));
  return ops;
}

}  // namespace trigfide
