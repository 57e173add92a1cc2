#include "trigfide/fide.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "trigfide/error.hpp"
#include "trigfide/quadrature.hpp"

namespace trigfide {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// f(x_k) h(x_k) at interior nodes; f is not evaluated where h vanishes
Eigen::VectorXd cut_samples(const Function1D& f, const CollocationGrid& grid, const char* name) {
  Eigen::VectorXd out(idx(grid.M - 1));
  for (std::size_t k = 1; k < grid.M; ++k) {
    const double x = grid.node(k);
    const double h = cutoff_eval(grid.cutoff, x);
    double v = 0.0;
    if (h != 0.0) {
      const double fx = f(x);
      if (!std::isfinite(fx)) {
        std::ostringstream msg;
        msg << "non-finite " << name << "(" << x << ") at node " << k;
        throw EvaluationError(msg.str());
      }
      v = h * fx;
    }
    out(idx(k - 1)) = v;
  }
  return out;
}

template <typename Fn>
auto run_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& ex) {
    throw StageError(stage, ex.what());
  }
}

SolutionSeries random_series(const CollocationGrid& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  SolutionSeries sol;
  sol.o = grid.o;
  sol.b = grid.b;
  sol.a_minus1 = unit(rng);
  sol.a0 = unit(rng);
  sol.B.resize(grid.M - 1);
  for (auto& v : sol.B) v = unit(rng);
  return sol;
}

// I_j = int_s^e sin(j pi (t-o)/b) v(t) dt, j = 1..M2-1, by composite
// Gauss-Legendre, two periods of the highest mode per 32-point panel
Eigen::VectorXd mode_integrals(const SolutionSeries& v, double s, double e, double o, double b, std::size_t M2) {
  const double cycles = static_cast<double>(M2) * (e - s) / (2.0 * b);
  const int panels = std::max(8, static_cast<int>(std::ceil(cycles / 2.0)));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(idx(M2 - 1));
  const double width = (e - s) / panels;
  const auto& rule = quad::gauss_legendre_rule();
  for (int p = 0; p < panels; ++p) {
    const double mid = s + (p + 0.5) * width;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double t = mid + 0.5 * width * rule.nodes[q];
      const double w = 0.5 * width * rule.weights[q] * eval_solution(v, t);
      const std::complex<double> step = std::polar(1.0, kPi * (t - o) / b);
      std::complex<double> z = step;
      for (std::size_t j = 1; j < M2; ++j) {
        out(idx(j - 1)) += w * z.imag();
        z *= step;
      }
    }
  }
  return out;
}

// smallest level >= 3 (or 2) at which s and e land on nodes
std::optional<CollocationGrid> coarse_grid(const FideProblem& problem, int q) {
  for (int qc : {3, 2}) {
    if (qc > q) continue;
    try {
      return build_grid(problem.s, problem.e, problem.delta, qc);
    } catch (const CommensurabilityError&) {
    }
  }
  for (int qc = 4; qc <= q; ++qc) {
    try {
      return build_grid(problem.s, problem.e, problem.delta, qc);
    } catch (const CommensurabilityError&) {
    }
  }
  return std::nullopt;
}

}  // namespace

void BoundarySpec::validate() const {
  // singular values of the 2x4 D from the eigenvalues of D D^T
  Eigen::Matrix<double, 2, 4> Dm;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) Dm(i, j) = D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (!Dm.allFinite() || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw AssemblyError("boundary data must be finite");
  }
  const Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(Dm);
  const auto sv = svd.singularValues();
  if (!(sv(1) > 1e-10 * sv(0))) throw AssemblyError("boundary matrix D must have rank 2");
}

Eigen::VectorXd nu_samples(const FideProblem& problem, const CollocationGrid& grid) {
  return cut_samples(problem.mu, grid, "mu");
}

LinearSystem assemble_system(const FideProblem& problem, const CollocationGrid& grid,
                             const SpectralOperators& ops, const GMap& gmap) {
  problem.bc.validate();
  const std::size_t M = grid.M;
  if (gmap.M() != M) throw AssemblyError("G-map built for a different grid");
  const double Md = static_cast<double>(M);
  const double b2 = grid.b * grid.b;

  const Eigen::VectorXd P = cut_samples(problem.p, grid, "p");
  const Eigen::VectorXd Q = cut_samples(problem.q, grid, "q");
  const Eigen::VectorXd R = cut_samples(problem.r, grid, "r");

  // right side of the collocated ODE as a map on V_e: Q o V + P o U + G
  Eigen::MatrixXd rhs = gmap.as_matrix();
  rhs += P.asDiagonal() * ops.A.middleRows(1, idx(M - 1));
  rhs.middleCols(1, idx(M - 1)).diagonal() += Q;

  LinearSystem sys;
  sys.Phi = Eigen::MatrixXd::Zero(idx(M + 1), idx(M + 1));
  sys.Psi = Eigen::VectorXd::Zero(idx(M + 1));

  auto interior = sys.Phi.middleRows(1, idx(M - 1));
  interior = ops.theta * rhs;
  for (std::size_t k = 1; k < M; ++k) {
    const auto i = idx(k);
    const double kd = static_cast<double>(k);
    interior(i - 1, 0) -= kPi * kPi * (Md - kd) / (Md * b2);
    interior(i - 1, idx(M)) -= kPi * kPi * kd / (Md * b2);
    interior(i - 1, i) += kPi * kPi / b2;
  }
  sys.Psi.segment(1, idx(M - 1)) = -(ops.theta * R);

  const auto m = idx(grid.m);
  const auto me = idx(grid.m + grid.n);
  for (int row = 0; row < 2; ++row) {
    const auto& d = problem.bc.D[static_cast<std::size_t>(row)];
    const auto r = row == 0 ? Eigen::Index{0} : idx(M);
    sys.Phi.row(r) = d[1] * ops.A.row(m) + d[3] * ops.A.row(me);
    sys.Phi(r, m) += d[0];
    sys.Phi(r, me) += d[2];
    sys.Psi(r) = row == 0 ? problem.bc.alpha : problem.bc.beta;
  }
  return sys;
}

DenseSolution solve_dense(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& Psi) {
  if (Phi.rows() != Phi.cols() || Phi.rows() != Psi.size()) {
    throw ShapeError("solve_dense needs a square system with matching right side");
  }
  if (!Phi.allFinite() || !Psi.allFinite()) throw EvaluationError("system contains non-finite entries");
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(Phi);
  const auto diag = lu.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (diag(i) == 0.0) {
      throw SingularSystemError("exact zero pivot at column " + std::to_string(i));
    }
  }
  DenseSolution out;
  out.x = lu.solve(Psi);
  out.rcond = lu.rcond();
  const double denom = Phi.lpNorm<Eigen::Infinity>() * out.x.lpNorm<Eigen::Infinity>();
  out.backward_error = denom > 0.0 ? (Phi * out.x - Psi).lpNorm<Eigen::Infinity>() / denom : 0.0;
  out.ill_conditioned = out.rcond < 1e-12;
  return out;
}

OracleReport check_gmap_against_quadrature(const FideProblem& problem, const CollocationGrid& grid,
                                           const SpectralOperators& ops, const KernelRepr& repr,
                                           const GMap& gmap, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::VectorXd nu = nu_samples(problem, grid);
  const double s = grid.cutoff.s, e = grid.cutoff.e;
  const auto* cont = std::get_if<ContinuousKernel>(&repr);
  Eigen::MatrixXd eta;
  if (cont) eta = ops.S * cont->C.coeffs;

  OracleReport report;
  for (int trial = 0; trial < trials; ++trial) {
    const SolutionSeries v = random_series(grid, rng);
    const Eigen::VectorXd G = gmap.apply(sample_solution(v, grid));
    // continuous path: int_s^e sin(j pi (t-o)/b) v(t) dt for every t-mode j,
    // shared by all nodes
    Eigen::VectorXd modes;
    if (cont) modes = mode_integrals(v, s, e, grid.o, grid.b, cont->C.m2());
    Eigen::VectorXd ref(idx(grid.M - 1));
    for (std::size_t k = 1; k < grid.M; ++k) {
      const double x = grid.node(k);
      const auto i = idx(k - 1);
      if (nu(i) == 0.0) {
        ref(i) = 0.0;
      } else if (cont) {
        ref(i) = nu(i) * eta.row(i).dot(modes);
      } else {
        const auto& ker = problem.kernel;
        auto integrand = [&](double t) { return ker.kappa(x, t) * eval_solution(v, t); };
        ref(i) = nu(i) * cutoff_eval(grid.cutoff, x) * quad::weighted_singular(x, ker.gamma, integrand, s, e);
      }
    }
    const double scale = std::max(ref.cwiseAbs().maxCoeff(), 1e-300);
    Eigen::Index worst = 0;
    const double dev = (G - ref).cwiseAbs().maxCoeff(&worst) / scale;
    if (trial == 0 || dev > report.deviation) {
      report.deviation = dev;
      report.worst_node = static_cast<std::size_t>(worst) + 1;
    }
  }
  return report;
}

FideSolution solve_fide(const FideProblem& problem, int q) {
  const CollocationGrid grid =
      run_stage("grid", [&] { return build_grid(problem.s, problem.e, problem.delta, q); });
  const SpectralOperators ops = run_stage("operators", [&] { return SpectralOperators::build(grid); });
  const KernelRepr repr = run_stage(
      "kernel", [&] { return build_kernel_repr(problem.kernel, problem.path, grid, problem.kernel_q); });
  const GMap gmap = run_stage("gmap", [&] { return build_gmap(grid, ops, repr, nu_samples(problem, grid)); });

  double validation_deviation = 0.0;
  if (problem.validate) {
    validation_deviation = run_stage("validation", [&] {
      const auto coarse = coarse_grid(problem, q);
      if (!coarse) return 0.0;
      const SpectralOperators cops = SpectralOperators::build(*coarse);
      // the continuous oracle integrates the interpolant itself, so a coarse
      // t-level exercises the same formulas at a fraction of the cost
      const bool singular = problem.path == KernelPath::Singular;
      const int kq = singular ? problem.kernel_q : coarse->q + 3;
      const KernelRepr crepr = build_kernel_repr(problem.kernel, problem.path, *coarse, kq);
      const GMap cg = build_gmap(*coarse, cops, crepr, nu_samples(problem, *coarse));
      const OracleReport rep = check_gmap_against_quadrature(problem, *coarse, cops, crepr, cg, 3, 0);
      const double tol = singular ? 1e-6 : 1e-8;
      if (!(rep.deviation <= tol)) {
        std::ostringstream msg;
        msg << "G-map deviates from quadrature by " << rep.deviation << " (tolerance " << tol
            << ") at node " << rep.worst_node << " of the M=" << coarse->M << " check grid";
        throw ValidationError(msg.str(), rep.worst_node, rep.deviation);
      }
      return rep.deviation;
    });
  }

  const LinearSystem sys = run_stage("assembly", [&] { return assemble_system(problem, grid, ops, gmap); });
  const DenseSolution sol = run_stage("solve", [&] {
    DenseSolution out = solve_dense(sys.Phi, sys.Psi);
    if (out.rcond < 1e-14) {
      std::ostringstream msg;
      msg << "collocation system is numerically singular (condition estimate " << 1.0 / out.rcond << ")";
      throw SingularSystemError(msg.str());
    }
    return out;
  });

  FideSolution out{b_from_v(grid, sol.x), grid, sol.x, sol.rcond, sol.backward_error,
                   validation_deviation};
  return out;
}

}  // namespace trigfide
