#include "trigfide/gmap.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "trigfide/error.hpp"

namespace trigfide {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// sin/cos(pi p / M) for integer p, tabulated over one period 2M
class AngleTable {
 public:
  explicit AngleTable(std::size_t M) : period_(static_cast<long>(2 * M)), sin_(2 * M), cos_(2 * M) {
    for (std::size_t r = 0; r < 2 * M; ++r) {
      const double a = kPi * static_cast<double>(r) / static_cast<double>(M);
      sin_[r] = std::sin(a);
      cos_[r] = std::cos(a);
    }
  }
  double sin(long p) const { return sin_[reduce(p)]; }
  double cos(long p) const { return cos_[reduce(p)]; }

 private:
  std::size_t reduce(long p) const {
    long r = p % period_;
    if (r < 0) r += period_;
    return static_cast<std::size_t>(r);
  }
  long period_;
  std::vector<double> sin_, cos_;
};

void check_frames(const CollocationGrid& grid, const SineSeries2D& C) {
  const double tol = 1e-12 * grid.b;
  auto same = [&](double a, double b) { return std::abs(a - b) <= tol; };
  if (C.m1() != grid.M) {
    throw AssemblyError("kernel x-resolution " + std::to_string(C.m1()) +
                        " does not match collocation M = " + std::to_string(grid.M));
  }
  if (C.m2() < grid.M) throw AssemblyError("kernel t-resolution coarser than the collocation grid");
  if (!same(C.o1(), grid.o) || !same(C.b1(), grid.b) || !same(C.o2(), grid.o) || !same(C.b2(), grid.b)) {
    throw AssemblyError("kernel frame does not match the collocation frame");
  }
}

void check_nu(const CollocationGrid& grid, const Eigen::VectorXd& nu) {
  if (nu.size() != idx(grid.M - 1)) throw ShapeError("nu must have M-1 entries");
}

// eta(k, j) = sum_i c_ij sin(i pi k / M): the kernel's t-series at node x_k
Eigen::MatrixXd node_rows(const SpectralOperators& ops, const SineSeries2D& C) {
  return ops.S * C.coeffs;
}

}  // namespace

Eigen::VectorXd GMap::apply(const Eigen::VectorXd& Ve) const {
  const std::size_t Mv = M();
  if (Ve.size() != idx(Mv + 1)) throw ShapeError("V_e must have M+1 entries");
  Eigen::VectorXd G = C0 * Ve(0) + CM * Ve(idx(Mv)) + Crest * Ve.segment(1, idx(Mv - 1));
  if (Cm) G += *Cm * Ve(idx(m));
  return G;
}

Eigen::MatrixXd GMap::as_matrix() const {
  const std::size_t Mv = M();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(idx(Mv - 1), idx(Mv + 1));
  out.col(0) = C0;
  out.col(idx(Mv)) = CM;
  out.middleCols(1, idx(Mv - 1)) = Crest;
  if (Cm) out.col(idx(m)) += *Cm;
  return out;
}

Eigen::MatrixXd sine_product_integrals(const CollocationGrid& grid, std::size_t M2) {
  const std::size_t M = grid.M;
  const AngleTable ang(M);
  const long m = static_cast<long>(grid.m);
  const long e_idx = static_cast<long>(grid.m + grid.n);
  const double diag = kPi * static_cast<double>(grid.n) / static_cast<double>(M);
  auto window = [&](long p) { return ang.sin(p * e_idx) - ang.sin(p * m); };

  Eigen::MatrixXd W(idx(M2 - 1), idx(M - 1));
  for (std::size_t j = 1; j < M2; ++j) {
    const long jl = static_cast<long>(j);
    for (std::size_t l = 1; l < M; ++l) {
      const long ll = static_cast<long>(l);
      double w = -window(jl + ll) / static_cast<double>(jl + ll);
      w += (jl == ll) ? diag : window(jl - ll) / static_cast<double>(jl - ll);
      W(idx(j - 1), idx(l - 1)) = w;
    }
  }
  return W;
}

GMap g_map_continuous(const CollocationGrid& grid, const SpectralOperators& ops,
                      const SineSeries2D& C, const Eigen::VectorXd& nu) {
  check_frames(grid, C);
  check_nu(grid, nu);
  const std::size_t M = grid.M;
  const std::size_t M2 = C.m2();
  const double Md = static_cast<double>(M);
  const double b = grid.b;
  const double s = grid.s_local();
  const double e = grid.e_local();
  const AngleTable ang(M);
  const long m = static_cast<long>(grid.m);
  const long e_idx = static_cast<long>(grid.m + grid.n);

  // int_s^e sin(j pi t/b) dt = (b/(pi j)) w_{-1}(j);  int_s^e t sin(j pi t/b) dt = (b/(pi j)) w_0(j)
  Eigen::VectorXd w_m1(idx(M2 - 1)), w_0(idx(M2 - 1));
  for (std::size_t j = 1; j < M2; ++j) {
    const long jl = static_cast<long>(j);
    const double jd = static_cast<double>(j);
    const double cs = ang.cos(jl * m), ce = ang.cos(jl * e_idx);
    w_m1(idx(j - 1)) = cs - ce;
    w_0(idx(j - 1)) = s * cs - e * ce + b / (kPi * jd) * (ang.sin(jl * e_idx) - ang.sin(jl * m));
  }

  const Eigen::MatrixXd eta = node_rows(ops, C);
  Eigen::VectorXd inv_j(idx(M2 - 1));
  for (std::size_t j = 1; j < M2; ++j) inv_j(idx(j - 1)) = 1.0 / static_cast<double>(j);
  const Eigen::MatrixXd eta_hat = eta * inv_j.asDiagonal();

  // H = eta W diag(K^2) S; W diag(K^2) is the plain sine-product matrix
  const Eigen::MatrixXd H = (eta * sine_product_integrals(grid, M2)) * ops.S;
  const Eigen::VectorXd HI = H.rowwise().sum();
  const Eigen::VectorXd HK = H * ops.K;

  GMap g;
  g.m = grid.m;
  g.CM = (b / kPi) * nu.cwiseProduct(eta_hat * w_0 / b - HK / (Md * Md));
  g.C0 = (b / kPi) * nu.cwiseProduct(eta_hat * w_m1 - HI / Md) - g.CM;
  g.Crest = (b / (kPi * Md)) * (nu.asDiagonal() * H);
  return g;
}

GMap g_map_singular(const CollocationGrid& grid, const SpectralOperators& ops,
                    const SingularKernel& kernel, const Eigen::VectorXd& nu) {
  check_frames(grid, kernel.C2);
  check_nu(grid, nu);
  const std::size_t M = grid.M;
  const double Md = static_cast<double>(M);
  const double b = grid.b;
  const double s = grid.cutoff.s;
  const double e = grid.cutoff.e;
  const std::size_t me = grid.m + grid.n;

  // boundary terms of the twice-integrated-by-parts integral, times h(x_k)
  Eigen::VectorXd k1s(idx(M - 1)), k1e(idx(M - 1)), k2s(idx(M - 1)), k2e(idx(M - 1));
  for (std::size_t k = 1; k < M; ++k) {
    const double x = grid.node(k);
    const double h = cutoff_eval(grid.cutoff, x);
    const auto i = idx(k - 1);
    k1s(i) = h * kernel.k1(x, s);
    k1e(i) = h * kernel.k1(x, e);
    k2s(i) = h * kernel.k2(x, s);
    k2e(i) = h * kernel.k2(x, e);
  }
  if (!k1s.allFinite() || !k1e.allFinite() || !k2s.allFinite() || !k2e.allFinite()) {
    throw EvaluationError("non-finite antiderivative value at a collocation node");
  }

  const Eigen::MatrixXd eta = node_rows(ops, kernel.C2);
  const Eigen::VectorXd k2sq = ops.K.cwiseProduct(ops.K);
  const Eigen::MatrixXd H =
      (eta * sine_product_integrals(grid, kernel.C2.m2())) * (k2sq.asDiagonal() * ops.S);
  const Eigen::VectorXd HI = H.rowwise().sum();
  const Eigen::VectorXd HK = H * ops.K;

  const Eigen::VectorXd nu_k2s = nu.cwiseProduct(k2s);
  const Eigen::VectorXd nu_k2e = nu.cwiseProduct(k2e);
  const auto& A = ops.A;
  const auto Mi = idx(M);

  GMap g;
  g.m = grid.m;
  g.C0 = (kPi / b) * nu.cwiseProduct(HI / Md - HK / (Md * Md)) + A(idx(grid.m), 0) * nu_k2s -
         A(idx(me), 0) * nu_k2e;
  g.CM = (kPi / (b * Md * Md)) * nu.cwiseProduct(HK) + A(idx(grid.m), Mi) * nu_k2s -
         A(idx(me), Mi) * nu_k2e;
  g.Cm = -nu.cwiseProduct(k1s);
  g.Crest = -(kPi / (b * Md)) * (nu.asDiagonal() * H);
  g.Crest += nu_k2s * A.row(idx(grid.m)).segment(1, idx(M - 1));
  g.Crest -= nu_k2e * A.row(idx(me)).segment(1, idx(M - 1));
  g.Crest.col(idx(me - 1)) += nu.cwiseProduct(k1e);
  return g;
}

GMap build_gmap(const CollocationGrid& grid, const SpectralOperators& ops,
                const KernelRepr& kernel, const Eigen::VectorXd& nu) {
  return std::visit(
      [&](const auto& repr) -> GMap {
        using T = std::decay_t<decltype(repr)>;
        if constexpr (std::is_same_v<T, ContinuousKernel>) {
          return g_map_continuous(grid, ops, repr.C, nu);
        } else {
          return g_map_singular(grid, ops, repr, nu);
        }
      },
      kernel);
}

}  // namespace trigfide
