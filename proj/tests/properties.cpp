// Randomised invariants. Usage: trigfide_properties [--seed N] [doctest options]

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "trigfide/fide.hpp"
#include "trigfide/problems.hpp"
#include "trigfide/sine_series.hpp"

using namespace trigfide;

namespace {

std::uint64_t g_seed = 0;

std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(g_seed * 0x9E3779B97F4A7C15ULL + salt); }

// random commensurable layout: delta = m lambda and e - s = (M - 2m) lambda
CollocationGrid random_grid(std::mt19937_64& rng, int q) {
  const std::size_t M = std::size_t{1} << q;
  std::uniform_int_distribution<std::size_t> pick_m(1, M / 2 - 1);
  const std::size_t m = pick_m(rng);
  std::uniform_real_distribution<double> ub(1.0, 6.0), uo(-2.0, 2.0);
  const double b = ub(rng), o = uo(rng);
  const double lambda = b / static_cast<double>(M);
  const double delta = static_cast<double>(m) * lambda;
  const double s = o + delta;
  const double e = s + static_cast<double>(M - 2 * m) * lambda;
  return build_grid(s, e, delta, q);
}

}  // namespace

TEST_CASE("sine transform round trip") {
  auto rng = rng_for(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int q = 2; q <= 10; ++q) {
    const std::size_t M = std::size_t{1} << q;
    std::vector<double> half(M - 1);
    for (auto& v : half) v = u(rng);
    const SineSeries s{2.0, 0.5, sine_coeffs_from_half(half)};
    double err = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
      err = std::max(err, std::abs(s(s.o + static_cast<double>(k) * s.b / static_cast<double>(M)) - half[k - 1]));
    }
    CAPTURE(q);
    CHECK(err <= 1e-12);
  }
}

TEST_CASE("S*S = (M/2) I") {
  for (std::size_t M = 4; M <= 256; M *= 2) {
    const Eigen::MatrixXd S = sine_matrix(M);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(S.rows(), S.cols());
    CAPTURE(M);
    CHECK((S * S - 0.5 * static_cast<double>(M) * I).cwiseAbs().maxCoeff() <= 1e-11);
  }
}

TEST_CASE("derivative matrix constructions agree on random grids") {
  auto rng = rng_for(2);
  for (int trial = 0; trial < 12; ++trial) {
    const int q = 3 + trial % 5;
    const auto g = random_grid(rng, q);
    const Eigen::MatrixXd a = derivative_matrix_composed(g);
    const Eigen::MatrixXd c = derivative_matrix_closed_form(g);
    CAPTURE(q);
    CAPTURE(g.b);
    CHECK((a - c).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("G-map matches quadrature on random in-basis functions") {
  auto rng = rng_for(3);
  std::uniform_real_distribution<double> gamma_pos(0.1, 2.5), gamma_neg(-0.9, -0.1);
  const char* smooth[] = {"Exp", "Sin"};
  for (int q : {3, 4}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto g = random_grid(rng, q);
      FideProblem p;
      auto one = [](double) { return 1.0; };
      p.p = p.q = p.r = p.mu = one;
      p.s = g.cutoff.s;
      p.e = g.cutoff.e;
      p.delta = g.cutoff.delta;
      const bool singular = trial % 2 == 1;
      if (singular) {
        p.kernel = make_kernel("K1", trial == 1 ? gamma_neg(rng) : gamma_pos(rng));
        p.path = KernelPath::Singular;
      } else {
        p.kernel = trial == 0 ? make_kernel("K1", gamma_pos(rng)) : make_kernel(smooth[rng() % 2], 0.0);
        p.path = KernelPath::Continuous;
      }
      const auto ops = SpectralOperators::build(g);
      const auto repr = build_kernel_repr(p.kernel, p.path, g, p.kernel_q);
      const auto gm = build_gmap(g, ops, repr, nu_samples(p, g));
      const auto rep = check_gmap_against_quadrature(p, g, ops, repr, gm, 2, rng());
      CAPTURE(p.kernel.label);
      CAPTURE(p.kernel.gamma);
      CAPTURE(to_string(p.path));
      CAPTURE(q);
      CHECK(rep.deviation <= (singular ? 1e-6 : 1e-8));
    }
  }
}

TEST_CASE("manufactured error drops at least 4x per level and boundary data hold") {
  auto rng = rng_for(4);
  const auto& targets = target_catalog();
  const BcType bcs[] = {BcType::Neumann, BcType::Dirichlet, BcType::Mix1, BcType::Mix2};
  for (int trial = 0; trial < 3; ++trial) {
    ManufacturedCase c;
    c.kernel = "K1";
    c.gamma = -0.5;
    c.target = targets[rng() % targets.size()].label;
    c.bc_type = bcs[rng() % 4];
    CAPTURE(c.target);
    CAPTURE(to_string(c.bc_type));
    double prev = 0.0;
    for (int q = 4; q <= 6; ++q) {
      c.q = q;
      FideSolution sol;
      const double err = run_case(c, sol).max_e;
      if (q > 4) CHECK(err * 4.0 <= prev);
      prev = err;

      const FideProblem prob = manufacture(c);
      const double w[4] = {eval_solution(sol.series, c.s), eval_solution_derivative(sol.series, c.s),
                           eval_solution(sol.series, c.e), eval_solution_derivative(sol.series, c.e)};
      for (int row = 0; row < 2; ++row) {
        double lhs = 0.0;
        for (int j = 0; j < 4; ++j) lhs += prob.bc.D[row][j] * w[j];
        CHECK(std::abs(lhs - (row == 0 ? prob.bc.alpha : prob.bc.beta)) <= 1e-9);
      }
    }
  }
}

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::cout << "property seed " << g_seed << '\n';
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
