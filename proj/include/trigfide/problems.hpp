#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "trigfide/fide.hpp"

namespace trigfide {

/// Target solution with closed-form derivatives.
struct TargetFunction {
  std::string label;
  Function1D f, df, d2f;
};

/// cos(pi*x/2), cos(3*pi*x/2), exp(x), x^2.
const std::vector<TargetFunction>& target_catalog();
/// Throws std::invalid_argument for an unknown label.
const TargetFunction& target_by_label(std::string_view label);

/// K1 = |x-t|^g, K2 = |x^2-t^2|^g, Exp = exp(x+t), Sin = sin(x+t). Only K1
/// carries the antiderivatives needed by the singular path. Labels match
/// case-insensitively.
KernelSpec make_kernel(std::string_view label, double gamma);
/// Canonical spelling of a kernel label, or throws std::invalid_argument.
std::string canonical_kernel_label(std::string_view label);
/// Exp and Sin ignore gamma.
bool kernel_uses_gamma(std::string_view label);

enum class BcType { Neumann, Dirichlet, Mix1, Mix2 };

std::string to_string(BcType type);
/// Accepts Neumann, Dirichlet, Mix1/mix_1, Mix2/mix_2 in any case.
BcType parse_bc_type(std::string_view label);
std::array<std::array<double, 4>, 2> boundary_matrix(BcType type);

struct ManufacturedCase {
  std::string kernel = "K1";
  double gamma = 0.5;
  BcType bc_type = BcType::Dirichlet;
  std::string target = "cos(3*pi*x/2)";
  int q = 7;
  double s = 1.0, e = 3.0, delta = 1.0;
  double p_const = 0.1, q_const = 1.0, mu_const = 1.0;
  /// Unset means singular for gamma < 0, continuous otherwise.
  std::optional<KernelPath> path;
  int kernel_q = 13;
};

KernelPath resolve_path(const ManufacturedCase& c);

/// Missing fields keep their defaults; unknown labels or wrong types throw
/// std::invalid_argument.
ManufacturedCase case_from_json(const nlohmann::json& doc);
nlohmann::json case_to_json(const ManufacturedCase& c);

/// r = f'' - p f' - q f - mu int_s^e k f, with alpha and beta from D applied
/// to (f(s), f'(s), f(e), f'(e)). The integral uses the singular-weight
/// quadrature; a non-finite value throws ManufactureError naming x.
FideProblem manufacture(const ManufacturedCase& c);

/// Normalised sup error over o + k b/2^q_probe, k = 0..2^q_probe, inside [s, e].
/// Throws UndefinedMetricError when f vanishes there.
double max_e(const SolutionSeries& sol, const Function1D& f, double s, double e, int q_probe = 10);

struct ErrorReport {
  double max_e = 0.0;
  int q = 0;
  ManufacturedCase c;
  KernelPath path = KernelPath::Continuous;
  double rcond = 0.0;
  double validation_deviation = 0.0;
};

/// Manufactures, solves at c.q and measures max_e.
ErrorReport run_case(const ManufacturedCase& c);
/// Same, but also returns the solution.
ErrorReport run_case(const ManufacturedCase& c, FideSolution& solution);

}  // namespace trigfide
