#include "trigfide/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "trigfide/error.hpp"
#include "trigfide/quadrature.hpp"

namespace trigfide {

namespace {

constexpr double kPi = std::numbers::pi;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

const std::vector<TargetFunction>& target_catalog() {
  static const std::vector<TargetFunction> catalog = [] {
    const double w1 = kPi / 2.0, w3 = 3.0 * kPi / 2.0;
    std::vector<TargetFunction> out;
    out.push_back({"cos(pi*x/2)", [=](double x) { return std::cos(w1 * x); },
                   [=](double x) { return -w1 * std::sin(w1 * x); },
                   [=](double x) { return -w1 * w1 * std::cos(w1 * x); }});
    out.push_back({"cos(3*pi*x/2)", [=](double x) { return std::cos(w3 * x); },
                   [=](double x) { return -w3 * std::sin(w3 * x); },
                   [=](double x) { return -w3 * w3 * std::cos(w3 * x); }});
    out.push_back({"exp(x)", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
                   [](double x) { return std::exp(x); }});
    out.push_back({"x^2", [](double x) { return x * x; }, [](double x) { return 2.0 * x; },
                   [](double) { return 2.0; }});
    return out;
  }();
  return catalog;
}

const TargetFunction& target_by_label(std::string_view label) {
  const std::string want = lower(label);
  for (const auto& t : target_catalog()) {
    if (lower(t.label) == want) return t;
  }
  throw std::invalid_argument("unknown target '" + std::string(label) +
                              "' (expected cos(pi*x/2), cos(3*pi*x/2), exp(x) or x^2)");
}

std::string canonical_kernel_label(std::string_view label) {
  const std::string l = lower(label);
  if (l == "k1") return "K1";
  if (l == "k2") return "K2";
  if (l == "exp") return "Exp";
  if (l == "sin") return "Sin";
  throw std::invalid_argument("unknown kernel '" + std::string(label) + "' (expected K1, K2, Exp or Sin)");
}

bool kernel_uses_gamma(std::string_view label) {
  const std::string k = canonical_kernel_label(label);
  return k == "K1" || k == "K2";
}

KernelSpec make_kernel(std::string_view label, double gamma) {
  KernelSpec spec;
  spec.label = canonical_kernel_label(label);
  if (spec.label == "K1") {
    if (!(gamma > -1.0)) throw std::invalid_argument("K1 needs gamma > -1");
    spec.gamma = gamma;
    spec.k = [gamma](double x, double t) { return std::pow(std::abs(x - t), gamma); };
    spec.kappa = [](double, double) { return 1.0; };
    spec.k1 = [gamma](double x, double t) {
      return sgn(t - x) * std::pow(std::abs(x - t), 1.0 + gamma) / (1.0 + gamma);
    };
    spec.k2 = [gamma](double x, double t) {
      return std::pow(std::abs(x - t), 2.0 + gamma) / ((1.0 + gamma) * (2.0 + gamma));
    };
  } else if (spec.label == "K2") {
    if (!(gamma > -1.0)) throw std::invalid_argument("K2 needs gamma > -1");
    spec.gamma = gamma;
    spec.k = [gamma](double x, double t) { return std::pow(std::abs(x * x - t * t), gamma); };
    spec.kappa = [gamma](double x, double t) { return std::pow(std::abs(x + t), gamma); };
  } else if (spec.label == "Exp") {
    spec.k = [](double x, double t) { return std::exp(x + t); };
    spec.kappa = spec.k;
  } else {
    spec.k = [](double x, double t) { return std::sin(x + t); };
    spec.kappa = spec.k;
  }
  return spec;
}

std::string to_string(BcType type) {
  switch (type) {
    case BcType::Neumann: return "Neumann";
    case BcType::Dirichlet: return "Dirichlet";
    case BcType::Mix1: return "Mix1";
    case BcType::Mix2: return "Mix2";
  }
  return "?";
}

BcType parse_bc_type(std::string_view label) {
  const std::string l = lower(label);
  if (l == "neumann") return BcType::Neumann;
  if (l == "dirichlet") return BcType::Dirichlet;
  if (l == "mix1" || l == "mix_1") return BcType::Mix1;
  if (l == "mix2" || l == "mix_2") return BcType::Mix2;
  throw std::invalid_argument("unknown bc_type '" + std::string(label) +
                              "' (expected Neumann, Dirichlet, Mix1 or Mix2)");
}

std::array<std::array<double, 4>, 2> boundary_matrix(BcType type) {
  using Row = std::array<double, 4>;
  switch (type) {
    case BcType::Neumann: return {Row{1, 0, 0, 0}, Row{0, 1, 0, 0}};
    case BcType::Dirichlet: return {Row{1, 0, 0, 0}, Row{0, 0, 1, 0}};
    case BcType::Mix1: return {Row{1, 0, 0, 0}, Row{0, 0, 0, 1}};
    case BcType::Mix2: return {Row{1, 1, 0, 0}, Row{0, 0, 1, 1}};
  }
  throw std::invalid_argument("bad BcType");
}

KernelPath resolve_path(const ManufacturedCase& c) {
  if (c.path) return *c.path;
  return kernel_uses_gamma(c.kernel) && c.gamma < 0.0 ? KernelPath::Singular : KernelPath::Continuous;
}

ManufacturedCase case_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("case document must be a JSON object");
  ManufacturedCase c;
  auto number = [&](const char* key, double& out) {
    if (!doc.contains(key)) return;
    const auto& v = doc.at(key);
    if (v.is_null() || (v.is_string() && v.get<std::string>() == "NA")) return;
    if (!v.is_number()) throw std::invalid_argument(std::string("field '") + key + "' must be a number");
    out = v.get<double>();
  };
  auto integer = [&](const char* key, int& out) {
    if (!doc.contains(key)) return;
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
    out = v.get<int>();
  };
  auto text = [&](const char* key) -> std::optional<std::string> {
    if (!doc.contains(key)) return std::nullopt;
    const auto& v = doc.at(key);
    if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
  };

  if (auto k = text("kernel")) c.kernel = canonical_kernel_label(*k);
  number("gamma", c.gamma);
  if (auto b = text("bc_type")) c.bc_type = parse_bc_type(*b);
  if (auto t = text("target")) c.target = target_by_label(*t).label;
  integer("q", c.q);
  number("s", c.s);
  number("e", c.e);
  number("delta", c.delta);
  number("p_const", c.p_const);
  number("q_const", c.q_const);
  number("mu_const", c.mu_const);
  integer("kernel_q", c.kernel_q);
  if (auto p = text("path")) {
    const std::string l = lower(*p);
    if (l == "continuous") c.path = KernelPath::Continuous;
    else if (l == "singular") c.path = KernelPath::Singular;
    else if (l != "auto") throw std::invalid_argument("field 'path' must be continuous, singular or auto");
  }
  if (!kernel_uses_gamma(c.kernel)) c.gamma = 0.0;
  return c;
}

nlohmann::json case_to_json(const ManufacturedCase& c) {
  nlohmann::json doc;
  doc["kernel"] = c.kernel;
  if (kernel_uses_gamma(c.kernel)) doc["gamma"] = c.gamma;
  else doc["gamma"] = nullptr;
  doc["bc_type"] = to_string(c.bc_type);
  doc["target"] = c.target;
  doc["q"] = c.q;
  doc["s"] = c.s;
  doc["e"] = c.e;
  doc["delta"] = c.delta;
  doc["p_const"] = c.p_const;
  doc["q_const"] = c.q_const;
  doc["mu_const"] = c.mu_const;
  doc["path"] = c.path ? to_string(*c.path) : "auto";
  doc["kernel_q"] = c.kernel_q;
  return doc;
}

FideProblem manufacture(const ManufacturedCase& c) {
  const TargetFunction& target = target_by_label(c.target);
  FideProblem prob;
  prob.kernel = make_kernel(c.kernel, c.gamma);
  prob.path = resolve_path(c);
  prob.kernel_q = c.kernel_q;
  prob.s = c.s;
  prob.e = c.e;
  prob.delta = c.delta;
  const double pc = c.p_const, qc = c.q_const, mc = c.mu_const;
  prob.p = [pc](double) { return pc; };
  prob.q = [qc](double) { return qc; };
  prob.mu = [mc](double) { return mc; };

  const KernelSpec ker = prob.kernel;
  const double s = c.s, e = c.e;
  prob.r = [=](double x) {
    double integral = 0.0;
    if (mc != 0.0) {
      auto g = [&](double t) { return ker.kappa(x, t) * target.f(t); };
      integral = quad::weighted_singular(x, ker.gamma, g, s, e);
      if (!std::isfinite(integral)) {
        std::ostringstream msg;
        msg << "integral term is not finite at x = " << x;
        throw ManufactureError(msg.str());
      }
    }
    return target.d2f(x) - pc * target.df(x) - qc * target.f(x) - mc * integral;
  };

  prob.bc.D = boundary_matrix(c.bc_type);
  const std::array<double, 4> w{target.f(s), target.df(s), target.f(e), target.df(e)};
  for (int row = 0; row < 2; ++row) {
    double acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) acc += prob.bc.D[static_cast<std::size_t>(row)][j] * w[j];
    (row == 0 ? prob.bc.alpha : prob.bc.beta) = acc;
  }
  return prob;
}

double max_e(const SolutionSeries& sol, const Function1D& f, double s, double e, int q_probe) {
  if (q_probe < 1 || q_probe > 24) throw std::invalid_argument("q_probe out of range");
  const std::size_t count = std::size_t{1} << q_probe;
  const double step = sol.b / static_cast<double>(count);
  const double tol = 1e-12 * sol.b;
  double err = 0.0, scale = 0.0;
  for (std::size_t k = 0; k <= count; ++k) {
    const double x = sol.o + static_cast<double>(k) * step;
    if (x < s - tol || x > e + tol) continue;
    const double fx = f(x);
    err = std::max(err, std::abs(fx - eval_solution(sol, x)));
    scale = std::max(scale, std::abs(fx));
  }
  if (!(scale > 0.0)) throw UndefinedMetricError("target vanishes on the probe set");
  return err / scale;
}

ErrorReport run_case(const ManufacturedCase& c, FideSolution& solution) {
  const FideProblem prob = manufacture(c);
  solution = solve_fide(prob, c.q);
  ErrorReport rep;
  rep.c = c;
  rep.q = c.q;
  rep.path = prob.path;
  rep.rcond = solution.rcond;
  rep.validation_deviation = solution.validation_deviation;
  rep.max_e = max_e(solution.series, target_by_label(c.target).f, c.s, c.e);
  return rep;
}

ErrorReport run_case(const ManufacturedCase& c) {
  FideSolution sol;
  return run_case(c, sol);
}

}  // namespace trigfide
