// Copyright 2026 The holevo-gauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "holevo/closed_form.hpp"
#include "holevo/errors.hpp"
#include "holevo/fisher_bounds.hpp"
#include "holevo/holevo_sdp.hpp"
#include "holevo/montecarlo.hpp"
#include "holevo/optimal_measurement.hpp"
#include "holevo/probe_io.hpp"

namespace holevo::cli {

namespace {

using nlohmann::json;

constexpr double kClosedAgreement = 1e-6;
constexpr double kHierarchySlack = 1e-7;
constexpr double kStatSigmas = 4.0;

// Raised for invariant failures that only matter under --strict.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

double solver_tolerance() {
  const char* env = std::getenv("HOLEVO_SOLVER_TOL");
  if (env == nullptr || *env == '\0') return kDefaultSolverTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
    throw InputError(std::string("HOLEVO_SOLVER_TOL is not a positive number: ") + env);
  }
  return tol;
}

json matrix_json(const MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

json vector_json(const VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

// NaN is not valid JSON; emit null instead.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json plan_json(const MeasurementPlan& plan) {
  json out;
  out["z_vectors"] = matrix_json(plan.z);
  out["commutators"] = matrix_json(plan.commutators);
  out["achieved_mse"] = plan.mse.total;
  out["trace_re"] = plan.mse.trace_re;
  out["trabs_im"] = plan.mse.trabs_im;
  out["refined"] = plan.refined;
  if (plan.circuit) {
    out["type"] = circuit_name(plan.circuit->type);
    out["t"] = plan.circuit->t;
    out["feasible"] = plan.circuit->feasible;
  } else {
    out["type"] = nullptr;
    out["t"] = nullptr;
  }
  return out;
}

json certificate_json(const CertificateReport& r) {
  json out;
  out["min_eig_x"] = r.min_eig_x;
  out["min_eig_slack"] = r.min_eig_slack;
  out["max_constraint_residual"] = r.max_constraint_residual;
  out["primal_value"] = r.primal_value;
  out["dual_value"] = r.dual_value;
  out["gap"] = r.gap;
  out["verdict"] = r.optimal ? "optimal" : "not_optimal";
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// --------------------------------------------------------------------------
// bound

struct BoundArgs {
  std::optional<double> v;
  std::optional<double> r;
  std::string probe_file;
  std::string method = "sdp";
  bool strict = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out, std::ostream& err) {
  const bool tmst = a.v.has_value();
  if (tmst == !a.probe_file.empty()) {
    throw InputError("bound: give either --v/--r or --probe-file");
  }
  if (tmst && !a.r) throw InputError("bound: --r is required with --v");
  if (!tmst && a.method != "sdp") {
    throw InputError("bound: --method " + a.method + " needs a symmetric TMST probe (--v, --r)");
  }
  const ProbeModel model =
      tmst ? symmetric_tmst_probe(*a.v, *a.r) : load_probe(a.probe_file);

  json report;
  report["method"] = a.method;
  report["modes"] = model.n_modes();
  report["params"] = model.n_params();
  std::vector<std::string> violations;
  std::optional<double> sdp_value;

  if (a.method == "sdp" || a.method == "all") {
    const EuclideanFrame frame = orthonormal_frame(model);
    const BoundResult b = holevo_bound(frame, solver_tolerance());
    sdp_value = b.sigma_star;
    json s;
    s["sigma_star"] = b.sigma_star;
    s["f_opt"] = matrix_json(b.f_opt);
    s["f_reduced"] = matrix_json(b.f_reduced);
    s["iterations"] = b.solution.iterations;
    s["certificate"] = certificate_json(b.report);
    s["primal_infeasibility"] = b.solution.primal_infeasibility;
    s["dual_infeasibility"] = b.solution.dual_infeasibility;
    s["margins"] = {{"lower", b.margins.lower}, {"upper", b.margins.upper}};
    report["sdp"] = s;
    report["plan"] = plan_json(extract_plan(model, frame, b.f_opt));

    const FisherResult fisher = fisher_bounds(frame);
    report["sld"] = fisher.c_sld;
    report["rld"] = fisher.c_rld;
    if (b.sigma_star < std::max(fisher.c_sld, fisher.c_rld) - kHierarchySlack) {
      violations.push_back("Holevo bound below max(SLD, RLD)");
    }
  }
  if (a.method == "closed" || a.method == "all") {
    const ClosedFormSolution c = solve_closed(*a.v, *a.r);
    json s;
    s["sigma_star"] = c.sigma_star;
    s["regime"] = regime_name(c.regime);
    s["r0"] = c.r0;
    s["f_opt"] = matrix_json(c.f_opt);
    s["t"] = c.t ? number_or_null(*c.t) : json(nullptr);
    report["closed"] = s;
    if (sdp_value && std::abs(*sdp_value - c.sigma_star) > kClosedAgreement) {
      violations.push_back("SDP and closed form disagree");
    }
  }
  if (a.method != "sdp" && a.method != "closed" && a.method != "all") {
    throw InputError("bound: unknown method " + a.method);
  }
  report["violations"] = violations;
  out << report.dump(2) << "\n";
  for (const auto& v : violations) err << "warning: " << v << "\n";
  if (a.strict && !violations.empty()) throw InvariantViolation(violations.front());
  return kOk;
}

// --------------------------------------------------------------------------
// sweep

struct SweepArgs {
  double v = 0.75;
  double r_min = 0.0;
  double r_max = 1.5;
  int steps = 151;
  std::string out_path = "-";
  bool strict = false;
  int threads = 0;
};

struct SweepRow {
  double v, r, holevo_sdp, holevo_closed, sld, rld, gap, t;
  bool entangled;
};

SweepRow sweep_point(double v, double r, double tol) {
  const ProbeModel model = symmetric_tmst_probe(v, r);
  const EuclideanFrame frame = orthonormal_frame(model);
  const BoundResult b = holevo_bound(frame, tol);
  const FisherResult f = fisher_bounds(frame);
  SweepRow row{};
  row.v = v;
  row.r = r;
  row.holevo_sdp = b.sigma_star;
  row.holevo_closed = holevo_bound_closed(v, r);
  row.sld = f.c_sld;
  row.rld = f.c_rld;
  row.gap = b.solution.gap;
  row.t = regime_of(v, r) == Regime::kBelowThreshold
              ? heterodyne_transmission(v, r)
              : std::numeric_limits<double>::quiet_NaN();
  row.entangled = is_entangled(v, r);
  return row;
}

std::string row_violation(const SweepRow& row) {
  if (std::abs(row.holevo_sdp - row.holevo_closed) > kClosedAgreement) {
    return "SDP and closed form disagree";
  }
  if (row.holevo_sdp < std::max(row.sld, row.rld) - kHierarchySlack) {
    return "Holevo bound below max(SLD, RLD)";
  }
  return {};
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (a.steps < 1) throw InputError("sweep: --steps must be at least 1");
  if (!(a.r_min >= 0.0) || !(a.r_max >= a.r_min)) {
    throw InputError("sweep: need 0 <= --r-min <= --r-max");
  }
  if (!(a.v >= 0.5)) throw InputError("sweep: --v must be at least 1/2");
  const double tol = solver_tolerance();

  std::ofstream file;
  std::ostream* sink = &out;
  if (a.out_path != "-") {
    file.open(a.out_path);
    if (!file) throw InputError("sweep: cannot write " + a.out_path);
    sink = &file;
  }

  std::vector<double> grid(static_cast<size_t>(a.steps));
  for (int k = 0; k < a.steps; ++k) {
    grid[static_cast<size_t>(k)] =
        a.steps == 1 ? a.r_min
                     : a.r_min + (a.r_max - a.r_min) * k / static_cast<double>(a.steps - 1);
  }
  std::vector<SweepRow> rows(grid.size());
  const int threads = std::max(
      1, a.threads > 0 ? a.threads : static_cast<int>(std::thread::hardware_concurrency()));
  auto work = [&](int worker) {
    for (size_t k = static_cast<size_t>(worker); k < grid.size();
         k += static_cast<size_t>(threads)) {
      rows[k] = sweep_point(a.v, grid[k], tol);
    }
  };
  std::vector<std::future<void>> jobs;
  for (int w = 0; w < threads; ++w) jobs.push_back(std::async(std::launch::async, work, w));
  for (auto& j : jobs) j.get();  // rethrows the first failure

  *sink << "v,r,holevo_sdp,holevo_closed,sld,rld,dual_gap,t,entangled\n";
  std::string first_violation;
  for (const SweepRow& row : rows) {
    *sink << format_double(row.v) << ',' << format_double(row.r) << ','
          << format_double(row.holevo_sdp) << ',' << format_double(row.holevo_closed)
          << ',' << format_double(row.sld) << ',' << format_double(row.rld) << ','
          << format_double(row.gap) << ',' << format_double(row.t) << ','
          << (row.entangled ? "true" : "false") << '\n';
    const std::string v = row_violation(row);
    if (!v.empty()) {
      err << "warning: r = " << format_double(row.r) << ": " << v << "\n";
      if (first_violation.empty()) first_violation = v;
    }
  }
  sink->flush();
  if (!*sink) throw InputError("sweep: write failed");
  if (a.strict && !first_violation.empty()) throw InvariantViolation(first_violation);
  return kOk;
}

// --------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string scheme = "double_homodyne";
  double v = 0.75;
  double r = 0.5;
  std::optional<double> t;
  std::vector<double> theta{0.0, 0.0};
  std::int64_t shots = 1000000;
  std::uint64_t seed = 0;
  int threads = 0;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  CircuitSpec spec;
  if (a.scheme == "double_homodyne") {
    spec.scheme = CircuitType::kDoubleHomodyne;
  } else if (a.scheme == "double_unbalanced_heterodyne") {
    spec.scheme = CircuitType::kDoubleUnbalancedHeterodyne;
  } else {
    throw InputError("simulate: unknown scheme " + a.scheme);
  }
  if (a.theta.size() != 2) throw InputError("simulate: --theta takes two values");
  spec.v = a.v;
  spec.r = a.r;
  spec.theta = {a.theta[0], a.theta[1]};
  spec.shots = a.shots;
  spec.seed = a.seed;
  spec.threads = a.threads;
  if (spec.scheme == CircuitType::kDoubleUnbalancedHeterodyne) {
    spec.t = a.t ? *a.t : heterodyne_transmission(a.v, a.r);
    if (!a.t && spec.t > 1.0) {
      throw InputError("simulate: the optimal transmission " + format_double(spec.t) +
                       " exceeds 1 at or above the entanglement threshold");
    }
  } else {
    spec.t = 1.0;
  }
  const SimulationResult res = simulate(spec);
  const double bound = holevo_bound_closed(a.v, a.r);

  json report;
  report["scheme"] = a.scheme;
  report["v"] = a.v;
  report["r"] = a.r;
  report["t"] = spec.t;
  report["theta"] = {spec.theta[0], spec.theta[1]};
  report["shots"] = res.shots_used;
  report["seed"] = a.seed;
  report["empirical_mean"] = {res.empirical_mean[0], res.empirical_mean[1]};
  report["mean_standard_error"] = {res.mean_standard_error[0], res.mean_standard_error[1]};
  report["empirical_mse_sum"] = res.empirical_mse_sum;
  report["standard_error"] = res.standard_error;
  report["expected_mse"] = res.expected_mse;
  report["bound_reference"] = bound;
  const bool consistent =
      std::abs(res.empirical_mse_sum - res.expected_mse) <= kStatSigmas * res.standard_error;
  report["consistent_with_expected"] = consistent;
  report["attains_bound"] =
      std::abs(res.empirical_mse_sum - bound) <= kStatSigmas * res.standard_error;
  out << report.dump(2) << "\n";
  if (!consistent) {
    err << "empirical MSE is more than " << kStatSigmas
        << " standard errors from the estimator's exact MSE\n";
    return kInvariantViolation;
  }
  return kOk;
}

// --------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::optional<double> v;
  std::optional<double> r;
  std::string probe_file;
  bool closed_form = false;
  std::string c0 = "0";
  std::optional<double> tol;
};

double parse_c0(const std::string& text, double v, double r) {
  if (text == "max") return c0_upper(v, r);
  if (text == "mid") return 0.5 * c0_upper(v, r);
  char* end = nullptr;
  const double c0 = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw InputError("verify: --c0 must be a number, 'mid' or 'max'");
  }
  return c0;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  json report;
  CertificateReport cert;
  if (a.closed_form) {
    if (!a.v || !a.r) throw InputError("verify: --closed-form needs --v and --r");
    if (!a.probe_file.empty()) throw InputError("verify: --closed-form takes no probe file");
    const double tol = a.tol.value_or(kDefaultSolverTolerance);
    const double c0 = parse_c0(a.c0, *a.v, *a.r);
    const Certificate c = certificate_closed(*a.v, *a.r, c0);
    const SdpProblem problem = build_sdp(closed_form_frame(*a.v, *a.r));
    cert = verify_certificate(problem, c.x, c.y, tol);
    const CertificateSpectra spectra = certificate_eigenvalues(*a.v, *a.r, c0);
    report["source"] = "closed_form";
    report["c0"] = c0;
    report["regime"] = regime_name(regime_of(*a.v, *a.r));
    report["y"] = vector_json(c.y);
    report["spectra"] = {
        {"slack_numeric", vector_json(spectra.slack_numeric)},
        {"slack_closed", vector_json(spectra.slack_closed)},
        {"x_numeric", vector_json(spectra.x_numeric)},
        {"x_closed", vector_json(spectra.x_closed)},
        {"max_mismatch",
         std::max((spectra.slack_numeric - spectra.slack_closed).cwiseAbs().maxCoeff(),
                  (spectra.x_numeric - spectra.x_closed).cwiseAbs().maxCoeff())}};
    report["closed_form_value"] = holevo_bound_closed(*a.v, *a.r);
  } else {
    const bool tmst = a.v.has_value();
    if (tmst == !a.probe_file.empty()) {
      throw InputError("verify: give either --v/--r or --probe-file");
    }
    if (tmst && !a.r) throw InputError("verify: --r is required with --v");
    const ProbeModel model =
        tmst ? symmetric_tmst_probe(*a.v, *a.r) : load_probe(a.probe_file);
    const double solver_tol = solver_tolerance();
    const BoundResult b = holevo_bound(orthonormal_frame(model), solver_tol);
    // Same relative scale as the solver's own stopping rule.
    const double tol =
        a.tol.value_or(10.0 * solver_tol * std::max(1.0, std::abs(b.sigma_star)));
    cert = verify_certificate(b.problem, b.solution.x, b.solution.y, tol);
    report["source"] = "sdp";
    report["y"] = vector_json(b.solution.y);
  }
  report["certificate"] = certificate_json(cert);
  out << report.dump(2) << "\n";
  if (!cert.optimal) {
    err << "certificate is not optimal within tolerance\n";
    return kInvariantViolation;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holevo Cramer-Rao bounds for Gaussian displacement estimation"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "Compute the bound for one probe");
  b->add_option("--v", bound.v, "thermal variance of the symmetric TMST probe");
  b->add_option("--r", bound.r, "squeezing parameter");
  b->add_option("--probe-file", bound.probe_file, "JSON probe file");
  b->add_option("--method", bound.method, "sdp, closed or all")
      ->check(CLI::IsMember({"sdp", "closed", "all"}));
  b->add_flag("--strict", bound.strict, "exit 4 on invariant violations");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Tabulate bounds over a squeezing grid");
  s->add_option("--v", sweep.v, "thermal variance")->required();
  s->add_option("--r-min", sweep.r_min, "first squeezing value");
  s->add_option("--r-max", sweep.r_max, "last squeezing value");
  s->add_option("--steps", sweep.steps, "number of grid points");
  s->add_option("--out", sweep.out_path, "CSV destination, - for stdout");
  s->add_option("--threads", sweep.threads, "worker threads (0 = all cores)");
  s->add_flag("--strict", sweep.strict, "exit 4 on invariant violations");

  SimulateArgs sim;
  auto* m = app.add_subcommand("simulate", "Monte Carlo of a joint measurement");
  m->add_option("--scheme", sim.scheme, "double_homodyne or double_unbalanced_heterodyne")
      ->check(CLI::IsMember({"double_homodyne", "double_unbalanced_heterodyne"}));
  m->add_option("--v", sim.v, "thermal variance")->required();
  m->add_option("--r", sim.r, "squeezing parameter")->required();
  m->add_option("--t", sim.t, "heterodyne transmission (default: optimal)");
  m->add_option("--theta", sim.theta, "true displacement, two values")->expected(2);
  m->add_option("--shots", sim.shots, "number of shots");
  m->add_option("--seed", sim.seed, "RNG seed");
  m->add_option("--threads", sim.threads, "worker threads (0 = all cores)");

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Check an optimality certificate");
  vf->add_option("--v", verify.v, "thermal variance");
  vf->add_option("--r", verify.r, "squeezing parameter");
  vf->add_option("--probe-file", verify.probe_file, "JSON probe file");
  vf->add_flag("--closed-form", verify.closed_form, "use the analytic certificate");
  vf->add_option("--c0", verify.c0, "optimizer family parameter: number, mid or max");
  vf->add_option("--tol", verify.tol, "verdict tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*b) return cmd_bound(bound, out, err);
    if (*s) return cmd_sweep(sweep, out, err);
    if (*m) return cmd_simulate(sim, out, err);
    if (*vf) return cmd_verify(verify, out, err);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidStateError& e) {
    err << "invalid state: " << e.what() << "\n";
    return kInputError;
  } catch (const UnidentifiableParameterError& e) {
    err << "unidentifiable parameters: " << e.what() << "\n";
    return kInputError;
  } catch (const ConvergenceError& e) {
    const SdpSolution& best = e.best();
    err << "solver failure: " << e.what() << "\n"
        << "best iterate: dual " << format_double(best.dual_value) << ", gap "
        << format_double(best.gap) << ", primal residual "
        << format_double(best.primal_infeasibility) << ", dual residual "
        << format_double(best.dual_infeasibility) << "\n";
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kInputError;
}

}  // namespace holevo::cli
