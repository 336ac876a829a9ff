#include "minmetric/biortho.hpp"
#include "minmetric/elsolve.hpp"
#include "minmetric/finite_models.hpp"
#include "minmetric/io.hpp"
#include "minmetric/robin.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace minmetric;

// Exit codes: 0 metric exists / command succeeded; 2 bad input (parse errors,
// unknown models, out-of-range parameters); 3 analysis complete but no minimal
// metric; 4 spectral precondition failed (non-real, degenerate, defective);
// 1 any other failure.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kBadInput = 2;
constexpr int kNoMetric = 3;
constexpr int kBadSpectrum = 4;

int verdict_exit(Verdict v) { return v == Verdict::MetricExists ? kOk : kNoMetric; }

int analyze_and_print(const Json& input, const ComplexMatrix& H, const AnalyzeOptions& opts,
                      bool emit_metric) {
  const BiorthogonalSystem sys = eigensystem(H, opts.tol);
  const ElReport report = analyze(H, sys, opts);
  std::cout << report_json(input, H, sys, report, emit_metric).dump(2) << "\n";
  return verdict_exit(report.verdict);
}

struct SolveArgs {
  std::string path;
  double tol = Tolerances{}.eig_rel;
  bool emit_metric = false;
  std::string format = "json";
};

int cmd_solve(const SolveArgs& args) {
  AnalyzeOptions opts;
  opts.tol.eig_rel = args.tol;
  return analyze_and_print(Json{{"file", args.path}}, read_matrix_file(args.path), opts,
                           args.emit_metric);
}

struct ModelArgs {
  std::string name;
  double x = 0.5;
  int n = 8;
  double perturbation = 0.1;
  std::uint64_t seed = 1;
  double tol = Tolerances{}.eig_rel;
  bool emit_metric = false;
};

int cmd_model(const ModelArgs& args) {
  AnalyzeOptions opts;
  opts.tol.eig_rel = args.tol;

  if (args.name == "two-by-two") {
    return analyze_and_print(Json{{"model", "two-by-two"}}, build_2x2(two_by_two_default()),
                             opts, args.emit_metric);
  }
  if (args.name == "four-by-four") {
    if (!(args.x > 0.0 && args.x < 1.0)) {
      std::cerr << "model: --x must lie in (0, 1)\n";
      return kBadInput;
    }
    FourByFourSpec spec;
    spec.x = args.x;
    return analyze_and_print(Json{{"model", "four-by-four"}, {"x", args.x}}, build_4x4(spec),
                             opts, args.emit_metric);
  }
  if (args.name == "random") {
    if (args.n < 2 || !(args.perturbation >= 0.0 && args.perturbation < 1.0)) {
      std::cerr << "model: need --n >= 2 and --perturbation in [0, 1)\n";
      return kBadInput;
    }
    const Json input{{"model", "random"},
                     {"n", args.n},
                     {"perturbation", args.perturbation},
                     {"seed", args.seed}};
    return analyze_and_print(input, random_instance(args.n, args.perturbation, args.seed), opts,
                             args.emit_metric);
  }
  std::cerr << "model: unknown model '" << args.name
            << "' (expected two-by-two, four-by-four, or random)\n";
  return kBadInput;
}

struct RobinArgs {
  double beta = 0.0;
  int truncation = 200;
  int quad_order = 64;
  std::string format = "json";
  std::string csv_path;
};

int cmd_robin(const RobinArgs& args) {
  if (args.truncation < 1 || args.quad_order < 2) {
    std::cerr << "robin: need --truncation >= 1 and --quad-order >= 2\n";
    return kBadInput;
  }
  const RobinModel model(args.beta, args.truncation, args.quad_order);
  const RobinAnalysis analysis = truncated_analyze(model);

  const std::string csv = convergence_csv(analysis.stages);
  if (!args.csv_path.empty()) {
    std::ofstream out(args.csv_path);
    if (!out) {
      std::cerr << "robin: cannot write " << args.csv_path << "\n";
      return kFailure;
    }
    out << csv;
  }
  if (args.format == "csv")
    std::cout << csv;
  else
    std::cout << robin_report_json(model, analysis).dump(2) << "\n";
  return verdict_exit(analysis.report.verdict);
}

struct VerifyArgs {
  std::string path;
  double tol = Tolerances{}.eig_rel;
};

int cmd_verify(const VerifyArgs& args) {
  Tolerances tol;
  tol.eig_rel = args.tol;
  const ComplexMatrix H = read_matrix_file(args.path);
  const BiorthogonalSystem sys = eigensystem(H, tol);
  const ElReport report = analyze_gram(gram(sys));

  Json active = Json::array();
  for (Index i : report.oracle.active_set) active.push_back(i);
  Json alpha_el = Json::array();
  Json alpha_star = Json::array();
  for (Index i = 0; i < report.alpha_el.size(); ++i) {
    alpha_el.push_back(report.alpha_el[i]);
    alpha_star.push_back(report.oracle.alpha_star[i]);
  }
  const Json doc{{"file", args.path},
                 {"verdict", to_string(report.verdict)},
                 {"alpha_el", std::move(alpha_el)},
                 {"alpha_star", std::move(alpha_star)},
                 {"active_set", std::move(active)},
                 {"max_abs_diff",
                  (report.alpha_el - report.oracle.alpha_star).cwiseAbs().maxCoeff()},
                 {"agrees", report.oracle_agrees}};
  std::cout << doc.dump(2) << "\n";
  return report.oracle_agrees ? kOk : kFailure;
}

struct SweepArgs {
  std::string name;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  int n = 8;
  std::uint64_t seed = 1;
};

int cmd_sweep(const SweepArgs& args) {
  if (args.step <= 0.0 || args.to < args.from) {
    std::cerr << "sweep: need --step > 0 and --to >= --from\n";
    return kBadInput;
  }
  const bool four = args.name == "four-by-four";
  const bool random = args.name == "random";
  if (!four && !random) {
    std::cerr << "sweep: unknown model '" << args.name
              << "' (expected four-by-four or random)\n";
    return kBadInput;
  }

  const long count = std::lround(std::floor((args.to - args.from) / args.step + 1e-9)) + 1;
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(count));
  for (long k = 0; k < count; ++k) {
    const double param = args.from + static_cast<double>(k) * args.step;
    ComplexMatrix H;
    if (four) {
      if (!(param > 0.0 && param < 1.0)) {
        std::cerr << "sweep: x must stay inside (0, 1)\n";
        return kBadInput;
      }
      FourByFourSpec spec;
      spec.x = param;
      H = build_4x4(spec);
    } else {
      if (!(param >= 0.0 && param < 1.0)) {
        std::cerr << "sweep: perturbation must stay inside [0, 1)\n";
        return kBadInput;
      }
      H = random_instance(args.n, param, args.seed);
    }
    // light path: the verdict needs only the EL solve, not the oracle
    const BiorthogonalSystem sys = eigensystem(H);
    const RealVector alpha = solve_el(gram(sys));
    rows.push_back({param, classify(alpha), alpha.minCoeff()});
  }
  std::cout << sweep_csv(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimally anisotropic metric operators for quasi-self-adjoint matrices"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "analyze an operator from a matrix JSON file");
  solve->add_option("file", solve_args.path, "matrix JSON file")->required();
  solve->add_option("--tol", solve_args.tol, "relative eigen-residual tolerance");
  solve->add_flag("--emit-metric", solve_args.emit_metric, "embed the metric matrix in the report");
  solve->add_option("--format", solve_args.format, "output format")
      ->check(CLI::IsMember({"json"}));

  ModelArgs model_args;
  CLI::App* model = app.add_subcommand("model", "analyze a built-in model");
  model->add_option("name", model_args.name, "two-by-two | four-by-four | random")->required();
  model->add_option("--x", model_args.x, "overlap parameter for four-by-four");
  model->add_option("--n", model_args.n, "dimension for random");
  model->add_option("--perturbation", model_args.perturbation, "perturbation for random");
  model->add_option("--seed", model_args.seed, "seed for random");
  model->add_option("--tol", model_args.tol, "relative eigen-residual tolerance");
  model->add_flag("--emit-metric", model_args.emit_metric, "embed the metric matrix in the report");

  RobinArgs robin_args;
  CLI::App* robin = app.add_subcommand("robin", "truncated analysis of the Robin model");
  robin->add_option("--beta", robin_args.beta, "boundary parameter")->required();
  robin->add_option("--truncation", robin_args.truncation, "highest mode index (default 200)");
  robin->add_option("--quad-order", robin_args.quad_order, "quadrature points per panel");
  robin->add_option("--format", robin_args.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  robin->add_option("--csv", robin_args.csv_path, "also write the convergence table to a file");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "cross-check the EL solve against the oracle");
  verify->add_option("file", verify_args.path, "matrix JSON file")->required();
  verify->add_option("--tol", verify_args.tol, "relative eigen-residual tolerance");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "verdict table over a parameter grid");
  sweep->add_option("name", sweep_args.name, "four-by-four | random")->required();
  sweep->add_option("--from", sweep_args.from, "grid start")->required();
  sweep->add_option("--to", sweep_args.to, "grid end")->required();
  sweep->add_option("--step", sweep_args.step, "grid step")->required();
  sweep->add_option("--n", sweep_args.n, "dimension for random");
  sweep->add_option("--seed", sweep_args.seed, "seed for random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (model->parsed()) return cmd_model(model_args);
    if (robin->parsed()) return cmd_robin(robin_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const BetaOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const NonRealSpectrum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadSpectrum;
  } catch (const DegenerateSpectrum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadSpectrum;
  } catch (const NotDiagonalizable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadSpectrum;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kBadInput;  // unreachable: a subcommand is required
}
