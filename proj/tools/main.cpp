// purify: closed-form fidelities of optimal qubit purification, figure
// datasets as CSV, a dense-matrix verification suite, and a seeded sampler
// of the natural purifier.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "purify/asymptotics.hpp"
#include "purify/figures.hpp"
#include "purify/oracle.hpp"
#include "purify/purifiers.hpp"
#include "purify/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitArgument = 2;
constexpr int kExitIo = 3;

// 17 significant digits round-trip IEEE doubles exactly.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::int64_t v) { return std::to_string(v); }

// Short form for header labels.
std::string fmt_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      ok_ = file_.is_open();
    }
  }

  bool ok() const { return ok_; }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
  bool ok_ = true;
};

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

struct FidelityArgs {
  int n = 1;
  int m = 1;
  double lambda = 0.5;
  std::string criterion = "one";
  bool per_block = false;
  std::string out;
};

int run_fidelity(const FidelityArgs& args) {
  Output output(args.out);
  if (!output.ok()) {
    std::cerr << "purify: cannot open output path '" << args.out << "'\n";
    return kExitIo;
  }
  const purify::Noise noise = purify::Noise::from_lambda(args.lambda);
  const purify::FidelityReport report =
      args.criterion == "one"
          ? purify::fidelity_one_max(args.n, args.m, noise)
          : purify::fidelity_all_max(args.n, args.m, noise);

  std::ostream& os = output.stream();
  write_row(os, {"n", "m", "lambda", "criterion", "two_s", "weight",
                 "block_fidelity", "value"});
  if (args.per_block) {
    for (const auto& block : report.per_block) {
      write_row(os, {fmt(args.n), fmt(args.m), fmt(args.lambda), args.criterion,
                     fmt(block.two_s), fmt(block.weight), fmt(block.fidelity),
                     ""});
    }
  }
  write_row(os, {fmt(args.n), fmt(args.m), fmt(args.lambda), args.criterion, "",
                 "", "", fmt(report.value)});
  return kExitOk;
}

struct CurveArgs {
  std::string figure = "fig1";
  double lambda = 0.5;
  std::vector<double> lambdas;
  int n_max = 100;
  std::vector<int> ns = {10, 100, 1000};
  double mu_max = 3.0;
  int mu_points = 200;
  std::string out;
};

int run_curve(const CurveArgs& args) {
  Output output(args.out);
  if (!output.ok()) {
    std::cerr << "purify: cannot open output path '" << args.out << "'\n";
    return kExitIo;
  }
  std::ostream& os = output.stream();

  if (args.figure == "fig1") {
    const purify::Noise noise = purify::Noise::from_lambda(args.lambda);
    write_row(os, {"n", "f_zero", "f_one", "f_inf"});
    for (const auto& row : purify::figure_one_rows(noise, args.n_max)) {
      write_row(os, {fmt(row.n), fmt(row.f_zero), fmt(row.f_one), fmt(row.f_inf)});
    }
    return kExitOk;
  }

  if (args.figure == "fig2") {
    const std::vector<double> lambdas =
        args.lambdas.empty() ? purify::figure_two_default_lambdas() : args.lambdas;
    const purify::Fig2Data data =
        purify::figure_two_data(lambdas, args.mu_max, args.mu_points);
    std::vector<std::string> header = {"mu"};
    for (double lambda : data.lambdas) {
      header.push_back("phi_lambda_" + fmt_label(lambda));
    }
    header.push_back("natural_phi");
    header.push_back("branch_lambda");
    write_row(os, header);
    for (const auto& row : data.rows) {
      std::vector<std::string> cells = {fmt(row.mu)};
      for (double phi : row.phi) cells.push_back(fmt(phi));
      cells.push_back(row.has_natural ? fmt(row.natural_phi) : "");
      cells.push_back(row.branch_lambda > 0.0 ? fmt(row.branch_lambda) : "");
      write_row(os, cells);
    }
    return kExitOk;
  }

  if (args.figure == "fig3") {
    const purify::Noise noise = purify::Noise::from_lambda(args.lambda);
    write_row(os, {"n", "x", "density"});
    for (const auto& row : purify::figure_three_rows(noise, args.ns)) {
      write_row(os, {fmt(row.n), fmt(row.x), fmt(row.density)});
    }
    return kExitOk;
  }

  // fig4
  write_row(os, {"mu", "crude", "refined", "exact"});
  for (const auto& row :
       purify::figure_four_rows(args.lambda, args.mu_max, args.mu_points)) {
    write_row(os, {fmt(row.mu), fmt(row.crude), fmt(row.refined), fmt(row.exact)});
  }
  return kExitOk;
}

struct VerifyArgs {
  int max_n = 8;
  int max_m = 6;
  double tol = 1e-10;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  Output output(args.out);
  if (!output.ok()) {
    std::cerr << "purify: cannot open output path '" << args.out << "'\n";
    return kExitIo;
  }
  purify::VerifyOptions options;
  options.max_n = args.max_n;
  options.max_m = args.max_m;
  options.tolerance = args.tol;
  const purify::VerifyReport report = purify::run_verification(options);

  std::ostream& os = output.stream();
  os << "kernels: "
     << purify::kernels::isa_name(purify::kernels::active()) << '\n';
  for (const auto& check : report.checks) {
    os << (check.pass ? "PASS" : "FAIL") << "  " << check.name
       << "  max_residual=" << fmt(check.max_residual)
       << "  tol=" << fmt(check.tolerance) << '\n';
  }
  os << (report.all_passed ? "OK" : "FAILED") << "  " << report.checks.size()
     << " checks\n";
  return report.all_passed ? kExitOk : kExitVerifyFailed;
}

struct SampleArgs {
  int n = 1;
  double lambda = 0.5;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_sample(const SampleArgs& args) {
  Output output(args.out);
  if (!output.ok()) {
    std::cerr << "purify: cannot open output path '" << args.out << "'\n";
    return kExitIo;
  }
  const purify::Noise noise = purify::Noise::from_lambda(args.lambda);
  const purify::oracle::InstrumentHistogram hist =
      purify::oracle::sample_instrument(args.n, noise, args.seed, args.count);
  std::ostream& os = output.stream();
  write_row(os, {"two_s", "count", "frequency", "weight"});
  for (std::size_t i = 0; i < hist.support.size(); ++i) {
    write_row(os, {fmt(hist.support[i].two_s), fmt(hist.counts[i]),
                   fmt(hist.frequencies[i]), fmt(hist.weights[i])});
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal purification of depolarized qubits"};
  app.require_subcommand(1);

  FidelityArgs fidelity_args;
  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "Optimal N -> M fidelity for one criterion");
  fidelity->add_option("--n", fidelity_args.n, "Input qubit count")
      ->required()
      ->check(CLI::PositiveNumber);
  fidelity->add_option("--m", fidelity_args.m, "Output qubit count")
      ->required()
      ->check(CLI::PositiveNumber);
  fidelity->add_option("--lambda", fidelity_args.lambda, "Noise parameter")
      ->required()
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  fidelity->add_option("--criterion", fidelity_args.criterion, "one or all")
      ->required()
      ->check(CLI::IsMember({"one", "all"}));
  fidelity->add_flag("--per-block", fidelity_args.per_block,
                     "Also emit the per-block breakdown");
  fidelity->add_option("--out", fidelity_args.out, "Output CSV path (default stdout)");

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand("curve", "Emit one figure dataset as CSV");
  curve->add_option("--figure", curve_args.figure, "fig1, fig2, fig3 or fig4")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
  curve->add_option("--lambda", curve_args.lambda,
                    "Noise parameter (fig1, fig3, fig4)")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  curve->add_option("--lambdas", curve_args.lambdas,
                    "Curve sweep for fig2 (default 0.1..1.0)")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  curve->add_option("--n-max", curve_args.n_max, "Largest N for fig1")
      ->check(CLI::Range(1, 2000));
  curve->add_option("--n", curve_args.ns, "N list for fig3")
      ->check(CLI::Range(1, 2000));
  curve->add_option("--mu-max", curve_args.mu_max, "Largest rate mu")
      ->check(CLI::PositiveNumber);
  curve->add_option("--mu-points", curve_args.mu_points, "Grid points over (0, mu-max]")
      ->check(CLI::Range(1, 100000));
  curve->add_option("--out", curve_args.out, "Output CSV path (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check every closed form against the dense oracle");
  verify->add_option("--max-n", verify_args.max_n, "Dense grid input cap")
      ->check(CLI::Range(1, 8));
  verify->add_option("--max-m", verify_args.max_m, "Dense grid output cap")
      ->check(CLI::Range(1, 6));
  verify->add_option("--tol", verify_args.tol, "Residual tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_args.out, "Report path (default stdout)");

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand(
      "sample", "Sample natural-purifier outcomes (seeded, reproducible)");
  sample->add_option("--n", sample_args.n, "Input qubit count")
      ->required()
      ->check(CLI::Range(1, 2000));
  sample->add_option("--lambda", sample_args.lambda, "Noise parameter")
      ->required()
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  sample->add_option("--count", sample_args.count, "Number of draws")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_args.seed, "Generator seed")->required();
  sample->add_option("--out", sample_args.out, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgument;
  }

  try {
    if (fidelity->parsed()) return run_fidelity(fidelity_args);
    if (curve->parsed()) return run_curve(curve_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (sample->parsed()) return run_sample(sample_args);
  } catch (const std::exception& e) {
    std::cerr << "purify: " << e.what() << '\n';
    return kExitArgument;
  }
  return kExitArgument;
}
