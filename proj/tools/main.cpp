// Copyright 2026 The qig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qig: evaluate monotone quantum metrics / generalized covariances and run
// seeded verification campaigns over the uncertainty and monotonicity
// inequalities they satisfy.
//
//   qig eval <gamma|qcov|cov|skew> --f SPEC --state FILE --a FILE [--b FILE]
//   qig verify <check> [--dim N]* [--m M] [--f SPEC[,SPEC]*] [--g SPEC]
//              [--c NUM] [--d NUM] [--samples K] [--seed S]
//              [--out PATH] [--format json|csv]
//              [--channel-kind KIND] [--out-dim K] [--env-dim E]
//   qig functions [--list SPEC[,SPEC]*] [--probe NAME] [--trials T] [--seed S]
//
// Verdict lines go to stdout (or --out) and are byte-deterministic for a
// fixed (config, seed); the wall-time summary goes to stderr. Exit codes:
// 0 all good, 1 usage/IO error, 2 at least one inequality violation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qig/channel.hpp"
#include "qig/errors.hpp"
#include "qig/inequalities.hpp"
#include "qig/json_io.hpp"
#include "qig/metric.hpp"
#include "qig/sampling.hpp"

namespace {

using namespace qig;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(csv.substr(start));
      break;
    }
    parts.push_back(csv.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

std::vector<StandardFunction> parse_function_list(const std::string& csv) {
  std::vector<StandardFunction> out;
  for (const std::string& spec : split_csv(csv)) out.push_back(parse_function(spec));
  return out;
}

// ---------------------------------------------------------------- eval ----

struct EvalOptions {
  std::string quantity;
  std::string f = "sld";
  std::string state_path;
  std::string a_path;
  std::string b_path;
};

int run_eval(const EvalOptions& opt) {
  StandardFunction f = parse_function(opt.f);
  DensityMatrix state(read_matrix_file(opt.state_path));
  Matrix a = read_matrix_file(opt.a_path);
  Matrix b = opt.b_path.empty() ? a : read_matrix_file(opt.b_path);

  Complex value(0.0, 0.0);
  if (opt.quantity == "gamma") {
    MetricContext ctx(state, f);
    value = gamma(ctx, a, b);
  } else if (opt.quantity == "qcov") {
    MetricContext ctx(state, f);
    value = qcov(ctx, a, b);
  } else if (opt.quantity == "cov") {
    value = Complex(cov_symmetrized(state, a, b), 0.0);
  } else {  // skew
    MetricContext ctx(state, f);
    value = Complex(skew_information(ctx, a, b), 0.0);
  }

  char buf[80];
  if (std::abs(value.imag()) <= 1e-12 * std::max(1.0, std::abs(value))) {
    std::snprintf(buf, sizeof(buf), "%.15g\n", value.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.15g%+.15gi\n", value.real(), value.imag());
  }
  std::fputs(buf, stdout);
  return 0;
}

// -------------------------------------------------------------- verify ----

struct VerifyOptions {
  std::string check;
  std::vector<int> dims;
  int m = 2;
  std::string f_csv;
  std::string g_spec;
  std::optional<double> c;
  std::optional<double> dconst;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
  std::string channel_kind = "random";
  std::optional<int> out_dim;
  int env_dim = 2;
};

KrausChannel build_channel(const VerifyOptions& opt, Index n, RngStream& rng) {
  if (opt.channel_kind == "identity") return KrausChannel::identity(n);
  if (opt.channel_kind == "pinching") return KrausChannel::pinching(n);
  if (opt.channel_kind == "partial-trace") {
    Index env = opt.env_dim;
    if (env < 1 || n % env != 0) {
      throw BadDims("partial-trace needs --dim divisible by --env-dim");
    }
    return KrausChannel::partial_trace(n / env, env);
  }
  Index k = opt.out_dim.value_or(static_cast<int>(n));
  return random_channel(n, k, opt.env_dim, rng);
}

VerdictRecord base_record(const VerifyOptions& opt, const std::string& theorem,
                          Index n, int m) {
  VerdictRecord record;
  record.theorem = theorem;
  record.dim = n;
  record.m = m;
  record.seed = opt.seed;
  return record;
}

std::vector<VerdictRecord> run_trial(const VerifyOptions& opt,
                                     const StandardFunction& f,
                                     const StandardFunction& g, Index n,
                                     RngStream& rng) {
  if (opt.check == "variance-bound") {
    DensityMatrix state = random_density(n, rng);
    Observable a = random_observable(n, rng);
    double c = opt.c.value_or(0.5 * f.at_zero());
    VerdictRecord record = base_record(opt, opt.check, n, 1);
    record.f = f.spec();
    record.g = g.spec();
    record.c = c;
    record.verdict = check_variance_bound(f, g, c, state, a);
    return {record};
  }
  if (opt.check == "det-bound" || opt.check == "dyn-ucp") {
    DensityMatrix state = random_density(n, rng);
    std::vector<Observable> a = random_observable_tuple(n, opt.m, rng);
    VerdictRecord record = base_record(opt, opt.check, n, opt.m);
    record.f = f.spec();
    if (opt.check == "dyn-ucp") {
      record.g = "sld";
      record.c = 0.5 * f.at_zero();
      record.verdict = check_dynamical_ucp(f, state, a);
    } else {
      double c = opt.c.value_or(0.5 * f.at_zero());
      record.g = g.spec();
      record.c = c;
      record.verdict = check_det_bound(f, g, c, state, a);
    }
    return {record};
  }
  if (opt.check == "det-order") {
    DensityMatrix state = random_density(n, rng);
    std::vector<Observable> a = random_observable_tuple(n, opt.m, rng);
    double c = opt.c.value_or(1.0);
    double dconst = opt.dconst.value_or(1.0);
    VerdictRecord record = base_record(opt, opt.check, n, opt.m);
    record.f = f.spec();
    record.g = g.spec();
    record.c = c;
    record.d = dconst;
    record.verdict = check_det_order(f, g, c, dconst, state, a);
    return {record};
  }
  if (opt.check == "tilde-identity") {
    DensityMatrix state = random_density(n, rng);
    Observable a = random_observable(n, rng);
    Observable b = random_observable(n, rng);
    TildeIdentitySides sides = tilde_identity_sides(state, f, a, b);
    VerdictRecord record = base_record(opt, opt.check, n, 2);
    record.f = f.spec();
    record.g = tilde(f).spec();
    record.verdict.lhs = sides.skew_side;
    record.verdict.rhs = sides.cov_side;
    record.verdict.margin = sides.skew_side - sides.cov_side;
    record.verdict.holds = sides.residual <= 1e-8 * sides.scale;
    record.verdict.notes = "identity check: holds iff |lhs - rhs| <= 1e-8 * scale";
    return {record};
  }
  if (opt.check == "robertson") {
    DensityMatrix state = random_density(n, rng);
    std::vector<Observable> a = random_observable_tuple(n, opt.m, rng);
    VerdictRecord record = base_record(opt, opt.check, n, opt.m);
    record.verdict = check_robertson(state, a);
    return {record};
  }
  if (opt.check == "monotone") {
    KrausChannel ch = build_channel(opt, n, rng);
    DensityMatrix state = random_density(n, rng);
    Observable direction = random_observable(n, rng);
    direction -= (direction.trace() / static_cast<double>(n)) *
                 Matrix::Identity(n, n);
    Observable a_out = random_observable(ch.out_dim(), rng);

    VerdictRecord fisher = base_record(opt, "fisher-monotone", n, 1);
    fisher.f = f.spec();
    fisher.verdict = check_fisher_monotonicity(f, ch, state, direction);

    VerdictRecord cov = base_record(opt, "cov-monotone", n, 1);
    cov.f = f.spec();
    cov.verdict = check_cov_monotonicity(f, ch, state, a_out);

    std::string prefix = "channel=" + opt.channel_kind;
    for (VerdictRecord* record : {&fisher, &cov}) {
      record->verdict.notes = record->verdict.notes.empty()
                                  ? prefix
                                  : prefix + "; " + record->verdict.notes;
    }
    return {fisher, cov};
  }
  throw Error("unknown check '" + opt.check + "'");
}

int run_verify(const VerifyOptions& opt_in) {
  VerifyOptions opt = opt_in;
  if (opt.dims.empty()) opt.dims = {3};
  for (int n : opt.dims) {
    if (n < 2) throw BadDims("--dim must be at least 2");
  }
  if (opt.samples < 1) throw BadDims("--samples must be at least 1");
  if (opt.m < 1) throw BadDims("--m must be at least 1");

  if (opt.f_csv.empty()) {
    opt.f_csv = (opt.check == "det-order") ? "sld"
                                           : "sld,wy,rld,km,kosaki:0.3,kosaki:0.7";
  }
  if (opt.g_spec.empty()) {
    opt.g_spec = (opt.check == "det-order") ? "wy" : "sld";
  }
  std::vector<StandardFunction> fs = parse_function_list(opt.f_csv);
  StandardFunction g = parse_function(opt.g_spec);

  std::ofstream file_out;
  if (!opt.out_path.empty()) {
    file_out.open(opt.out_path, std::ios::binary);
    if (!file_out) throw Error("cannot open '" + opt.out_path + "' for writing");
  }
  std::ostream& out = opt.out_path.empty() ? std::cout : file_out;

  const bool csv = opt.format == "csv";
  if (csv) out << verdict_csv_header() << '\n';

  auto start = std::chrono::steady_clock::now();
  long violations = 0;
  long condition_violations = 0;
  long verdict_count = 0;
  double min_margin = std::numeric_limits<double>::infinity();

  for (int t = 0; t < opt.samples; ++t) {
    RngStream rng = RngStream::substream(opt.seed, static_cast<std::uint64_t>(t));
    Index n = opt.dims[static_cast<std::size_t>(t) % opt.dims.size()];
    const StandardFunction& f = fs[static_cast<std::size_t>(t) % fs.size()];

    std::vector<VerdictRecord> records;
    try {
      records = run_trial(opt, f, g, n, rng);
    } catch (const ConditionViolated& e) {
      VerdictRecord record = base_record(opt, opt.check, n, opt.m);
      record.f = f.spec();
      record.g = opt.g_spec;
      if (opt.check == "det-order") {
        record.c = opt.c.value_or(1.0);
        record.d = opt.dconst.value_or(1.0);
      } else {
        record.c = opt.c.value_or(0.5 * f.at_zero());
      }
      record.condition_violated = true;
      record.verdict.holds = true;  // the hypothesis failed; nothing was claimed
      record.verdict.notes = e.what();
      records = {record};
      ++condition_violations;
    }

    for (const VerdictRecord& record : records) {
      ++verdict_count;
      if (!record.condition_violated) {
        if (!record.verdict.holds) ++violations;
        min_margin = std::min(min_margin, record.verdict.margin);
      }
      out << (csv ? verdict_csv_line(record) : verdict_json_line(record)) << '\n';
    }
  }
  out.flush();

  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  char summary[256];
  std::snprintf(summary, sizeof(summary),
                "summary: check=%s samples=%d verdicts=%ld violations=%ld "
                "condition_violations=%ld min_margin=%.9g wall_ms=%lld\n",
                opt.check.c_str(), opt.samples, verdict_count, violations,
                condition_violations, min_margin,
                static_cast<long long>(wall_ms));
  std::fputs(summary, stderr);

  return violations > 0 ? 2 : 0;
}

// ----------------------------------------------------------- functions ----

struct FunctionsOptions {
  std::string list_csv = "sld,wy,rld,km,kosaki:0.3,kosaki:0.7,tilde(wy),tilde(kosaki:0.3)";
  std::vector<std::string> probes;
  int trials = 200;
  std::uint64_t seed = 0;
};

ScalarFn lookup_probe(const std::string& name) {
  if (name == "xsq") return [](double x) { return x * x; };
  throw Error("unknown probe '" + name + "' (available: xsq)");
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

int run_functions(const FunctionsOptions& opt) {
  if (opt.trials < 1) throw BadDims("--trials must be at least 1");
  FunctionGrid grid = FunctionGrid::standard();
  std::vector<StandardFunction> fs = parse_function_list(opt.list_csv);

  std::printf("%-22s %-10s %-10s %-9s %-11s %-12s %-12s %-12s %s\n", "spec", "f(0)",
              "symmetry", "monotone", "normalized", "min_gap_2x2", "chord_margin",
              "pair_margin", "standard");

  bool catalog_failure = false;
  for (const StandardFunction& f : fs) {
    GridReport grid_report = check_standard_grid(f, grid);
    MonotoneReport mono = check_matrix_monotone_2x2(f, opt.trials, opt.seed);
    double chord = chord_margin(f, grid);
    double pair_margin = std::numeric_limits<double>::infinity();
    for (const StandardFunction& g : fs) {
      pair_margin = std::min(pair_margin, product_chord_margin(f, g, grid));
    }
    bool ok = grid_report.normalized && grid_report.monotone &&
              grid_report.max_symmetry_defect <= 1e-10 &&
              mono.min_eigenvalue_of_gap >= -1e-10 && chord >= -1e-12 &&
              pair_margin >= -1e-12;
    catalog_failure = catalog_failure || !ok;
    std::printf("%-22s %-10.6g %-10s %-9s %-11s %-12s %-12s %-12s %s\n",
                f.spec().c_str(), f.at_zero(),
                format_sci(grid_report.max_symmetry_defect).c_str(),
                grid_report.monotone ? "yes" : "NO",
                grid_report.normalized ? "yes" : "NO",
                format_sci(mono.min_eigenvalue_of_gap).c_str(),
                format_sci(chord).c_str(), format_sci(pair_margin).c_str(),
                ok ? "yes" : "NO");
  }

  for (const std::string& name : opt.probes) {
    ScalarFn probe = lookup_probe(name);
    GridReport grid_report = check_standard_grid(probe, grid);
    MonotoneReport mono = check_matrix_monotone_2x2(probe, opt.trials, opt.seed);
    std::printf("%-22s %-10s %-10s %-9s %-11s %-12s %-12s %-12s %s\n",
                ("probe:" + name).c_str(), "-",
                format_sci(grid_report.max_symmetry_defect).c_str(),
                grid_report.monotone ? "yes" : "NO",
                grid_report.normalized ? "yes" : "NO",
                format_sci(mono.min_eigenvalue_of_gap).c_str(), "-", "-",
                "no (probe: unverified input)");
  }
  return catalog_failure ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monotone quantum metrics, generalized covariances, and their "
               "inequality campaigns"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one scalar from matrix files");
  eval->add_option("quantity", eval_opt.quantity, "gamma | qcov | cov | skew")
      ->required()
      ->check(CLI::IsMember({"gamma", "qcov", "cov", "skew"}));
  eval->add_option("--f", eval_opt.f, "standard function spec (default sld)");
  eval->add_option("--state", eval_opt.state_path, "density matrix JSON file")
      ->required();
  eval->add_option("--a", eval_opt.a_path, "first observable JSON file")->required();
  eval->add_option("--b", eval_opt.b_path, "second observable JSON file (default: --a)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run a seeded verification campaign");
  verify
      ->add_option("check", verify_opt.check,
                   "variance-bound | det-bound | dyn-ucp | det-order | "
                   "tilde-identity | robertson | monotone")
      ->required()
      ->check(CLI::IsMember({"variance-bound", "det-bound", "dyn-ucp", "det-order",
                             "tilde-identity", "robertson", "monotone"}));
  verify->add_option("--dim", verify_opt.dims, "state dimension(s), cycled per trial");
  verify->add_option("--m", verify_opt.m, "observables per trial (default 2)");
  verify->add_option("--f", verify_opt.f_csv,
                     "function spec(s), comma separated, cycled per trial");
  verify->add_option("--g", verify_opt.g_spec, "second function spec");
  verify->add_option("--c", verify_opt.c, "bound constant (default per check)");
  verify->add_option("--d", verify_opt.dconst, "second order constant (det-order)");
  verify->add_option("--samples", verify_opt.samples, "number of trials (default 100)");
  verify->add_option("--seed", verify_opt.seed, "campaign seed (default 0)");
  verify->add_option("--out", verify_opt.out_path, "write verdict lines to this file");
  verify->add_option("--format", verify_opt.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--channel-kind", verify_opt.channel_kind,
                     "random | identity | pinching | partial-trace (monotone only)")
      ->check(CLI::IsMember({"random", "identity", "pinching", "partial-trace"}));
  verify->add_option("--out-dim", verify_opt.out_dim,
                     "output dimension of random channels (default: dim)");
  verify->add_option("--env-dim", verify_opt.env_dim,
                     "environment slices of random channels / traced factor "
                     "of partial-trace (default 2)");

  FunctionsOptions functions_opt;
  CLI::App* functions =
      app.add_subcommand("functions", "axiom and margin table for function specs");
  functions->add_option("--list", functions_opt.list_csv,
                        "function spec(s) to audit, comma separated");
  functions->add_option("--probe", functions_opt.probes,
                        "non-catalog probe(s) to flag (available: xsq)");
  functions->add_option("--trials", functions_opt.trials,
                        "2x2 monotonicity trials (default 200)");
  functions->add_option("--seed", functions_opt.seed, "spot-check seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) return run_eval(eval_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    return run_functions(functions_opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
