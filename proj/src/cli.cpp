#include "planch/cli.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "planch/io.hpp"
#include "planch/measures.hpp"
#include "planch/obs_parse.hpp"
#include "planch/verify.hpp"

namespace planch {

namespace {

int parse_count(const std::string& text, const char* what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw usage_error(std::string(what) + " '" + text + "' is not an integer");
  }
  if (used != text.size()) {
    throw usage_error(std::string(what) + " '" + text + "' is not an integer");
  }
  if (value < 0) {
    throw usage_error(std::string(what) + " must be nonnegative, got '" +
                      text + "'");
  }
  return value;
}

// "k" or "a..b", inclusive on both ends.
std::vector<int> parse_n_range(const std::string& text) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    return {parse_count(text, "n")};
  }
  const int lo = parse_count(text.substr(0, dots), "n range start");
  const int hi = parse_count(text.substr(dots + 2), "n range end");
  if (lo > hi) {
    throw usage_error("empty n range '" + text + "'");
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

Rat parse_theta(const std::string& text) {
  const Rat theta = parse_rat(text);
  if (!(theta > 0)) {
    throw usage_error("theta must be positive, got '" + text + "'");
  }
  return theta;
}

Provenance resolve_measure(const std::string& text, const Rat& theta) {
  if (text == "auto") return default_provenance(theta);
  if (text == "plancherel") {
    if (!(theta == 1)) {
      throw usage_error("the plancherel measure requires theta=1");
    }
    return Provenance::plancherel;
  }
  if (text == "jack") return Provenance::jack_direct;
  if (text == "growth") return Provenance::growth;
  throw usage_error("unknown measure '" + text +
                    "' (expected auto, plancherel, jack, or growth)");
}

struct AvgArgs {
  std::string obs;
  std::string n_text;
  std::string theta_text = "1";
  std::string measure_text = "auto";
  std::string format_text = "csv";
  std::string out_path;
};

struct VerifyArgs {
  std::string suite;
  std::string theta_text;
  int n_max = -1;
  bool n_max_set = false;
  std::string emit_table;
  std::string format_text = "csv";
  std::string out_path;
};

struct SampleArgs {
  int n = 0;
  std::string theta_text = "1";
  int trajectories = 1;
  std::uint64_t seed = 0;
  bool with_paths = false;
  std::string format_text = "csv";
  std::string out_path;
};

struct ShowArgs {
  std::string object;
  std::string lambda_text;
  bool lambda_set = false;
  int n = 0;
  bool n_set = false;
  std::string theta_text = "1";
  std::string measure_text = "auto";
  std::string format_text = "csv";
  std::string out_path;
};

int do_avg(const AvgArgs& a, std::ostream& out) {
  const Rat theta = parse_theta(a.theta_text);
  const Observable obs = parse_observable(a.obs);
  const Provenance source = resolve_measure(a.measure_text, theta);
  Workspace ws;
  AvgSeries series{a.obs, theta, source, parse_n_range(a.n_text), {}};
  for (int n : series.ns) {
    series.values.push_back(average(obs, n, theta, source, ws));
  }
  emit(render_avg(series, parse_format(a.format_text)), a.out_path, out);
  return 0;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  if (!a.theta_text.empty()) opt.theta = parse_theta(a.theta_text);
  if (a.n_max_set) {
    if (a.n_max < 0) throw usage_error("--n-max must be nonnegative");
    opt.n_max = a.n_max;
  }
  if (!a.emit_table.empty() && a.suite != "polynomiality") {
    throw usage_error("--emit-table applies to the polynomiality suite");
  }
  Workspace ws;
  const SuiteResult result = run_suite(a.suite, ws, opt);
  emit(render_suite(result, parse_format(a.format_text)), a.out_path, out);
  if (!a.emit_table.empty()) {
    std::string table = "observable,theta,n,value\n";
    for (const PolyReport& report : polynomiality_reports(ws, opt)) {
      for (size_t n = 0; n < report.values.size(); ++n) {
        table += csv_field(report.spec) + "," + rat_str(report.theta) + "," +
                 std::to_string(n) + "," + rat_str(report.values[n]) + "\n";
      }
    }
    emit(table, a.emit_table, out);
  }
  if (!result.all_pass()) {
    for (const auto& c : result.cases) {
      if (!c.pass) {
        err << "first failure: " << c.name
            << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

int do_sample(const SampleArgs& a, std::ostream& out) {
  if (a.trajectories < 1) {
    throw usage_error("--trajectories must be at least 1");
  }
  const Rat theta = parse_theta(a.theta_text);
  Workspace ws;
  SampleRun run;
  run.n = a.n;
  run.theta = theta;
  run.seed = a.seed;
  run.trajectories = a.trajectories;
  run.with_paths = a.with_paths;
  for (int t = 0; t < a.trajectories; ++t) {
    run.paths.push_back(sample_trajectory(a.n, theta, a.seed,
                                          static_cast<std::uint64_t>(t), ws));
  }
  run.exact = ws.measure(a.n, theta, default_provenance(theta));
  emit(render_sample(run, parse_format(a.format_text)), a.out_path, out);
  return 0;
}

int do_show(const ShowArgs& a, std::ostream& out) {
  const Rat theta = parse_theta(a.theta_text);
  const Format format = parse_format(a.format_text);
  if (a.object == "coords" || a.object == "kernel" || a.object == "jack") {
    if (!a.lambda_set) {
      throw usage_error("show " + a.object + " requires --lambda");
    }
    const Partition la = Partition::parse(a.lambda_text);
    if (a.object == "coords") {
      emit(render_coords(la, theta, kerov_coords(la, theta), format),
           a.out_path, out);
    } else if (a.object == "kernel") {
      emit(render_kernel(make_growth_kernel(la, theta), theta, format),
           a.out_path, out);
    } else {
      Workspace ws;
      const JackTable& table = ws.jack(theta, la.size());
      const JackEntry& entry = table.entry(la);
      JackView view{la,         theta,
                    entry.on_monomial, entry.norm,
                    table.dim_theta(la), table.dim_theta_prime(la)};
      emit(render_jack(view, format), a.out_path, out);
    }
    return 0;
  }
  if (a.object == "measure") {
    if (!a.n_set) throw usage_error("show measure requires --n");
    Workspace ws;
    const Provenance source = resolve_measure(a.measure_text, theta);
    emit(render_measure(ws.measure(a.n, theta, source), format), a.out_path,
         out);
    return 0;
  }
  throw usage_error("unknown object '" + a.object +
                    "' (expected coords, kernel, measure, or jack)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Plancherel and Jack-Plancherel averages over Young "
               "diagrams, with verification suites and a growth sampler"};
  app.require_subcommand(1);

  AvgArgs avg_args;
  CLI::App* avg_cmd =
      app.add_subcommand("avg", "Average an observable over the level-n measure");
  avg_cmd->add_option("--obs", avg_args.obs, "observable spec")->required();
  avg_cmd->add_option("--n", avg_args.n_text, "diagram size, k or a..b")
      ->required();
  avg_cmd->add_option("--theta", avg_args.theta_text,
                      "deformation parameter, integer or p/q");
  avg_cmd->add_option("--measure", avg_args.measure_text,
                      "auto, plancherel, jack, or growth");
  avg_cmd->add_option("--format", avg_args.format_text, "csv or json");
  avg_cmd->add_option("--out", avg_args.out_path, "write output to this path");

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify_args.suite, "suite name")->required();
  verify_cmd->add_option("--theta", verify_args.theta_text,
                         "restrict the suite's theta grid to this value");
  CLI::Option* n_max_opt = verify_cmd->add_option(
      "--n-max", verify_args.n_max, "override the suite's size cap");
  verify_cmd->add_option("--emit-table", verify_args.emit_table,
                         "also write the polynomiality value series as CSV "
                         "to this path");
  verify_cmd->add_option("--format", verify_args.format_text, "csv or json");
  verify_cmd->add_option("--out", verify_args.out_path,
                         "write output to this path");

  SampleArgs sample_args;
  CLI::App* sample_cmd =
      app.add_subcommand("sample", "Sample growth trajectories");
  sample_cmd->add_option("--n", sample_args.n, "final diagram size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--theta", sample_args.theta_text,
                         "deformation parameter, integer or p/q");
  sample_cmd->add_option("--trajectories", sample_args.trajectories,
                         "number of independent paths");
  sample_cmd->add_option("--seed", sample_args.seed, "base seed");
  sample_cmd->add_flag("--paths", sample_args.with_paths,
                       "emit full paths instead of final diagrams");
  sample_cmd->add_option("--format", sample_args.format_text, "csv or json");
  sample_cmd->add_option("--out", sample_args.out_path,
                         "write output to this path");

  ShowArgs show_args;
  CLI::App* show_cmd = app.add_subcommand("show", "Print an exact object");
  show_cmd->add_option("object", show_args.object,
                       "coords, kernel, measure, or jack")
      ->required();
  CLI::Option* lambda_opt = show_cmd->add_option(
      "--lambda", show_args.lambda_text, "partition, e.g. 3,3,1; \"\" is empty");
  CLI::Option* n_opt =
      show_cmd->add_option("--n", show_args.n, "diagram size for measure");
  show_cmd->add_option("--theta", show_args.theta_text,
                       "deformation parameter, integer or p/q");
  show_cmd->add_option("--measure", show_args.measure_text,
                       "auto, plancherel, jack, or growth");
  show_cmd->add_option("--format", show_args.format_text, "csv or json");
  show_cmd->add_option("--out", show_args.out_path,
                       "write output to this path");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("planch");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  verify_args.n_max_set = n_max_opt->count() > 0;
  show_args.lambda_set = lambda_opt->count() > 0;
  show_args.n_set = n_opt->count() > 0;

  try {
    if (avg_cmd->parsed()) return do_avg(avg_args, out);
    if (verify_cmd->parsed()) return do_verify(verify_args, out, err);
    if (sample_cmd->parsed()) return do_sample(sample_args, out);
    if (show_cmd->parsed()) return do_show(show_args, out);
    err << "error: no command given\n";
    return 2;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const pole_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const bound_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace planch
