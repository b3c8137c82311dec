// Command-line front end: `run` executes a sweep experiment from a JSON
// spec plus flag overrides, `complexity` prints solver cost estimates, and
// `verify` runs the independent oracle suites.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hetsnet/harness.hpp"
#include "hetsnet/ilp.hpp"
#include "hetsnet/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCapRefusal = 3;

struct RunFlags {
  std::string spec_path;
  std::string sweep;
  std::string algorithms;
  std::string selection_order;
  std::string weight_mode;
  std::string format;
  std::string out;
  int trials = -1;
  int slots = -1;
  int window = -1;
  int threads = -1;
  std::int64_t seed = -1;
  std::uint64_t cap = 0;
  bool fixed_sbs = false;
  bool timing = false;
  bool dump_weights = false;
  bool no_summary = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

hetsnet::ExperimentSpec build_spec(const RunFlags& flags) {
  hetsnet::ExperimentSpec spec;
  if (!flags.spec_path.empty()) {
    std::ifstream in(flags.spec_path);
    if (!in) {
      throw hetsnet::ConfigError("cannot open spec file: " + flags.spec_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    spec = hetsnet::spec_from_json(buffer.str());
  } else {
    // Flags alone can define an experiment; start from library defaults
    // with a small sweep so `run` without arguments does something useful.
    spec.sweep_values = {2, 4, 6, 8};
    spec.algorithms = {hetsnet::Solver::kBranchAndBound,
                       hetsnet::Solver::kUmrcg, hetsnet::Solver::kMaxSinr,
                       hetsnet::Solver::kMinInterference};
    spec.trials = 100;
  }

  if (!flags.sweep.empty()) {
    const auto eq = flags.sweep.find('=');
    if (eq == std::string::npos) {
      throw hetsnet::ConfigError("--sweep expects PARAM=v1,v2,...");
    }
    const auto param =
        hetsnet::sweep_param_from_name(flags.sweep.substr(0, eq));
    if (!param) {
      throw hetsnet::ConfigError("unknown sweep param in --sweep");
    }
    spec.sweep_param = *param;
    spec.sweep_values.clear();
    for (const std::string& v : split(flags.sweep.substr(eq + 1), ',')) {
      try {
        spec.sweep_values.push_back(std::stod(v));
      } catch (const std::exception&) {
        throw hetsnet::ConfigError("bad sweep value: " + v);
      }
    }
  }
  if (!flags.algorithms.empty()) {
    spec.algorithms.clear();
    for (const std::string& name : split(flags.algorithms, ',')) {
      const auto algo = hetsnet::solver_from_name(name);
      if (!algo) throw hetsnet::ConfigError("unknown algorithm: " + name);
      spec.algorithms.push_back(*algo);
    }
  }
  if (!flags.selection_order.empty()) {
    if (flags.selection_order == "smallest") {
      spec.selection_order = hetsnet::SelectionOrder::kSmallestFirst;
    } else if (flags.selection_order == "largest") {
      spec.selection_order = hetsnet::SelectionOrder::kLargestFirst;
    } else {
      throw hetsnet::ConfigError("--selection-order must be smallest or largest");
    }
  }
  if (!flags.weight_mode.empty()) {
    if (flags.weight_mode == "none") {
      spec.weight_mode.reset();
    } else {
      const auto mode = hetsnet::weight_mode_from_name(flags.weight_mode);
      if (!mode) {
        throw hetsnet::ConfigError("--weight-mode must be none, per_su or per_sbs");
      }
      spec.weight_mode = mode;
    }
  }
  if (!flags.format.empty()) {
    if (flags.format == "csv") {
      spec.format = hetsnet::OutputFormat::kCsv;
    } else if (flags.format == "json") {
      spec.format = hetsnet::OutputFormat::kJson;
    } else {
      throw hetsnet::ConfigError("--format must be csv or json");
    }
  }
  if (!flags.out.empty()) spec.out_path = flags.out;
  if (flags.trials >= 0) spec.trials = flags.trials;
  if (flags.slots >= 0) spec.slots = flags.slots;
  if (flags.window >= 0) spec.window = flags.window;
  if (flags.threads >= 0) spec.threads = flags.threads;
  if (flags.seed >= 0) spec.base.seed = static_cast<std::uint64_t>(flags.seed);
  if (flags.cap > 0) spec.enumeration_cap = flags.cap;
  if (flags.fixed_sbs) spec.fixed_sbs = true;
  if (flags.timing) spec.record_wall_time = true;
  if (flags.dump_weights) spec.dump_weights = true;
  return spec;
}

int run_command(const RunFlags& flags) {
  const hetsnet::ExperimentSpec spec = build_spec(flags);
  spec.validate();

  const auto records = hetsnet::run_experiment(spec);

  std::ofstream out(spec.out_path);
  if (!out) {
    std::cerr << "error: cannot write " << spec.out_path << "\n";
    return kExitConfig;
  }
  if (spec.format == hetsnet::OutputFormat::kCsv) {
    hetsnet::write_records_csv(records, out);
  } else {
    hetsnet::write_records_json(records, out);
  }
  std::ofstream meta(spec.out_path + ".meta.json");
  meta << hetsnet::experiment_meta_json(spec) << "\n";
  if (spec.dump_weights && spec.weight_mode) {
    std::ofstream weights(spec.out_path + ".weights.csv");
    hetsnet::write_weights_csv(records, *spec.weight_mode, weights);
  }

  std::cout << records.size() << " records written to " << spec.out_path
            << "\n";
  if (!flags.no_summary) {
    hetsnet::write_summary(hetsnet::aggregate(records), std::cout);
  }
  return kExitOk;
}

int complexity_command(int num_su, int num_sbs, int window) {
  const auto table = hetsnet::estimate_complexity(num_su, num_sbs, window);
  std::cout << "operation-count estimates for K=" << num_su
            << " N=" << num_sbs << " T=" << window << "\n";
  for (const auto& row : table) {
    std::cout << "  " << row.algorithm << ": " << row.operations.str();
    const double approx = row.operations.convert_to<double>();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", approx);
    std::cout << " (~" << buf << ")\n";
  }
  return kExitOk;
}

struct ExportFlags {
  std::string scenario_path;
  std::string out = "instance.lp";
  int num_su = 6;
  int num_sbs = 6;
  double ref_distance = 1.0;
  std::int64_t seed = 1;
};

int export_lp_command(const ExportFlags& flags) {
  hetsnet::Scenario scn;
  if (!flags.scenario_path.empty()) {
    std::ifstream in(flags.scenario_path);
    if (!in) {
      throw hetsnet::ConfigError("cannot open scenario file: " +
                                 flags.scenario_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    scn = hetsnet::scenario_from_json(buffer.str());
  } else {
    hetsnet::NetworkConfig cfg;
    cfg.num_su = flags.num_su;
    cfg.num_sbs = flags.num_sbs;
    cfg.ref_distance_m = flags.ref_distance;
    cfg.seed = static_cast<std::uint64_t>(flags.seed);
    hetsnet::Rng rng(cfg.seed);
    scn = hetsnet::sample_scenario(cfg, rng);
  }
  const hetsnet::IlpInstance inst = hetsnet::build_instance(scn);
  std::ofstream out(flags.out);
  if (!out) {
    std::cerr << "error: cannot write " << flags.out << "\n";
    return kExitConfig;
  }
  hetsnet::write_lp(inst, out);
  std::cout << inst.num_rows() << " x " << inst.num_cols()
            << " system written to " << flags.out << "\n";
  return kExitOk;
}

int verify_command(std::uint64_t seed) {
  bool all_ok = true;
  for (const auto& check : hetsnet::verify::run_all(seed)) {
    std::cout << (check.passed ? "PASS" : "FAIL") << " " << check.name << ": "
              << check.detail << "\n";
    all_ok = all_ok && check.passed;
  }
  return all_ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"user-to-small-cell association experiments"};
  app.require_subcommand(1);

  RunFlags flags;
  CLI::App* run = app.add_subcommand("run", "run a sweep experiment");
  run->add_option("spec", flags.spec_path, "JSON experiment spec file");
  run->add_option("--sweep", flags.sweep, "override sweep, e.g. N=2,4,6");
  run->add_option("--trials", flags.trials, "trials per sweep point");
  run->add_option("--slots", flags.slots, "time slots per trial");
  run->add_option("--algorithms", flags.algorithms,
                  "comma list: bf,bnb,umrcg,wmrcg,max_sinr,min_interf");
  run->add_option("--seed", flags.seed, "master seed");
  run->add_option("--out", flags.out, "output path");
  run->add_option("--format", flags.format, "csv or json");
  run->add_option("--selection-order", flags.selection_order,
                  "greedy order: smallest or largest");
  run->add_option("--weight-mode", flags.weight_mode,
                  "none, per_su or per_sbs");
  run->add_option("--window", flags.window, "weight window size");
  run->add_option("--threads", flags.threads, "worker threads (0 = auto)");
  run->add_option("--cap", flags.cap, "brute-force enumeration cap");
  run->add_flag("--fixed-sbs", flags.fixed_sbs,
                "hold SBS placement fixed across trials");
  run->add_flag("--timing", flags.timing,
                "record wall times (output no longer byte-reproducible)");
  run->add_flag("--dump-weights", flags.dump_weights,
                "write per-slot entity weights to <out>.weights.csv");
  run->add_flag("--no-summary", flags.no_summary, "skip the summary table");

  int cx_su = 10, cx_sbs = 20, cx_window = 1000;
  CLI::App* complexity =
      app.add_subcommand("complexity", "print solver cost estimates");
  complexity->add_option("-k,--num-su", cx_su, "number of users");
  complexity->add_option("-n,--num-sbs", cx_sbs, "number of base stations");
  complexity->add_option("-t,--window", cx_window, "weight window size");

  std::uint64_t verify_seed = 20240913;
  CLI::App* verify = app.add_subcommand("verify", "run the oracle suites");
  verify->add_option("--seed", verify_seed, "seed for randomized checks");

  ExportFlags export_flags;
  CLI::App* export_lp = app.add_subcommand(
      "export-lp", "write one instance as an LP file for external solvers");
  export_lp->add_option("scenario", export_flags.scenario_path,
                        "scenario JSON file (sampled fresh when omitted)");
  export_lp->add_option("--out", export_flags.out, "output path");
  export_lp->add_option("-k,--num-su", export_flags.num_su, "users to sample");
  export_lp->add_option("-n,--num-sbs", export_flags.num_sbs,
                        "stations to sample");
  export_lp->add_option("--ref-distance", export_flags.ref_distance,
                        "far-field reference distance in meters");
  export_lp->add_option("--seed", export_flags.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return run_command(flags);
    if (complexity->parsed()) {
      return complexity_command(cx_su, cx_sbs, cx_window);
    }
    if (verify->parsed()) return verify_command(verify_seed);
    if (export_lp->parsed()) return export_lp_command(export_flags);
  } catch (const hetsnet::CapRefusalError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitCapRefusal;
  } catch (const hetsnet::EnumerationCapError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitCapRefusal;
  } catch (const hetsnet::ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const hetsnet::MuInfeasibleError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return kExitOk;
}
