#include "hetsnet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace hetsnet {

namespace {

// Salt for the stream that places fixed base stations. It depends only on
// the master seed and the station count, so every sweep point with the
// same N sees the same layout.
constexpr std::uint64_t kSbsLayoutSalt = 0x5b5e1a7e6f1d2c3bULL;

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

BigInt factorial_big(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt ipow(int base, int exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

}  // namespace

const char* sweep_param_name(SweepParam param) {
  switch (param) {
    case SweepParam::kNumSbs: return "N";
    case SweepParam::kNumSu: return "K";
    case SweepParam::kSbsSnrDb: return "gamma_db";
    case SweepParam::kMbsSnrDb: return "gamma0_db";
    case SweepParam::kSuThresholdDb: return "beta_db";
    case SweepParam::kMuThresholdDb: return "beta0_db";
  }
  return "unknown";
}

std::optional<SweepParam> sweep_param_from_name(const std::string& name) {
  for (SweepParam p : {SweepParam::kNumSbs, SweepParam::kNumSu,
                       SweepParam::kSbsSnrDb, SweepParam::kMbsSnrDb,
                       SweepParam::kSuThresholdDb, SweepParam::kMuThresholdDb}) {
    if (name == sweep_param_name(p)) return p;
  }
  return std::nullopt;
}

std::optional<Solver> solver_from_name(const std::string& name) {
  for (Solver s : {Solver::kBruteForce, Solver::kBranchAndBound,
                   Solver::kUmrcg, Solver::kWmrcg, Solver::kMaxSinr,
                   Solver::kMinInterference}) {
    if (name == solver_name(s)) return s;
  }
  return std::nullopt;
}

std::optional<WeightMode> weight_mode_from_name(const std::string& name) {
  if (name == "per_su") return WeightMode::kPerSu;
  if (name == "per_sbs") return WeightMode::kPerSbs;
  return std::nullopt;
}

NetworkConfig ExperimentSpec::config_at(double sweep_value) const {
  NetworkConfig cfg = base;
  const auto as_count = [&](const char* what) {
    if (sweep_value < 1.0 || sweep_value != std::floor(sweep_value)) {
      throw ConfigError(std::string(what) +
                        " sweep values must be positive integers");
    }
    return static_cast<int>(sweep_value);
  };
  switch (sweep_param) {
    case SweepParam::kNumSbs: cfg.num_sbs = as_count("N"); break;
    case SweepParam::kNumSu: cfg.num_su = as_count("K"); break;
    case SweepParam::kSbsSnrDb: cfg.sbs_snr_db = sweep_value; break;
    case SweepParam::kMbsSnrDb: cfg.mbs_snr_db = sweep_value; break;
    case SweepParam::kSuThresholdDb: cfg.su_threshold_db = sweep_value; break;
    case SweepParam::kMuThresholdDb: cfg.mu_threshold_db = sweep_value; break;
  }
  return cfg;
}

void ExperimentSpec::validate() const {
  try {
    base.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  if (sweep_values.empty()) throw ConfigError("sweep values must be non-empty");
  if (algorithms.empty()) throw ConfigError("algorithm list must be non-empty");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (slots < 1) throw ConfigError("slots must be at least 1");
  if (window < 1) throw ConfigError("window must be at least 1");
  if (threads < 0) throw ConfigError("threads must be non-negative");

  const bool has_wmrcg =
      std::find(algorithms.begin(), algorithms.end(), Solver::kWmrcg) !=
      algorithms.end();
  if (has_wmrcg && !weight_mode) {
    throw ConfigError("wmrcg requires a weight_mode");
  }
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
      if (algorithms[i] == algorithms[j]) {
        throw ConfigError("duplicate algorithm in list");
      }
    }
  }

  const bool has_bf =
      std::find(algorithms.begin(), algorithms.end(), Solver::kBruteForce) !=
      algorithms.end();
  for (double value : sweep_values) {
    const NetworkConfig cfg = config_at(value);
    try {
      cfg.validate();
    } catch (const std::invalid_argument& err) {
      throw ConfigError(err.what());
    }
    if (has_bf) {
      BigInt count = count_combinations(cfg.num_su, cfg.num_sbs);
      if (count > enumeration_cap) {
        throw CapRefusalError(
            "brute force requested at sweep point " +
                std::string(sweep_param_name(sweep_param)) + "=" +
                fmt("%.12g", value) + " with " + count.str() +
                " matchings, above the cap of " +
                std::to_string(enumeration_cap),
            std::move(count));
      }
    }
  }
}

namespace {

bool algorithm_uses_weights(Solver algo) {
  return algo == Solver::kBruteForce || algo == Solver::kBranchAndBound ||
         algo == Solver::kWmrcg;
}

SolveResult run_algorithm(Solver algo, const Scenario& scn,
                          const ExperimentSpec& spec,
                          const WeightState* wstate) {
  ExactOptions options;
  options.enumeration_cap = spec.enumeration_cap;
  const std::span<const double> w =
      wstate ? wstate->weight_vector() : std::span<const double>{};
  switch (algo) {
    case Solver::kBruteForce: return solve_bf(scn, w, options);
    case Solver::kBranchAndBound: return solve_bnb(scn, w, options);
    case Solver::kUmrcg: return solve_umrcg(scn, spec.selection_order);
    case Solver::kWmrcg: return solve_wmrcg(scn, w, spec.selection_order);
    case Solver::kMaxSinr: return solve_max_sinr(scn);
    case Solver::kMinInterference: return solve_min_interference(scn);
  }
  throw std::logic_error("unhandled algorithm tag");
}

// Sweep points where branch and bound would have to walk an unreasonable
// tree in the worst case; pure function of the spec so reruns skip the
// same points.
std::vector<char> bnb_skip_points(const ExperimentSpec& spec) {
  std::vector<char> skip(spec.sweep_values.size(), 0);
  const bool has_bnb =
      std::find(spec.algorithms.begin(), spec.algorithms.end(),
                Solver::kBranchAndBound) != spec.algorithms.end();
  if (!has_bnb) return skip;
  for (std::size_t i = 0; i < spec.sweep_values.size(); ++i) {
    const NetworkConfig cfg = spec.config_at(spec.sweep_values[i]);
    if (count_combinations(cfg.num_su, cfg.num_sbs) >
        spec.bnb_practical_cap) {
      skip[i] = 1;
    }
  }
  return skip;
}

}  // namespace

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec) {
  spec.validate();

  const std::size_t points = spec.sweep_values.size();
  std::vector<NetworkConfig> configs(points);
  std::vector<std::vector<Vec2>> fixed_layouts(points);
  const std::vector<char> skip_bnb = bnb_skip_points(spec);
  for (std::size_t i = 0; i < points; ++i) {
    configs[i] = spec.config_at(spec.sweep_values[i]);
    if (spec.fixed_sbs) {
      Rng layout_rng = Rng::substream(
          spec.base.seed,
          kSbsLayoutSalt ^ static_cast<std::uint64_t>(configs[i].num_sbs));
      fixed_layouts[i] = sample_sbs_positions(configs[i], layout_rng);
    }
    if (skip_bnb[i]) {
      std::cerr << "warning: skipping bnb at " << sweep_param_name(spec.sweep_param)
                << "=" << fmt("%.12g", spec.sweep_values[i])
                << " (worst-case tree above practical cap)\n";
    }
  }

  const std::size_t num_items = points * static_cast<std::size_t>(spec.trials);
  std::vector<std::vector<TrialRecord>> per_item(num_items);

  auto worker_body = [&](std::size_t item) {
    const std::size_t point = item / spec.trials;
    const int trial = static_cast<int>(item % spec.trials);
    const NetworkConfig& cfg = configs[point];

    // Streams are keyed by trial alone, so sweep points with the same node
    // counts replay identical realizations and differ only in the swept
    // parameter: threshold and power sweeps become paired comparisons.
    Rng rng = Rng::substream(spec.base.seed, static_cast<std::uint64_t>(trial));
    const std::vector<Vec2> sbs_layout =
        spec.fixed_sbs ? fixed_layouts[point]
                       : sample_sbs_positions(cfg, rng);

    // Each weighted algorithm carries its own window, fed by its own
    // associations, exactly as it would run in isolation.
    std::map<Solver, WeightState> weight_states;
    if (spec.weight_mode) {
      for (Solver algo : spec.algorithms) {
        if (algorithm_uses_weights(algo)) {
          weight_states.emplace(
              algo, WeightState(spec.window, *spec.weight_mode, cfg.num_su,
                                cfg.num_sbs));
        }
      }
    }

    std::vector<TrialRecord>& out = per_item[item];
    out.reserve(static_cast<std::size_t>(spec.slots) *
                spec.algorithms.size());
    for (int slot = 0; slot < spec.slots; ++slot) {
      // Fading and user positions are redrawn every slot; base stations
      // stay where this trial (or the fixed layout) put them.
      const Scenario scn = sample_scenario_with_sbs(cfg, sbs_layout, rng);
      const std::uint64_t hash = scn.gain_hash();

      for (Solver algo : spec.algorithms) {
        if (algo == Solver::kBranchAndBound && skip_bnb[point]) continue;
        WeightState* wstate = nullptr;
        if (auto it = weight_states.find(algo); it != weight_states.end()) {
          wstate = &it->second;
        }

        const auto start = std::chrono::steady_clock::now();
        const SolveResult result = run_algorithm(algo, scn, spec, wstate);
        const auto stop = std::chrono::steady_clock::now();

        const SinrReport report = evaluate(scn, result.association);
        TrialRecord rec;
        rec.sweep_param = spec.sweep_param;
        rec.sweep_value = spec.sweep_values[point];
        rec.trial = trial;
        rec.slot = slot;
        rec.algorithm = algo;
        rec.objective = result.objective;
        rec.associated = result.association.associated_count();
        rec.mu_sinr = report.mu_sinr;
        rec.wall_ms =
            spec.record_wall_time
                ? std::chrono::duration<double, std::milli>(stop - start)
                      .count()
                : 0.0;
        rec.scenario_hash = hash;
        rec.su_associated.assign(cfg.num_su, 0);
        rec.sbs_associated.assign(cfg.num_sbs, 0);
        for (const auto& [su, sbs] : result.association.pairs()) {
          rec.su_associated[su] = 1;
          rec.sbs_associated[sbs] = 1;
        }
        if (spec.dump_weights && wstate) {
          const int entities = *spec.weight_mode == WeightMode::kPerSu
                                   ? cfg.num_su
                                   : cfg.num_sbs;
          rec.entity_weights.resize(entities);
          for (int e = 0; e < entities; ++e) {
            rec.entity_weights[e] = *spec.weight_mode == WeightMode::kPerSu
                                        ? wstate->pair_weight(e, 0)
                                        : wstate->pair_weight(0, e);
          }
        }
        out.push_back(std::move(rec));

        if (wstate) *wstate = wstate->updated(result.association);
      }
    }
  };

  unsigned worker_count = spec.threads > 0
                              ? static_cast<unsigned>(spec.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  worker_count = std::min<unsigned>(worker_count, num_items);

  std::atomic<std::size_t> next_item{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto drain = [&] {
    while (true) {
      const std::size_t item = next_item.fetch_add(1);
      if (item >= num_items || failed.load()) return;
      try {
        worker_body(item);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (worker_count <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(drain);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Canonical order regardless of which thread ran what.
  std::vector<TrialRecord> records;
  for (const auto& bundle : per_item) {
    records.insert(records.end(), bundle.begin(), bundle.end());
  }
  return records;
}

std::vector<SummaryRow> aggregate(const std::vector<TrialRecord>& records) {
  struct Accumulator {
    int count = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    double objective_sum = 0.0;
    std::vector<std::int64_t> su_counts;
    std::vector<std::int64_t> sbs_counts;
  };

  std::vector<std::pair<double, Solver>> order;
  std::map<std::pair<double, int>, Accumulator> groups;
  for (const TrialRecord& rec : records) {
    const std::pair<double, int> key{rec.sweep_value,
                                     static_cast<int>(rec.algorithm)};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.emplace_back(rec.sweep_value, rec.algorithm);
    Accumulator& acc = it->second;
    acc.count += 1;
    acc.sum += rec.associated;
    acc.sum_sq += static_cast<double>(rec.associated) * rec.associated;
    acc.objective_sum += rec.objective;
    if (acc.su_counts.size() < rec.su_associated.size()) {
      acc.su_counts.resize(rec.su_associated.size(), 0);
    }
    if (acc.sbs_counts.size() < rec.sbs_associated.size()) {
      acc.sbs_counts.resize(rec.sbs_associated.size(), 0);
    }
    for (std::size_t i = 0; i < rec.su_associated.size(); ++i) {
      acc.su_counts[i] += rec.su_associated[i];
    }
    for (std::size_t i = 0; i < rec.sbs_associated.size(); ++i) {
      acc.sbs_counts[i] += rec.sbs_associated[i];
    }
  }

  // Exact reference per sweep value for the gap column.
  std::map<double, double> exact_mean;
  for (const auto& [key, acc] : groups) {
    const Solver algo = static_cast<Solver>(key.second);
    if (algo == Solver::kBranchAndBound ||
        (algo == Solver::kBruteForce && !exact_mean.contains(key.first))) {
      exact_mean[key.first] = acc.sum / acc.count;
    }
  }

  std::vector<SummaryRow> rows;
  rows.reserve(order.size());
  for (const auto& [value, algo] : order) {
    const Accumulator& acc = groups.at({value, static_cast<int>(algo)});
    SummaryRow row;
    row.sweep_value = value;
    row.algorithm = algo;
    row.records = acc.count;
    row.mean_associated = acc.sum / acc.count;
    if (acc.count > 1) {
      const double variance =
          (acc.sum_sq - acc.sum * acc.sum / acc.count) / (acc.count - 1);
      row.stderr_associated = std::sqrt(std::max(0.0, variance) / acc.count);
    }
    row.mean_objective = acc.objective_sum / acc.count;
    row.jain_su = jain_index(acc.su_counts);
    row.jain_sbs = jain_index(acc.sbs_counts);
    if (auto it = exact_mean.find(value);
        it != exact_mean.end() && algo != Solver::kBranchAndBound &&
        algo != Solver::kBruteForce && it->second > 0.0) {
      row.gap_vs_exact_pct =
          100.0 * (it->second - row.mean_associated) / it->second;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_records_csv(const std::vector<TrialRecord>& records,
                       std::ostream& out) {
  out << "sweep_param,sweep_value,trial,slot,algorithm,objective,associated,"
         "mu_sinr_db,wall_ms,scenario_hash\n";
  char hash_buf[32];
  for (const TrialRecord& rec : records) {
    std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                  static_cast<unsigned long long>(rec.scenario_hash));
    out << sweep_param_name(rec.sweep_param) << ','
        << fmt("%.12g", rec.sweep_value) << ',' << rec.trial << ','
        << rec.slot << ',' << solver_name(rec.algorithm) << ','
        << fmt("%.12g", rec.objective) << ',' << rec.associated << ','
        << fmt("%.9g", linear_to_db(rec.mu_sinr)) << ','
        << fmt("%.3f", rec.wall_ms) << ',' << hash_buf << '\n';
  }
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_records_csv(records, out);
  return out.str();
}

void write_records_json(const std::vector<TrialRecord>& records,
                        std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  char hash_buf[32];
  for (const TrialRecord& rec : records) {
    std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                  static_cast<unsigned long long>(rec.scenario_hash));
    nlohmann::json j;
    j["sweep_param"] = sweep_param_name(rec.sweep_param);
    j["sweep_value"] = rec.sweep_value;
    j["trial"] = rec.trial;
    j["slot"] = rec.slot;
    j["algorithm"] = solver_name(rec.algorithm);
    j["objective"] = rec.objective;
    j["associated"] = rec.associated;
    j["mu_sinr_db"] = linear_to_db(rec.mu_sinr);
    j["wall_ms"] = rec.wall_ms;
    j["scenario_hash"] = hash_buf;
    auto& sus = j["sus"] = nlohmann::json::array();
    for (std::size_t k = 0; k < rec.su_associated.size(); ++k) {
      if (rec.su_associated[k]) sus.push_back(k);
    }
    auto& sbss = j["sbss"] = nlohmann::json::array();
    for (std::size_t n = 0; n < rec.sbs_associated.size(); ++n) {
      if (rec.sbs_associated[n]) sbss.push_back(n);
    }
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

void write_weights_csv(const std::vector<TrialRecord>& records,
                       WeightMode mode, std::ostream& out) {
  out << "sweep_param,sweep_value,trial,slot,algorithm,entity_kind,entity,"
         "weight\n";
  const char* kind = mode == WeightMode::kPerSu ? "su" : "sbs";
  for (const TrialRecord& rec : records) {
    for (std::size_t e = 0; e < rec.entity_weights.size(); ++e) {
      out << sweep_param_name(rec.sweep_param) << ','
          << fmt("%.12g", rec.sweep_value) << ',' << rec.trial << ','
          << rec.slot << ',' << solver_name(rec.algorithm) << ',' << kind
          << ',' << e << ',' << fmt("%.12g", rec.entity_weights[e]) << '\n';
    }
  }
}

void write_summary(const std::vector<SummaryRow>& rows, std::ostream& out) {
  if (rows.empty()) {
    out << "no data\n";
    return;
  }
  char line[256];
  out << "sweep_value  algorithm   records  mean_assoc  stderr   "
         "mean_obj   gap_pct   jain_su  jain_sbs\n";
  for (const SummaryRow& row : rows) {
    std::snprintf(line, sizeof(line),
                  "%11.6g  %-10s %8d  %10.4f  %7.4f  %9.4f  %8s  %7s  %7s\n",
                  row.sweep_value, solver_name(row.algorithm), row.records,
                  row.mean_associated, row.stderr_associated,
                  row.mean_objective,
                  row.gap_vs_exact_pct ? fmt("%.3f", *row.gap_vs_exact_pct).c_str()
                                       : "-",
                  row.jain_su ? fmt("%.4f", *row.jain_su).c_str() : "-",
                  row.jain_sbs ? fmt("%.4f", *row.jain_sbs).c_str() : "-");
    out << line;
  }
}

namespace {

nlohmann::json config_json(const NetworkConfig& cfg) {
  return {
      {"num_su", cfg.num_su},
      {"num_sbs", cfg.num_sbs},
      {"cell_radius_m", cfg.cell_radius_m},
      {"path_loss_exp", cfg.path_loss_exp},
      {"ref_distance_m", cfg.ref_distance_m},
      {"sbs_snr_db", cfg.sbs_snr_db},
      {"mbs_snr_db", cfg.mbs_snr_db},
      {"su_threshold_db", cfg.su_threshold_db},
      {"mu_threshold_db", cfg.mu_threshold_db},
      {"seed", cfg.seed},
  };
}

void config_from_json(const nlohmann::json& j, NetworkConfig& cfg) {
  static const char* keys[] = {
      "num_su", "num_sbs", "cell_radius_m", "path_loss_exp",
      "ref_distance_m", "sbs_snr_db", "mbs_snr_db", "su_threshold_db",
      "mu_threshold_db", "seed"};
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(std::begin(keys), std::end(keys), [&](const char* k) {
          return key == k;
        }) == std::end(keys)) {
      throw ConfigError("unknown config key: " + key);
    }
  }
  if (j.contains("num_su")) cfg.num_su = j["num_su"].get<int>();
  if (j.contains("num_sbs")) cfg.num_sbs = j["num_sbs"].get<int>();
  if (j.contains("cell_radius_m")) cfg.cell_radius_m = j["cell_radius_m"].get<double>();
  if (j.contains("path_loss_exp")) cfg.path_loss_exp = j["path_loss_exp"].get<double>();
  if (j.contains("ref_distance_m")) cfg.ref_distance_m = j["ref_distance_m"].get<double>();
  if (j.contains("sbs_snr_db")) cfg.sbs_snr_db = j["sbs_snr_db"].get<double>();
  if (j.contains("mbs_snr_db")) cfg.mbs_snr_db = j["mbs_snr_db"].get<double>();
  if (j.contains("su_threshold_db")) cfg.su_threshold_db = j["su_threshold_db"].get<double>();
  if (j.contains("mu_threshold_db")) cfg.mu_threshold_db = j["mu_threshold_db"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
}

}  // namespace

ExperimentSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError(std::string("invalid JSON: ") + err.what());
  }

  static const char* keys[] = {
      "config", "sweep", "algorithms", "trials", "slots", "weight_mode",
      "window", "fixed_sbs", "selection_order", "enumeration_cap",
      "bnb_practical_cap", "timing", "dump_weights", "threads", "out",
      "format"};
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(std::begin(keys), std::end(keys), [&](const char* k) {
          return key == k;
        }) == std::end(keys)) {
      throw ConfigError("unknown spec key: " + key);
    }
  }

  ExperimentSpec spec;
  try {
    if (j.contains("config")) config_from_json(j["config"], spec.base);
    if (j.contains("sweep")) {
      const auto& sweep = j["sweep"];
      const auto param =
          sweep_param_from_name(sweep.at("param").get<std::string>());
      if (!param) {
        throw ConfigError("unknown sweep param: " +
                          sweep.at("param").get<std::string>());
      }
      spec.sweep_param = *param;
      spec.sweep_values = sweep.at("values").get<std::vector<double>>();
    }
    if (j.contains("algorithms")) {
      spec.algorithms.clear();
      for (const auto& name : j["algorithms"]) {
        const auto algo = solver_from_name(name.get<std::string>());
        if (!algo) {
          throw ConfigError("unknown algorithm: " + name.get<std::string>());
        }
        spec.algorithms.push_back(*algo);
      }
    }
    if (j.contains("trials")) spec.trials = j["trials"].get<int>();
    if (j.contains("slots")) spec.slots = j["slots"].get<int>();
    if (j.contains("weight_mode")) {
      const auto name = j["weight_mode"].get<std::string>();
      if (name != "none") {
        const auto mode = weight_mode_from_name(name);
        if (!mode) throw ConfigError("unknown weight_mode: " + name);
        spec.weight_mode = mode;
      }
    }
    if (j.contains("window")) spec.window = j["window"].get<int>();
    if (j.contains("fixed_sbs")) spec.fixed_sbs = j["fixed_sbs"].get<bool>();
    if (j.contains("selection_order")) {
      const auto name = j["selection_order"].get<std::string>();
      if (name == "smallest") {
        spec.selection_order = SelectionOrder::kSmallestFirst;
      } else if (name == "largest") {
        spec.selection_order = SelectionOrder::kLargestFirst;
      } else {
        throw ConfigError("selection_order must be smallest or largest");
      }
    }
    if (j.contains("enumeration_cap")) {
      spec.enumeration_cap = j["enumeration_cap"].get<std::uint64_t>();
    }
    if (j.contains("bnb_practical_cap")) {
      spec.bnb_practical_cap = j["bnb_practical_cap"].get<std::uint64_t>();
    }
    if (j.contains("timing")) spec.record_wall_time = j["timing"].get<bool>();
    if (j.contains("dump_weights")) {
      spec.dump_weights = j["dump_weights"].get<bool>();
    }
    if (j.contains("threads")) spec.threads = j["threads"].get<int>();
    if (j.contains("out")) spec.out_path = j["out"].get<std::string>();
    if (j.contains("format")) {
      const auto name = j["format"].get<std::string>();
      if (name == "csv") {
        spec.format = OutputFormat::kCsv;
      } else if (name == "json") {
        spec.format = OutputFormat::kJson;
      } else {
        throw ConfigError("format must be csv or json");
      }
    }
  } catch (const nlohmann::json::exception& err) {
    throw ConfigError(std::string("malformed spec: ") + err.what());
  }
  return spec;
}

std::string spec_to_json(const ExperimentSpec& spec) {
  nlohmann::json j;
  j["config"] = config_json(spec.base);
  j["sweep"] = {{"param", sweep_param_name(spec.sweep_param)},
                {"values", spec.sweep_values}};
  auto& algos = j["algorithms"] = nlohmann::json::array();
  for (Solver algo : spec.algorithms) algos.push_back(solver_name(algo));
  j["trials"] = spec.trials;
  j["slots"] = spec.slots;
  j["weight_mode"] =
      spec.weight_mode ? weight_mode_name(*spec.weight_mode) : "none";
  j["window"] = spec.window;
  j["fixed_sbs"] = spec.fixed_sbs;
  j["selection_order"] =
      spec.selection_order == SelectionOrder::kSmallestFirst ? "smallest"
                                                             : "largest";
  j["enumeration_cap"] = spec.enumeration_cap;
  j["bnb_practical_cap"] = spec.bnb_practical_cap;
  j["timing"] = spec.record_wall_time;
  j["dump_weights"] = spec.dump_weights;
  j["threads"] = spec.threads;
  j["out"] = spec.out_path;
  j["format"] = spec.format == OutputFormat::kCsv ? "csv" : "json";
  return j.dump(2);
}

std::string experiment_meta_json(const ExperimentSpec& spec) {
  nlohmann::json j = nlohmann::json::parse(spec_to_json(spec));
  j["policy"] = {
      {"slot_resampling", "user positions and fading are redrawn every slot"},
      {"sbs_positions", spec.fixed_sbs
                            ? "fixed layout shared by all trials and slots"
                            : "redrawn once per trial"},
      {"weights", "weighted algorithms update their own window after each slot"},
      {"wall_ms", spec.record_wall_time
                      ? "measured (output not byte-reproducible)"
                      : "recorded as 0 for reproducible output"},
  };
  const std::vector<char> skip = bnb_skip_points(spec);
  auto& skipped = j["bnb_skipped_points"] = nlohmann::json::array();
  for (std::size_t i = 0; i < skip.size(); ++i) {
    if (skip[i]) skipped.push_back(spec.sweep_values[i]);
  }
  return j.dump(2);
}

std::vector<ComplexityEstimate> estimate_complexity(int num_su, int num_sbs,
                                                    int window) {
  if (num_su < 1 || num_sbs < 1 || window < 1) {
    throw std::invalid_argument("complexity inputs must be at least 1");
  }
  BigInt ubf, wbf;
  if (num_su < num_sbs) {
    ubf = ipow(num_su, 3) * ipow(num_sbs, num_su + 2);
    wbf = ipow(num_su, 4) * ipow(num_sbs, num_su + 3);
  } else if (num_sbs < num_su) {
    ubf = ipow(num_sbs, 3) * ipow(num_su, num_sbs + 2);
    wbf = ipow(num_sbs, 4) * ipow(num_su, num_sbs + 3);
  } else {
    ubf = ipow(num_sbs, 5) * factorial_big(num_sbs);
    wbf = ipow(num_sbs, 7) * factorial_big(num_sbs);
  }
  const BigInt umrcg = ipow(num_su, 2) * ipow(num_sbs, 2);
  const BigInt wmrcg =
      BigInt(num_su) * num_sbs * window + ipow(num_su, 2) * ipow(num_sbs, 2);
  return {{"UBF", ubf}, {"WBF", wbf}, {"UMRCG", umrcg}, {"WMRCG", wmrcg}};
}

}  // namespace hetsnet
