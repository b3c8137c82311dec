#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetsnet/baselines.hpp"
#include "hetsnet/channel.hpp"
#include "hetsnet/exact.hpp"
#include "hetsnet/greedy.hpp"
#include "hetsnet/weights.hpp"

namespace hetsnet {

enum class SweepParam {
  kNumSbs,
  kNumSu,
  kSbsSnrDb,
  kMbsSnrDb,
  kSuThresholdDb,
  kMuThresholdDb,
};

// Axis names as they appear in spec files, --sweep arguments and the
// sweep_param output column.
const char* sweep_param_name(SweepParam param);
std::optional<SweepParam> sweep_param_from_name(const std::string& name);

std::optional<Solver> solver_from_name(const std::string& name);
std::optional<WeightMode> weight_mode_from_name(const std::string& name);

enum class OutputFormat { kCsv, kJson };

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Brute force was requested at a sweep point whose matching count exceeds
// the enumeration cap. Separate from ConfigError so the CLI can map it to
// its own exit code.
class CapRefusalError : public std::runtime_error {
public:
  CapRefusalError(const std::string& what, BigInt count)
      : std::runtime_error(what), count_(std::move(count)) {}

  const BigInt& combination_count() const { return count_; }

private:
  BigInt count_;
};

// One Monte Carlo experiment: a base configuration, one swept parameter,
// the algorithms to compare on identical realizations, and the time-slot
// structure for weighted runs. base.seed is the master seed; every derived
// stream comes from it.
struct ExperimentSpec {
  NetworkConfig base;
  SweepParam sweep_param = SweepParam::kNumSbs;
  std::vector<double> sweep_values;
  std::vector<Solver> algorithms;
  int trials = 500;
  int slots = 1;
  std::optional<WeightMode> weight_mode;  // required by WMRCG; applies to BF/BnB too
  int window = 50;
  bool fixed_sbs = false;  // hold SBS placement fixed across trials and slots
  SelectionOrder selection_order = SelectionOrder::kSmallestFirst;
  std::uint64_t enumeration_cap = 10'000'000;
  // Worst-case matchings above which branch and bound is skipped at a sweep
  // point (with a warning) instead of running for hours.
  std::uint64_t bnb_practical_cap = 1'000'000'000;
  bool record_wall_time = false;  // true makes CSV output non-reproducible
  bool dump_weights = false;      // keep per-slot entity weights for audit
  int threads = 0;                // 0 = hardware concurrency
  std::string out_path = "records.csv";
  OutputFormat format = OutputFormat::kCsv;

  // Applies the swept parameter to the base configuration.
  NetworkConfig config_at(double sweep_value) const;

  // Throws ConfigError for malformed specs and CapRefusalError when brute
  // force is requested beyond the enumeration cap.
  void validate() const;
};

ExperimentSpec spec_from_json(const std::string& text);
std::string spec_to_json(const ExperimentSpec& spec);

// One algorithm's outcome on one (sweep value, trial, slot) realization.
struct TrialRecord {
  SweepParam sweep_param = SweepParam::kNumSbs;
  double sweep_value = 0.0;
  int trial = 0;
  int slot = 0;
  Solver algorithm = Solver::kBruteForce;
  double objective = 0.0;
  int associated = 0;
  double mu_sinr = 0.0;  // linear
  double wall_ms = 0.0;
  std::uint64_t scenario_hash = 0;
  std::vector<std::uint8_t> su_associated;   // flag per SU
  std::vector<std::uint8_t> sbs_associated;  // flag per SBS
  // Per-entity weights the solver saw this slot; filled only for weighted
  // algorithms when the spec asks for the audit dump.
  std::vector<double> entity_weights;
};

// Runs the full sweep. Trials execute in parallel on independent derived
// streams; the returned records are in canonical (sweep, trial, slot,
// algorithm) order regardless of thread scheduling, so equal seeds always
// reproduce identical output.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec);

struct SummaryRow {
  double sweep_value = 0.0;
  Solver algorithm = Solver::kBruteForce;
  int records = 0;
  double mean_associated = 0.0;
  double stderr_associated = 0.0;
  double mean_objective = 0.0;
  std::optional<double> jain_su;
  std::optional<double> jain_sbs;
  std::optional<double> gap_vs_exact_pct;  // vs BnB when present, else BF
};

// Per (sweep value, algorithm) means, standard errors, fairness indices
// over accumulated association counts, and the percentage gap to the exact
// solver when one ran in the same experiment.
std::vector<SummaryRow> aggregate(const std::vector<TrialRecord>& records);

void write_records_csv(const std::vector<TrialRecord>& records,
                       std::ostream& out);
void write_records_json(const std::vector<TrialRecord>& records,
                        std::ostream& out);
std::string records_to_csv(const std::vector<TrialRecord>& records);

// Audit sidecar: one row per (record, entity) carrying the weight the
// solver saw, for records that kept their weight snapshot.
void write_weights_csv(const std::vector<TrialRecord>& records,
                       WeightMode mode, std::ostream& out);

void write_summary(const std::vector<SummaryRow>& rows, std::ostream& out);

// Sidecar describing the resolved spec and sampling policy; written next
// to the records so a result set is self-describing.
std::string experiment_meta_json(const ExperimentSpec& spec);

struct ComplexityEstimate {
  std::string algorithm;
  BigInt operations;
};

// Closed-form operation-count estimates for the four solvers at the given
// problem size; exact integers, mainly for sizing enumeration caps.
std::vector<ComplexityEstimate> estimate_complexity(int num_su, int num_sbs,
                                                    int window);

}  // namespace hetsnet
