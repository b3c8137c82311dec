#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>

#include "hetsnet/sinr.hpp"

namespace hetsnet {

// Slack applied to the A*x <= 1 comparison; absorbs the rounding introduced
// by the per-row normalizing division.
inline constexpr double kMatrixFeasTol = 1e-9;

// Big-M linearization of the association feasibility system as a single
// constraint matrix over binary pair-indicator variables.
//
// Column j encodes the pair (su, sbs) with j = su*num_sbs + sbs. Rows are
// laid out as: num_sbs per-SBS matching rows, num_su per-SU matching rows,
// one normalized SINR row per pair in column order, then the macro-user
// row. Every right-hand side is 1, so a binary vector x is feasible exactly
// when A*x <= 1 holds component-wise.
struct IlpInstance {
  Matrix a;
  double big_m = 0.0;
  int num_su = 0;
  int num_sbs = 0;

  int num_rows() const { return static_cast<int>(a.rows()); }
  int num_cols() const { return static_cast<int>(a.cols()); }

  int column(int su, int sbs) const { return su * num_sbs + sbs; }
  std::pair<int, int> pair_of(int column) const {
    return {column / num_sbs, column % num_sbs};
  }
};

// Raised when the macro user cannot meet its threshold even with every SBS
// silent; no instance exists for such a scenario.
class MuInfeasibleError : public std::runtime_error {
public:
  MuInfeasibleError(double mu_link_snr, double mu_threshold);

  double mu_link_snr() const { return mu_link_snr_; }
  double mu_threshold() const { return mu_threshold_; }

private:
  double mu_link_snr_;
  double mu_threshold_;
};

// Smallest constant that deactivates any unselected pair's SINR constraint
// for every binary assignment: the worst user is charged its macro-BS
// leakage plus the largest possible co-channel interference, scaled by the
// SU threshold.
double compute_big_m(const Scenario& scn);

// Builds the full constraint matrix. Throws MuInfeasibleError when the
// macro link cannot support its threshold (the macro row would divide by a
// non-positive margin).
IlpInstance build_instance(const Scenario& scn);

// Encodes the association as a binary vector and checks A*x <= 1 within
// kMatrixFeasTol. Must agree with is_feasible() on every one-to-one
// association of the scenario the instance was built from.
bool matrix_feasible(const IlpInstance& inst, const Association& assoc);

// LP-format dump (CPLEX LP syntax) so external solvers can cross-check an
// instance. Pass pair weights to emit a weighted objective; the default
// objective maximizes the number of selected pairs.
void write_lp(const IlpInstance& inst, std::ostream& out,
              std::span<const double> weights = {});

}  // namespace hetsnet
