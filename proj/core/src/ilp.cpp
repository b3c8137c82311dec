#include "hetsnet/ilp.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace hetsnet {

MuInfeasibleError::MuInfeasibleError(double mu_link_snr, double mu_threshold)
    : std::runtime_error(
          "macro user cannot meet its threshold with all SBSs silent "
          "(link SNR " +
          std::to_string(mu_link_snr) + " vs threshold " +
          std::to_string(mu_threshold) + ")"),
      mu_link_snr_(mu_link_snr),
      mu_threshold_(mu_threshold) {}

double compute_big_m(const Scenario& scn) {
  const int num_su = scn.num_su();
  const int num_sbs = scn.num_sbs();
  const double beta = scn.su_threshold;

  // For a fixed user, the worst binary assignment activates every other
  // base station for each of the other users, and the worst excluded
  // station is the one with the smallest gain (it keeps the largest sum in
  // play). Taking the maximum over users covers every pair and assignment.
  double best = 0.0;
  for (int k = 0; k < num_su; ++k) {
    double row_sum = 0.0;
    double row_min = scn.gain_su_sbs(k, 0);
    for (int n = 0; n < num_sbs; ++n) {
      const double g = scn.gain_su_sbs(k, n);
      row_sum += g;
      row_min = std::min(row_min, g);
    }
    const double value = beta + beta * scn.mbs_snr * scn.gain_su_mbs(k) +
                         (num_su - 1) * beta * scn.sbs_snr *
                             (row_sum - row_min);
    if (k == 0 || value > best) best = value;
  }
  return best;
}

IlpInstance build_instance(const Scenario& scn) {
  const double mu_link = scn.mbs_snr * scn.gain_mu_mbs();
  if (!(mu_link > scn.mu_threshold)) {
    throw MuInfeasibleError(mu_link, scn.mu_threshold);
  }

  const int num_su = scn.num_su();
  const int num_sbs = scn.num_sbs();
  const int cols = num_su * num_sbs;
  const int rows = num_su + num_sbs + cols + 1;

  IlpInstance inst;
  inst.big_m = compute_big_m(scn);
  inst.num_su = num_su;
  inst.num_sbs = num_sbs;
  inst.a = Matrix(rows, cols);

  // Matching rows: each SBS serves at most one SU, each SU uses at most
  // one SBS.
  for (int n = 0; n < num_sbs; ++n) {
    for (int k = 0; k < num_su; ++k) inst.a(n, inst.column(k, n)) = 1.0;
  }
  for (int k = 0; k < num_su; ++k) {
    for (int n = 0; n < num_sbs; ++n) {
      inst.a(num_sbs + k, inst.column(k, n)) = 1.0;
    }
  }

  // SINR rows, normalized so the right-hand side is 1. The normalizer can
  // only vanish in configurations with no cross interference at all (one
  // user, one station, zero thresholds or zero SBS power); those rows
  // collapse to a plain own-column marker: 1 keeps an individually
  // satisfiable pair selectable, 2 forbids the pair outright.
  const double denom_floor = 1e-12 * std::max(1.0, inst.big_m);
  for (int k = 0; k < num_su; ++k) {
    const double denom = inst.big_m - scn.su_threshold -
                         scn.su_threshold * scn.mbs_snr * scn.gain_su_mbs(k);
    for (int n = 0; n < num_sbs; ++n) {
      const int row = num_su + num_sbs + inst.column(k, n);
      const double own_power = scn.sbs_snr * scn.gain_su_sbs(k, n);
      if (denom > denom_floor) {
        inst.a(row, inst.column(k, n)) = (inst.big_m - own_power) / denom;
        for (int k2 = 0; k2 < num_su; ++k2) {
          if (k2 == k) continue;
          for (int n2 = 0; n2 < num_sbs; ++n2) {
            if (n2 == n) continue;
            inst.a(row, inst.column(k2, n2)) =
                scn.su_threshold * scn.sbs_snr * scn.gain_su_sbs(k, n2) /
                denom;
          }
        }
      } else {
        inst.a(row, inst.column(k, n)) =
            (own_power >= inst.big_m) ? 1.0 : 2.0;
      }
    }
  }

  // Macro-user row over all pair columns.
  const double mu_margin = mu_link - scn.mu_threshold;
  for (int k = 0; k < num_su; ++k) {
    for (int n = 0; n < num_sbs; ++n) {
      inst.a(rows - 1, inst.column(k, n)) =
          scn.mu_threshold * scn.sbs_snr * scn.gain_mu_sbs(n) / mu_margin;
    }
  }
  return inst;
}

bool matrix_feasible(const IlpInstance& inst, const Association& assoc) {
  if (assoc.num_sbs() != inst.num_sbs) {
    throw std::invalid_argument("association size does not match instance");
  }
  if (!assoc.one_to_one(inst.num_su)) {
    throw std::invalid_argument("association is not one-to-one");
  }

  std::vector<int> selected;
  selected.reserve(inst.num_sbs);
  for (int n = 0; n < inst.num_sbs; ++n) {
    if (assoc.assignment[n]) {
      selected.push_back(inst.column(*assoc.assignment[n], n));
    }
  }

  for (int row = 0; row < inst.num_rows(); ++row) {
    double lhs = 0.0;
    for (int col : selected) lhs += inst.a(row, col);
    if (lhs > 1.0 + kMatrixFeasTol) return false;
  }
  return true;
}

namespace {

std::string coef(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string var_name(const IlpInstance& inst, int column) {
  const auto [k, n] = inst.pair_of(column);
  return "x_" + std::to_string(k) + "_" + std::to_string(n);
}

void write_row(const IlpInstance& inst, std::ostream& out, int row) {
  bool any = false;
  for (int col = 0; col < inst.num_cols(); ++col) {
    const double c = inst.a(row, col);
    if (c == 0.0) continue;
    out << (any ? " + " : "") << coef(c) << " " << var_name(inst, col);
    any = true;
  }
  // keep all-zero rows visible so row indices line up with the instance
  if (!any) out << "0 " << var_name(inst, 0);
  out << " <= 1\n";
}

}  // namespace

void write_lp(const IlpInstance& inst, std::ostream& out,
              std::span<const double> weights) {
  out << "\\ user-association feasibility system, " << inst.num_rows()
      << " rows x " << inst.num_cols() << " binary columns\n";
  out << "Maximize\n obj: ";
  for (int col = 0; col < inst.num_cols(); ++col) {
    if (col > 0) out << " + ";
    if (!weights.empty()) out << coef(weights[col]) << " ";
    out << var_name(inst, col);
  }
  out << "\nSubject To\n";
  for (int n = 0; n < inst.num_sbs; ++n) {
    out << " sbs_" << n << ": ";
    write_row(inst, out, n);
  }
  for (int k = 0; k < inst.num_su; ++k) {
    out << " su_" << k << ": ";
    write_row(inst, out, inst.num_sbs + k);
  }
  for (int col = 0; col < inst.num_cols(); ++col) {
    const auto [k, n] = inst.pair_of(col);
    out << " sinr_" << k << "_" << n << ": ";
    write_row(inst, out, inst.num_su + inst.num_sbs + col);
  }
  out << " mu: ";
  write_row(inst, out, inst.num_rows() - 1);
  out << "Binaries\n";
  for (int col = 0; col < inst.num_cols(); ++col) {
    out << " " << var_name(inst, col);
  }
  out << "\nEnd\n";
}

}  // namespace hetsnet
