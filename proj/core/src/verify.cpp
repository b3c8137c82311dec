#include "hetsnet/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hetsnet/ilp.hpp"
#include "hetsnet/weights.hpp"

namespace hetsnet::verify {

namespace {

void visit_matchings(int num_su, int num_sbs, int next_su, Association& work,
                     std::vector<char>& used_sbs,
                     const std::function<void(const Association&)>& visit) {
  if (next_su == num_su) {
    visit(work);
    return;
  }
  visit_matchings(num_su, num_sbs, next_su + 1, work, used_sbs, visit);
  for (int n = 0; n < num_sbs; ++n) {
    if (used_sbs[n]) continue;
    used_sbs[n] = 1;
    work.assignment[n] = next_su;
    visit_matchings(num_su, num_sbs, next_su + 1, work, used_sbs, visit);
    work.assignment[n] = std::nullopt;
    used_sbs[n] = 0;
  }
}

}  // namespace

void for_each_matching(int num_su, int num_sbs,
                       const std::function<void(const Association&)>& visit) {
  Association work(num_sbs);
  std::vector<char> used_sbs(num_sbs, 0);
  visit_matchings(num_su, num_sbs, 0, work, used_sbs, visit);
}

BigInt count_matchings_by_enumeration(int num_su, int num_sbs) {
  BigInt count = -1;  // discount the empty matching
  for_each_matching(num_su, num_sbs,
                    [&count](const Association&) { ++count; });
  return count;
}

bool feasible_by_direct_arithmetic(const Scenario& scn,
                                   const Association& assoc) {
  const int num_sbs = scn.num_sbs();
  // Macro user: own link over one plus the power of every serving station.
  double mu_interference = 0.0;
  for (int n = 0; n < num_sbs; ++n) {
    if (assoc.assignment[n]) {
      mu_interference += scn.sbs_snr * scn.gain_mu_sbs(n);
    }
  }
  const double mu_sinr =
      scn.mbs_snr * scn.gain_mu_mbs() / (1.0 + mu_interference);
  if (mu_sinr < scn.mu_threshold) return false;

  // Every associated user: own link over one plus macro leakage plus the
  // power of every other serving station.
  for (int n = 0; n < num_sbs; ++n) {
    if (!assoc.assignment[n]) continue;
    const int k = *assoc.assignment[n];
    double interference = scn.mbs_snr * scn.gain_su_mbs(k);
    for (int n2 = 0; n2 < num_sbs; ++n2) {
      if (n2 == n || !assoc.assignment[n2]) continue;
      interference += scn.sbs_snr * scn.gain_su_sbs(k, n2);
    }
    const double sinr =
        scn.sbs_snr * scn.gain_su_sbs(k, n) / (1.0 + interference);
    if (sinr < scn.su_threshold) return false;
  }
  return true;
}

SolveResult best_by_enumeration(const Scenario& scn,
                                std::span<const double> weights) {
  SolveResult best;
  best.association = Association(scn.num_sbs());
  best.solver = Solver::kBruteForce;
  for_each_matching(scn.num_su(), scn.num_sbs(), [&](const Association& a) {
    ++best.nodes_explored;
    if (!feasible_by_direct_arithmetic(scn, a)) return;
    const double value = association_objective(a, weights);
    if (value > best.objective ||
        (value == best.objective && lex_precedes(a, best.association))) {
      best.association = a;
      best.objective = value;
    }
  });
  return best;
}

CheckResult check_combination_counts(int max_su, int max_sbs) {
  for (int k = 1; k <= max_su; ++k) {
    for (int n = 1; n <= max_sbs; ++n) {
      const BigInt closed = count_combinations(k, n);
      const BigInt enumerated = count_matchings_by_enumeration(k, n);
      if (closed != enumerated) {
        return {"combination counts", false,
                "mismatch at K=" + std::to_string(k) + " N=" +
                    std::to_string(n) + ": closed form " + closed.str() +
                    " vs enumerated " + enumerated.str()};
      }
    }
  }
  return {"combination counts", true,
          "closed form matches enumeration for all K,N <= " +
              std::to_string(max_su)};
}

CheckResult check_matrix_equivalence(int scenarios, std::uint64_t seed) {
  int checked = 0;
  for (int i = 0; i < scenarios; ++i) {
    Rng rng = Rng::substream(seed, 0xe911abULL + i);
    NetworkConfig cfg;
    cfg.num_su = 1 + static_cast<int>(rng.next_u64() % 4);
    cfg.num_sbs = 1 + static_cast<int>(rng.next_u64() % 4);
    cfg.seed = seed + i;
    const Scenario scn = sample_scenario(cfg, rng);
    if (!(scn.mbs_snr * scn.gain_mu_mbs() > scn.mu_threshold)) continue;
    const IlpInstance inst = build_instance(scn);
    bool mismatch = false;
    std::string detail;
    for_each_matching(cfg.num_su, cfg.num_sbs, [&](const Association& a) {
      if (mismatch) return;
      const bool direct = is_feasible(scn, a);
      const bool matrix = matrix_feasible(inst, a);
      ++checked;
      if (direct != matrix) {
        mismatch = true;
        detail = "scenario " + std::to_string(i) + " disagrees on an " +
                 "association with " + std::to_string(a.associated_count()) +
                 " pairs";
      }
    });
    if (mismatch) return {"matrix-form equivalence", false, detail};
  }
  return {"matrix-form equivalence", true,
          std::to_string(checked) + " associations agreed"};
}

CheckResult check_exact_solvers_agree(int instances, std::uint64_t seed) {
  for (int i = 0; i < instances; ++i) {
    Rng rng = Rng::substream(seed, 0xb27b00 + i);
    NetworkConfig cfg;
    cfg.num_su = 1 + static_cast<int>(rng.next_u64() % 5);
    cfg.num_sbs = 1 + static_cast<int>(rng.next_u64() % 5);
    cfg.seed = seed + i;
    const Scenario scn = sample_scenario(cfg, rng);

    std::vector<double> weights(
        static_cast<std::size_t>(cfg.num_su) * cfg.num_sbs);
    for (int k = 0; k < cfg.num_su; ++k) {
      const double w = 1.0 / (1.0 + static_cast<double>(rng.next_u64() % 8));
      for (int n = 0; n < cfg.num_sbs; ++n) weights[k * cfg.num_sbs + n] = w;
    }

    for (const bool weighted : {false, true}) {
      const std::span<const double> w =
          weighted ? std::span<const double>(weights)
                   : std::span<const double>{};
      const SolveResult bf = solve_bf(scn, w);
      const SolveResult bnb = solve_bnb(scn, w);
      const SolveResult oracle = best_by_enumeration(scn, w);
      if (bf.objective != bnb.objective ||
          bf.objective != oracle.objective) {
        return {"exact solver agreement", false,
                "instance " + std::to_string(i) + (weighted ? " (weighted)" : "") +
                    ": bf=" + std::to_string(bf.objective) +
                    " bnb=" + std::to_string(bnb.objective) +
                    " oracle=" + std::to_string(oracle.objective)};
      }
      if (!(bf.association == bnb.association) ||
          !(bf.association == oracle.association)) {
        return {"exact solver agreement", false,
                "instance " + std::to_string(i) +
                    ": solvers disagree on the tie-broken association"};
      }
    }
  }
  return {"exact solver agreement", true,
          std::to_string(instances) +
              " random instances matched in both modes"};
}

CheckResult check_weight_window(int slots, std::uint64_t seed) {
  Rng rng(seed);
  const int num_su = 5;
  const int num_sbs = 4;
  const int window = 7;

  for (const WeightMode mode : {WeightMode::kPerSu, WeightMode::kPerSbs}) {
    WeightState state(window, mode, num_su, num_sbs);
    std::vector<Association> full_history;
    for (int t = 0; t < slots; ++t) {
      Association a(num_sbs);
      std::vector<char> used(num_su, 0);
      for (int n = 0; n < num_sbs; ++n) {
        const int pick = static_cast<int>(rng.next_u64() % (num_su + 1));
        if (pick < num_su && !used[pick]) {
          a.assignment[n] = pick;
          used[pick] = 1;
        }
      }
      full_history.push_back(a);
      state = state.updated(a);

      // Naive recount over exactly the last min(t+1, window) slots.
      const int entities = mode == WeightMode::kPerSu ? num_su : num_sbs;
      const int start =
          std::max(0, static_cast<int>(full_history.size()) - window);
      for (int e = 0; e < entities; ++e) {
        int count = 0;
        for (std::size_t s = start; s < full_history.size(); ++s) {
          for (int n = 0; n < num_sbs; ++n) {
            const auto& su = full_history[s].assignment[n];
            if (!su) continue;
            if (mode == WeightMode::kPerSu ? *su == e : n == e) ++count;
          }
        }
        const double expected = 1.0 / (1.0 + count);
        const double actual = mode == WeightMode::kPerSu
                                  ? state.pair_weight(e, 0)
                                  : state.pair_weight(0, e);
        if (expected != actual) {
          return {"weight window", false,
                  "slot " + std::to_string(t) + " entity " +
                      std::to_string(e) + ": expected " +
                      std::to_string(expected) + " got " +
                      std::to_string(actual)};
        }
      }
    }
  }
  return {"weight window", true,
          std::to_string(slots) + " slots matched the naive recount"};
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  return {
      check_combination_counts(5, 5),
      check_matrix_equivalence(10, seed),
      check_exact_solvers_agree(60, seed),
      check_weight_window(200, seed),
  };
}

}  // namespace hetsnet::verify
