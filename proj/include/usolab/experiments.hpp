#pragma once

// Reproducible experiment drivers that emit per-cell observed values,
// bounds and verdicts.

#include <cstdint>
#include <string>
#include <vector>

namespace usolab {

enum class Verdict { Pass, Fail, Info };
std::string verdict_name(Verdict v);

struct ExperimentCell {
  int n = 0;
  std::string parameter;
  std::string observed;
  std::string bound;
  Verdict verdict = Verdict::Info;
};

struct ExperimentResult {
  std::string name;
  std::vector<ExperimentCell> cells;
  /// Human-readable descriptions of failing cases (instance, start, trace).
  std::vector<std::string> failures;

  bool pass() const;
  /// Header: experiment,n,parameter,observed,bound,verdict
  std::string to_csv() const;
  std::string to_json() const;

  void add(int n, std::string parameter, std::string observed, std::string bound, Verdict v);
  void check(int n, std::string parameter, std::string observed, std::string bound, bool ok);
};

std::vector<std::string> experiment_names();

/// Murty (identity) on Morris from 0: total steps and milestone gaps.
ExperimentResult exp_thm_id(const std::vector<int>& ns);

struct ThmGeneralConfig {
  std::vector<int> ns{3, 5, 7, 9, 11, 13, 15};
  /// All permutations and starts up to this n; sampling above.
  int exhaustive_max_n = 5;
  int samples = 1000;
  std::uint64_t seed = 1;
};
ExperimentResult exp_thm_general(const ThmGeneralConfig& cfg);

struct KBoundConfig {
  std::vector<int> ns{2, 3, 4, 5, 6, 7, 8};
  int instances = 100;
  int exhaustive_max_n = 6;
  int sampled_starts = 100;
  bool include_ppt = true;
  std::uint64_t seed = 1;
};
ExperimentResult exp_k_bound(const KBoundConfig& cfg);

struct RandomEdgeConfig {
  std::vector<int> ns{7, 9, 11, 13};
  int trials = 200;
  std::uint64_t step_cap = 10'000'000;
  /// Dimension at which level-1 transitions are tallied, and the minimum tally.
  int level_one_n = 11;
  std::uint64_t level_one_steps = 100'000;
  std::uint64_t seed = 1;
};
ExperimentResult exp_random_edge(const RandomEdgeConfig& cfg);

/// Antipodal greedy on Morris n = 3 from all eight starts.
ExperimentResult exp_greedy_cycle();

/// Dispatch by name: thm-id, thm-general, k-bound, random-edge, greedy-cycle.
/// An empty ns keeps the experiment's default grid.
ExperimentResult run_experiment(const std::string& name, const std::vector<int>& ns, std::uint64_t seed);

}  // namespace usolab
