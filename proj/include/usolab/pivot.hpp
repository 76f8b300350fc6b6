#pragma once

// Simple principal pivoting on a cube orientation: start somewhere and follow
// outgoing edges, chosen by a pivot rule, until the sink is reached.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "usolab/random.hpp"
#include "usolab/uso.hpp"

namespace usolab {

enum class RuleKind {
  Murty,              // min O
  MurtyPi,            // π(min π^{-1}(O))
  RandomizedMurty,    // MurtyPi with π drawn uniformly once per run
  RandomEdge,         // uniform element of O
  GreedyAntipodal,    // flip every outgoing coordinate at once
  GreedySubcubeSink,  // jump to the sink of the face spanned by O
};

struct PivotRule {
  RuleKind kind = RuleKind::Murty;
  /// One-line notation: pi[k-1] = π(k). Used by MurtyPi only.
  std::vector<int> pi;
  std::uint64_t seed = 0;

  static PivotRule murty() { return {RuleKind::Murty, {}, 0}; }
  static PivotRule murty_pi(std::vector<int> pi) { return {RuleKind::MurtyPi, std::move(pi), 0}; }
  static PivotRule randomized_murty(std::uint64_t seed) { return {RuleKind::RandomizedMurty, {}, seed}; }
  static PivotRule random_edge(std::uint64_t seed) { return {RuleKind::RandomEdge, {}, seed}; }
  static PivotRule greedy_antipodal() { return {RuleKind::GreedyAntipodal, {}, 0}; }
  static PivotRule greedy_subcube_sink() { return {RuleKind::GreedySubcubeSink, {}, 0}; }

  /// Revisiting a vertex proves nontermination for every rule except RandomEdge.
  bool revisit_is_cycle() const noexcept { return kind != RuleKind::RandomEdge; }
  bool greedy() const noexcept {
    return kind == RuleKind::GreedyAntipodal || kind == RuleKind::GreedySubcubeSink;
  }
  std::string name() const;
};

/// Parses murty, murty-pi, randomized-murty, random-edge, greedy-antipodal,
/// greedy-subcube-sink.
RuleKind parse_rule_kind(const std::string& name);
std::string rule_kind_name(RuleKind kind);
const std::vector<RuleKind>& all_rule_kinds();

/// Throws RangeError unless pi is a permutation of 1..n.
void check_permutation(const std::vector<int>& pi, int n);

/// Per-run selection state (the drawn π, the RandomEdge stream).
class PivotChooser {
public:
  PivotChooser(const PivotRule& rule, int n);

  /// One coordinate of the nonempty set O.
  int choose(const CoordSet& outgoing);
  /// The permutation in use (identity for Murty, drawn for RandomizedMurty).
  const std::vector<int>& permutation() const noexcept { return pi_; }

private:
  RuleKind kind_;
  std::vector<int> pi_;
  Rng rng_;
};

/// Stateless choice for Murty and MurtyPi.
int choose(const PivotRule& rule, const CoordSet& outgoing);

enum class RunStatus { SinkReached, CycleDetected, StepLimit };
std::string status_name(RunStatus s);

struct PivotStep {
  std::uint64_t index = 0;
  Vertex vertex;
  Outmap outmap;
  CoordSet chosen;
  int level = 0;
  int upper = 0;  // L(v)
};

struct RunTrace {
  std::vector<PivotStep> steps;  // empty unless recording was requested
  Vertex start;
  Vertex final_vertex;
  Outmap final_outmap;
  RunStatus status = RunStatus::StepLimit;
  std::uint64_t step_count = 0;
  /// Coordinates flipped in total; equals step_count for single-edge rules.
  std::uint64_t flipped = 0;
  std::uint64_t evaluations = 0;
  std::vector<int> permutation;  // π used by Murty-type rules

  /// start, then the vertex after each step (requires recording).
  std::vector<Vertex> vertices() const;
};

enum class GreedyVariant { Antipodal, SubcubeSink };

struct RunLimits {
  /// 0 selects default_step_limit.
  std::uint64_t max_steps = 0;
  bool record = true;
  std::function<void(const PivotStep&)> observer;
};

/// 50 n^2 for rules where a revisit is a cycle; 10^7 for RandomEdge.
std::uint64_t default_step_limit(const PivotRule& rule, int n);

RunTrace run(const Orientation& o, const PivotRule& rule, const Vertex& start, const RunLimits& limits = {});
RunTrace run_greedy(const Orientation& o, const Vertex& start, GreedyVariant variant,
                    const RunLimits& limits = {});

struct Cycle {
  Vertex repeated;
  std::vector<Vertex> segment;  // repeated, ..., last vertex before returning
  std::size_t length() const noexcept { return segment.size(); }
};

/// First repeated vertex in a recorded trace and the segment between its visits.
std::optional<Cycle> detect_cycle(const RunTrace& trace);

/// CSV: step,vertex,outmap,chosen,level,L,status. The terminal row carries
/// the final vertex and the status; chosen coordinates are ';'-separated.
std::string trace_to_csv(const RunTrace& trace);

}  // namespace usolab
