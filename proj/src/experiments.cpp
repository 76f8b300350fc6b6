#include "usolab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "json.hpp"
#include "usolab/errors.hpp"
#include "usolab/gen.hpp"
#include "usolab/pivot.hpp"
#include "usolab/random.hpp"
#include "usolab/verify.hpp"

namespace usolab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
  }
  return "unknown";
}

bool ExperimentResult::pass() const {
  return std::none_of(cells.begin(), cells.end(), [](const auto& c) { return c.verdict == Verdict::Fail; });
}

void ExperimentResult::add(int n, std::string parameter, std::string observed, std::string bound, Verdict v) {
  cells.push_back({n, std::move(parameter), std::move(observed), std::move(bound), v});
}

void ExperimentResult::check(int n, std::string parameter, std::string observed, std::string bound, bool ok) {
  add(n, std::move(parameter), std::move(observed), std::move(bound), ok ? Verdict::Pass : Verdict::Fail);
}

std::string ExperimentResult::to_csv() const {
  std::string out = "experiment,n,parameter,observed,bound,verdict\n";
  for (const auto& c : cells)
    out += name + "," + std::to_string(c.n) + "," + c.parameter + "," + c.observed + "," + c.bound + "," +
           verdict_name(c.verdict) + "\n";
  return out;
}

std::string ExperimentResult::to_json() const {
  nlohmann::ordered_json doc;
  doc["experiment"] = name;
  doc["verdict"] = pass() ? "pass" : "fail";
  doc["cells"] = cells.size();
  doc["failed_cells"] = std::count_if(cells.begin(), cells.end(),
                                      [](const auto& c) { return c.verdict == Verdict::Fail; });
  doc["failures"] = failures;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& c : cells)
    rows.push_back({{"n", c.n},
                    {"parameter", c.parameter},
                    {"observed", c.observed},
                    {"bound", c.bound},
                    {"verdict", verdict_name(c.verdict)}});
  doc["results"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::vector<std::string> experiment_names() {
  return {"thm-id", "thm-general", "k-bound", "random-edge", "greedy-cycle"};
}

namespace {

std::string num(std::uint64_t x) { return std::to_string(x); }
std::string num(long x) { return std::to_string(x); }
std::string num(int x) { return std::to_string(x); }

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string path_text(const RunTrace& t) {
  std::string out;
  for (const auto& v : t.vertices()) {
    if (!out.empty()) out += '>';
    out += v.to_string();
  }
  return out;
}

std::string perm_text(const std::vector<int>& pi) {
  std::string out;
  for (int x : pi) {
    if (!out.empty()) out += ';';
    out += std::to_string(x);
  }
  return out;
}

void check_morris_dimension(int n) {
  if (n < 3 || n % 2 == 0) throw ParityError("Morris dimension must be odd and at least 3, got " + std::to_string(n));
}

// Transducer oracle, spot-checked against the linear-algebra oracle where affordable.
OrientationPtr morris_oracle(int n) {
  if (n <= 9) return std::make_shared<CrossCheckedOrientation>(morris(n), plcp(morris_instance(n)), 50);
  return morris(n);
}

Vertex milestone(int n, int i) {
  std::uint64_t bits = 0;
  for (int k = 1; k <= i; ++k) bits |= std::uint64_t{1} << (2 * k - 1);
  return Vertex(n, bits);
}

}  // namespace

// --------------------------------------------------------------- thm-id

ExperimentResult exp_thm_id(const std::vector<int>& ns) {
  ExperimentResult r;
  r.name = "thm-id";
  for (int n : ns) {
    check_morris_dimension(n);
    const auto oracle = morris_oracle(n);
    const RunTrace t = run(*oracle, PivotRule::murty(), Vertex::zeros(n));
    const long expected = (static_cast<long>(n) * n + 1) / 2;
    const bool ok = t.status == RunStatus::SinkReached && static_cast<long>(t.step_count) == expected;
    r.check(n, "steps", num(t.step_count), num(expected), ok);
    if (!ok) r.failures.push_back("n=" + num(n) + " status=" + status_name(t.status) + " trace=" + path_text(t));

    const std::vector<Vertex> seq = t.vertices();
    const int m = (n - 1) / 2;
    std::size_t from = 0;
    bool found = true;
    for (int i = 0; i <= m && found; ++i) {
      const Vertex target = milestone(n, i);
      auto it = std::find(seq.begin() + static_cast<std::ptrdiff_t>(from), seq.end(), target);
      if (it == seq.end()) {
        r.check(n, "milestone=" + num(i), "missing", target.to_string(), false);
        r.failures.push_back("n=" + num(n) + " milestone " + target.to_string() + " not visited");
        found = false;
        break;
      }
      const auto at = static_cast<std::size_t>(it - seq.begin());
      if (i > 0) {
        const long gap = static_cast<long>(at - from);
        r.check(n, "gap=" + num(i - 1) + "->" + num(i), num(gap), num(4L * (i - 1) + 3), gap == 4L * (i - 1) + 3);
      }
      from = at;
    }
    if (found) {
      const long tail = static_cast<long>(seq.size() - 1 - from);
      r.check(n, "final-segment", num(tail), num(static_cast<long>(n + 1) / 2), tail == (n + 1) / 2);
    }
  }
  return r;
}

// ---------------------------------------------------------- thm-general

ExperimentResult exp_thm_general(const ThmGeneralConfig& cfg) {
  ExperimentResult r;
  r.name = "thm-general";
  for (int n : cfg.ns) {
    check_morris_dimension(n);
    const long bound = 2L * n * n - (5L * n - 3) / 2;
    const auto oracle = morris_oracle(n);
    std::uint64_t worst = 0;
    std::uint64_t runs = 0;
    long violations = 0;
    const auto one = [&](const std::vector<int>& pi, const Vertex& start) {
      RunLimits limits;
      limits.record = false;
      const RunTrace t = run(*oracle, PivotRule::murty_pi(pi), start, limits);
      ++runs;
      worst = std::max(worst, t.step_count);
      if (t.status != RunStatus::SinkReached || static_cast<long>(t.step_count) > bound) {
        ++violations;
        if (r.failures.size() < 20) {
          const RunTrace full = run(*oracle, PivotRule::murty_pi(pi), start);
          r.failures.push_back("n=" + num(n) + " pi=" + perm_text(pi) + " start=" + start.to_string() +
                               " status=" + status_name(full.status) + " trace=" + path_text(full));
        }
      }
    };
    std::string mode;
    if (n <= cfg.exhaustive_max_n) {
      mode = "exhaustive";
      std::vector<int> pi(n);
      std::iota(pi.begin(), pi.end(), 1);
      do {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) one(pi, Vertex(n, s));
      } while (std::next_permutation(pi.begin(), pi.end()));
    } else {
      mode = "sampled";
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(n)));
      for (int k = 0; k < cfg.samples; ++k) {
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 1);
        rng.shuffle(pi);
        one(pi, Vertex(n, rng.below(std::uint64_t{1} << n)));
      }
    }
    r.check(n, "mode=" + mode + ";runs=" + num(runs) + ";max-steps", num(worst), num(bound),
            violations == 0);
    r.check(n, "violations", num(violations), "0", violations == 0);

    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    const RunTrace t = run(*oracle, PivotRule::murty_pi(id), Vertex::zeros(n));
    const long murty_id = (static_cast<long>(n) * n + 1) / 2;
    r.check(n, "identity-from-0", num(t.step_count), num(murty_id),
            static_cast<long>(t.step_count) <= murty_id);
  }
  return r;
}

// -------------------------------------------------------------- k-bound

namespace {

struct RuleTally {
  long monotone_mismatches = 0;
  std::uint64_t worst = 0;
  long violations = 0;
  std::uint64_t runs = 0;
};

PivotRule make_rule(RuleKind kind, const std::vector<int>& pi, std::uint64_t seed) {
  PivotRule rule;
  rule.kind = kind;
  rule.seed = seed;
  if (kind == RuleKind::MurtyPi) rule.pi = pi;
  return rule;
}

// Runs every rule on a tabulated instance. `monotone_start` is the vertex from
// which each run must fix exactly the coordinates in which it differs from the sink.
void k_runs(const UsoTable& t, const Vertex& monotone_start, const std::vector<Vertex>& starts,
            const std::vector<int>& pi, std::uint64_t seed, const std::string& label,
            std::map<RuleKind, RuleTally>& tallies, ExperimentResult& r) {
  const int n = t.dimension();
  const Vertex sink = t.sink();
  std::uint64_t k = 0;
  for (RuleKind kind : all_rule_kinds()) {
    RuleTally& tally = tallies[kind];
    const auto go = [&](const Vertex& start) {
      const PivotRule rule = make_rule(kind, pi, derive_seed(seed, k++));
      RunLimits limits;
      limits.max_steps = 4ULL * n + 4;
      return run(t, rule, start, limits);
    };
    const auto describe = [&](const RunTrace& trace, const std::string& what) {
      if (r.failures.size() < 20)
        r.failures.push_back(label + " rule=" + rule_kind_name(kind) + " start=" + trace.start.to_string() + " " +
                             what + " status=" + status_name(trace.status) + " trace=" + path_text(trace));
    };
    {
      const RunTrace trace = go(monotone_start);
      const auto expected = static_cast<std::uint64_t>(hamming(monotone_start, sink));
      if (trace.status != RunStatus::SinkReached || trace.flipped != expected) {
        ++tally.monotone_mismatches;
        describe(trace, "expected " + num(expected) + " flips, got " + num(trace.flipped));
      }
    }
    for (const Vertex& s : starts) {
      const RunTrace trace = go(s);
      ++tally.runs;
      tally.worst = std::max(tally.worst, trace.flipped);
      if (trace.status != RunStatus::SinkReached || trace.flipped > 2ULL * n) {
        ++tally.violations;
        describe(trace, "exceeds " + num(2 * n) + " flips");
      }
    }
  }
}

}  // namespace

ExperimentResult exp_k_bound(const KBoundConfig& cfg) {
  ExperimentResult r;
  r.name = "k-bound";
  for (int n : cfg.ns) {
    std::map<RuleKind, RuleTally> plain, pivoted;
    long sink_mismatches = 0;
    for (int k = 0; k < cfg.instances; ++k) {
      const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(n) * 1'000'000 + k);
      GenSpec spec;
      spec.family = Family::RandomK;
      spec.n = n;
      spec.seed = seed;
      const LcpInstance inst = generate_instance(spec);
      const UsoTable t = tabulate_plcp(inst);

      Rng rng(derive_seed(seed, 1));
      std::vector<Vertex> starts;
      if (n <= cfg.exhaustive_max_n) {
        for (std::uint64_t s = 0; s < t.size(); ++s) starts.emplace_back(n, s);
      } else {
        for (int j = 0; j < cfg.sampled_starts; ++j) starts.emplace_back(n, rng.below(t.size()));
      }
      std::vector<int> pi(n);
      std::iota(pi.begin(), pi.end(), 1);
      rng.shuffle(pi);
      const std::string label = "n=" + num(n) + " instance=" + num(k);
      k_runs(t, Vertex::zeros(n), starts, pi, derive_seed(seed, 2), label, plain, r);

      if (!cfg.include_ppt) continue;
      CoordSet alpha(n);
      for (int i = 1; i <= n; ++i)
        if (rng.coin()) alpha.insert(i);
      const UsoTable tp = tabulate_plcp(pivot_instance(inst, alpha));
      const Vertex shift(n, alpha.mask());
      if (tp.sink() != flip(t.sink(), alpha)) {
        ++sink_mismatches;
        r.failures.push_back(label + " alpha=" + alpha.to_string() + " transformed sink " + tp.sink().to_string() +
                             " is not the original sink shifted");
      }
      k_runs(tp, shift, starts, pi, derive_seed(seed, 3), label + " alpha=" + alpha.to_string(), pivoted, r);
    }
    const std::string starts_mode = n <= cfg.exhaustive_max_n ? "all" : num(cfg.sampled_starts);
    for (auto* group : {&plain, &pivoted}) {
      if (group->empty()) continue;
      const std::string fam = group == &plain ? "k" : "ppt";
      for (RuleKind kind : all_rule_kinds()) {
        const RuleTally& tally = (*group)[kind];
        const std::string p = "family=" + fam + ";rule=" + rule_kind_name(kind);
        r.check(n, p + ";check=monotone-mismatches", num(tally.monotone_mismatches), "0",
                tally.monotone_mismatches == 0);
        r.check(n, p + ";starts=" + starts_mode + ";check=max-steps", num(tally.worst), num(2 * n),
                tally.violations == 0);
      }
    }
    if (cfg.include_ppt) r.check(n, "family=ppt;check=sink-shift-mismatches", num(sink_mismatches), "0",
                                 sink_mismatches == 0);
  }
  return r;
}

// ---------------------------------------------------------- random-edge

ExperimentResult exp_random_edge(const RandomEdgeConfig& cfg) {
  ExperimentResult r;
  r.name = "random-edge";
  double previous_mean = -1;
  for (int n : cfg.ns) {
    check_morris_dimension(n);
    const auto oracle = morris_oracle(n);
    const bool tally_level_one = n == cfg.level_one_n;
    std::map<int, std::uint64_t> visits, hits;
    std::uint64_t level_one_total = 0;
    long level_increases = 0;
    std::vector<std::uint64_t> steps;
    long capped = 0;

    const auto trial = [&](std::uint64_t index) {
      int previous_level = n + 1;
      RunLimits limits;
      limits.max_steps = cfg.step_cap;
      limits.record = false;
      limits.observer = [&](const PivotStep& s) {
        if (s.level > previous_level) ++level_increases;
        previous_level = s.level;
        if (tally_level_one && s.level == 1) {
          ++visits[s.upper];
          ++level_one_total;
          if (s.vertex.bit(s.chosen.min()) == 0) ++hits[s.upper];
        }
      };
      const PivotRule rule = PivotRule::random_edge(derive_seed(derive_seed(cfg.seed, n), index));
      const RunTrace t = run(*oracle, rule, Vertex::zeros(n), limits);
      if (t.status == RunStatus::SinkReached && level(t.final_outmap, t.final_vertex) > previous_level)
        ++level_increases;
      return t;
    };

    for (int k = 0; k < cfg.trials; ++k) {
      const RunTrace t = trial(static_cast<std::uint64_t>(k));
      steps.push_back(t.step_count);
      if (t.status != RunStatus::SinkReached) ++capped;
    }
    std::uint64_t extra = 0;
    while (tally_level_one && level_one_total < cfg.level_one_steps && extra < 1'000'000)
      trial(static_cast<std::uint64_t>(cfg.trials) + extra++);

    const double mean =
        std::accumulate(steps.begin(), steps.end(), 0.0) / static_cast<double>(std::max<std::size_t>(1, steps.size()));
    std::vector<std::uint64_t> sorted = steps;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted.empty() ? 0.0
                                         : (sorted.size() % 2 ? static_cast<double>(sorted[sorted.size() / 2])
                                                              : (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]) / 2.0);
    const long murty = (static_cast<long>(n) * n + 1) / 2;
    long factorial = 1;
    for (int i = 2; i <= (n - 1) / 2; ++i) factorial *= i;

    r.add(n, "trials", num(static_cast<long>(steps.size())), "", Verdict::Info);
    r.add(n, "capped-trials", num(capped), "cap=" + num(cfg.step_cap), Verdict::Info);
    if (previous_mean >= 0)
      r.check(n, "mean-steps;check=increasing", num(mean), ">" + num(previous_mean), mean > previous_mean);
    else
      r.add(n, "mean-steps", num(mean), "", Verdict::Info);
    if (n >= 11) r.check(n, "mean-steps;check=above-murty", num(mean), ">" + num(murty), mean > murty);
    r.add(n, "median-steps", num(median), "", Verdict::Info);
    r.add(n, "reference-factorial", num(factorial), "", Verdict::Info);
    r.check(n, "level-increases", num(level_increases), "0", level_increases == 0);
    previous_mean = mean;

    if (!tally_level_one) continue;
    r.check(n, "level1-steps", num(level_one_total), ">=" + num(cfg.level_one_steps),
            level_one_total >= cfg.level_one_steps);
    double deviation = 0, variance = 0;
    for (const auto& [upper, count] : visits) {
      const double p = 1.0 / (upper + 1);
      const double c = static_cast<double>(count);
      const double h = static_cast<double>(hits[upper]);
      deviation += h - c * p;
      variance += c * p * (1 - p);
      const std::string param = "level1;L=" + num(upper) + ";visits=" + num(count);
      const double se = std::sqrt(p * (1 - p) / c);
      if (count < 30 || se == 0) {
        r.add(n, param, num(h / c), num(p), Verdict::Info);
        continue;
      }
      r.check(n, param, num(h / c), num(p) + "+-" + num(3 * se), std::abs(h / c - p) <= 3 * se);
    }
    const double z = variance > 0 ? deviation / std::sqrt(variance) : 0.0;
    r.check(n, "level1-pooled-z", num(z), "|z|<=3", std::abs(z) <= 3.0);
  }
  return r;
}

// --------------------------------------------------------- greedy-cycle

ExperimentResult exp_greedy_cycle() {
  ExperimentResult r;
  r.name = "greedy-cycle";
  const int n = 3;
  const auto oracle = morris_oracle(n);
  int cycling = 0;
  bool weight_two_cycle = true;
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Vertex start(n, s);
    const RunTrace t = run_greedy(*oracle, start, GreedyVariant::Antipodal);
    const auto cycle = detect_cycle(t);
    std::string observed = status_name(t.status) + ":" + num(t.step_count);
    if (cycle) observed += ":cycle-length=" + num(static_cast<long>(cycle->length()));
    const std::string param = "start=" + start.to_string();
    const bool cycled = t.status == RunStatus::CycleDetected;
    if (cycled) ++cycling;
    if (start.weight() == 2) {
      weight_two_cycle = weight_two_cycle && cycled;
      r.check(n, param, observed, "cycle-detected", cycled);
    } else if (s == 0) {
      r.check(n, param, observed, "sink-reached:1", t.status == RunStatus::SinkReached && t.step_count == 1);
    } else {
      r.add(n, param, observed, "", Verdict::Info);
    }
  }
  r.check(n, "cycling-starts", num(cycling), ">=3", cycling >= 3 && weight_two_cycle);
  return r;
}

ExperimentResult run_experiment(const std::string& name, const std::vector<int>& ns, std::uint64_t seed) {
  if (name == "thm-id") {
    if (!ns.empty()) return exp_thm_id(ns);
    std::vector<int> grid;
    for (int n = 3; n <= 25; n += 2) grid.push_back(n);
    return exp_thm_id(grid);
  }
  if (name == "thm-general") {
    ThmGeneralConfig cfg;
    if (!ns.empty()) cfg.ns = ns;
    cfg.seed = seed;
    return exp_thm_general(cfg);
  }
  if (name == "k-bound") {
    KBoundConfig cfg;
    if (!ns.empty()) cfg.ns = ns;
    cfg.seed = seed;
    return exp_k_bound(cfg);
  }
  if (name == "random-edge") {
    RandomEdgeConfig cfg;
    if (!ns.empty()) cfg.ns = ns;
    cfg.seed = seed;
    return exp_random_edge(cfg);
  }
  if (name == "greedy-cycle") return exp_greedy_cycle();
  throw RangeError("unknown experiment \"" + name + "\"");
}

}  // namespace usolab
