#include "usolab/pivot.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "usolab/errors.hpp"
#include "usolab/verify.hpp"

namespace usolab {

namespace {

const std::vector<std::pair<RuleKind, std::string>>& rule_table() {
  static const std::vector<std::pair<RuleKind, std::string>> table{
      {RuleKind::Murty, "murty"},
      {RuleKind::MurtyPi, "murty-pi"},
      {RuleKind::RandomizedMurty, "randomized-murty"},
      {RuleKind::RandomEdge, "random-edge"},
      {RuleKind::GreedyAntipodal, "greedy-antipodal"},
      {RuleKind::GreedySubcubeSink, "greedy-subcube-sink"},
  };
  return table;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  return pi;
}

}  // namespace

std::string rule_kind_name(RuleKind kind) {
  for (const auto& [k, name] : rule_table())
    if (k == kind) return name;
  return "unknown";
}

RuleKind parse_rule_kind(const std::string& name) {
  for (const auto& [k, n] : rule_table())
    if (n == name) return k;
  throw RangeError("unknown pivot rule \"" + name + "\"");
}

const std::vector<RuleKind>& all_rule_kinds() {
  static const std::vector<RuleKind> kinds = [] {
    std::vector<RuleKind> out;
    for (const auto& entry : rule_table()) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

std::string PivotRule::name() const { return rule_kind_name(kind); }

void check_permutation(const std::vector<int>& pi, int n) {
  if (static_cast<int>(pi.size()) != n)
    throw RangeError("permutation has " + std::to_string(pi.size()) + " entries, expected " + std::to_string(n));
  std::vector<char> seen(n + 1, 0);
  for (int x : pi) {
    if (x < 1 || x > n || seen[x]) throw RangeError("not a permutation of 1.." + std::to_string(n));
    seen[x] = 1;
  }
}

PivotChooser::PivotChooser(const PivotRule& rule, int n) : kind_(rule.kind), rng_(rule.seed) {
  switch (rule.kind) {
    case RuleKind::MurtyPi:
      check_permutation(rule.pi, n);
      pi_ = rule.pi;
      break;
    case RuleKind::RandomizedMurty:
      pi_ = identity_permutation(n);
      rng_.shuffle(pi_);
      break;
    default:
      pi_ = identity_permutation(n);
  }
}

int PivotChooser::choose(const CoordSet& outgoing) {
  if (outgoing.empty()) throw RangeError("pivot rule called with no outgoing edge");
  switch (kind_) {
    case RuleKind::Murty:
      return outgoing.min();
    case RuleKind::MurtyPi:
    case RuleKind::RandomizedMurty:
      for (int c : pi_)
        if (outgoing.contains(c)) return c;
      break;
    case RuleKind::RandomEdge: {
      std::uint64_t m = outgoing.mask();
      for (std::uint64_t k = rng_.below(static_cast<std::uint64_t>(outgoing.size())); k > 0; --k) m &= m - 1;
      return std::countr_zero(m) + 1;
    }
    default:
      throw RangeError("greedy rules choose coordinate sets, not single coordinates");
  }
  throw RangeError("permutation does not cover the outgoing set");
}

int choose(const PivotRule& rule, const CoordSet& outgoing) {
  if (rule.kind != RuleKind::Murty && rule.kind != RuleKind::MurtyPi)
    throw RangeError("stateless choice is defined for murty and murty-pi only");
  return PivotChooser(rule, outgoing.dimension()).choose(outgoing);
}

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::SinkReached: return "sink-reached";
    case RunStatus::CycleDetected: return "cycle-detected";
    case RunStatus::StepLimit: return "step-limit";
  }
  return "unknown";
}

std::vector<Vertex> RunTrace::vertices() const {
  std::vector<Vertex> out;
  out.reserve(steps.size() + 1);
  for (const auto& s : steps) out.push_back(s.vertex);
  out.push_back(final_vertex);
  return out;
}

std::uint64_t default_step_limit(const PivotRule& rule, int n) {
  if (rule.kind == RuleKind::RandomEdge) return 10'000'000;
  return 50ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
}

namespace {

// Shared driver; `pick` maps (vertex, outmap) to the coordinates to flip.
template <typename Pick>
RunTrace drive(const Orientation& o, const Vertex& start, bool revisit_is_cycle, std::uint64_t limit,
               const RunLimits& limits, Pick&& pick) {
  if (start.dimension() != o.dimension())
    throw RangeError("start vertex " + start.to_string() + " does not match dimension " +
                     std::to_string(o.dimension()));
  if (limit == 0) throw RangeError("step limit must be at least 1");
  RunTrace trace;
  trace.start = start;
  std::unordered_set<std::uint64_t> visited;
  Vertex v = start;
  Outmap out;
  while (true) {
    out = o.evaluate(v);
    ++trace.evaluations;
    if (out.is_sink()) {
      trace.status = RunStatus::SinkReached;
      break;
    }
    if (revisit_is_cycle && !visited.insert(v.bits()).second) {
      trace.status = RunStatus::CycleDetected;
      break;
    }
    if (trace.step_count >= limit) {
      trace.status = RunStatus::StepLimit;
      break;
    }
    const CoordSet chosen = pick(v, out);
    PivotStep step{trace.step_count, v, out, chosen, level(out, v), upper_minus_count(out, v)};
    if (limits.observer) limits.observer(step);
    if (limits.record) trace.steps.push_back(std::move(step));
    v = flip(v, chosen);
    ++trace.step_count;
    trace.flipped += static_cast<std::uint64_t>(chosen.size());
  }
  trace.final_vertex = v;
  trace.final_outmap = out;
  return trace;
}

CoordSet face_sink_offset(const Orientation& o, const Vertex& v, const CoordSet& face) {
  if (face.size() > UsoTable::kMaxTableDimension)
    throw CapabilityError("outgoing face too large to search for its sink");
  std::optional<std::uint64_t> sink;
  int count = 0;
  for_each_submask(face.mask(), [&](std::uint64_t sub) {
    const Vertex w(v.dimension(), v.bits() ^ sub);
    if ((o.evaluate(w).minus_mask() & face.mask()) == 0) {
      ++count;
      sink = sub;
    }
  });
  if (count != 1)
    throw MalformedOrientationError("face " + Subcube(v, face).to_string() + " has " + std::to_string(count) +
                                    " sinks");
  return CoordSet::from_mask(v.dimension(), *sink);
}

}  // namespace

RunTrace run(const Orientation& o, const PivotRule& rule, const Vertex& start, const RunLimits& limits) {
  if (rule.kind == RuleKind::GreedyAntipodal) return run_greedy(o, start, GreedyVariant::Antipodal, limits);
  if (rule.kind == RuleKind::GreedySubcubeSink) return run_greedy(o, start, GreedyVariant::SubcubeSink, limits);
  const int n = o.dimension();
  PivotChooser chooser(rule, n);
  const std::uint64_t limit = limits.max_steps ? limits.max_steps : default_step_limit(rule, n);
  RunTrace trace = drive(o, start, rule.revisit_is_cycle(), limit, limits,
                         [&](const Vertex&, const Outmap& out) {
                           CoordSet c(n);
                           c.insert(chooser.choose(out.outgoing_set()));
                           return c;
                         });
  trace.permutation = chooser.permutation();
  return trace;
}

RunTrace run_greedy(const Orientation& o, const Vertex& start, GreedyVariant variant, const RunLimits& limits) {
  const int n = o.dimension();
  const std::uint64_t limit = limits.max_steps ? limits.max_steps : 50ULL * n * n;
  std::uint64_t extra_evaluations = 0;
  RunTrace trace = drive(o, start, true, limit, limits, [&](const Vertex& v, const Outmap& out) {
    if (variant == GreedyVariant::Antipodal) return out.outgoing_set();
    extra_evaluations += std::uint64_t{1} << out.outdegree();
    return face_sink_offset(o, v, out.outgoing_set());
  });
  trace.evaluations += extra_evaluations;
  return trace;
}

std::optional<Cycle> detect_cycle(const RunTrace& trace) {
  if (trace.steps.empty()) return std::nullopt;
  const std::vector<Vertex> seq = trace.vertices();
  std::unordered_map<std::uint64_t, std::size_t> first;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    auto [it, inserted] = first.emplace(seq[j].bits(), j);
    if (!inserted) {
      Cycle c;
      c.repeated = seq[j];
      c.segment.assign(seq.begin() + static_cast<std::ptrdiff_t>(it->second),
                       seq.begin() + static_cast<std::ptrdiff_t>(j));
      return c;
    }
  }
  return std::nullopt;
}

namespace {

std::string join_coords(const CoordSet& s) {
  std::string out;
  for (int c : s.members()) {
    if (!out.empty()) out += ';';
    out += std::to_string(c);
  }
  return out;
}

}  // namespace

std::string trace_to_csv(const RunTrace& trace) {
  std::string out = "step,vertex,outmap,chosen,level,L,status\n";
  for (const auto& s : trace.steps)
    out += std::to_string(s.index) + "," + s.vertex.to_string() + "," + s.outmap.to_string() + "," +
           join_coords(s.chosen) + "," + std::to_string(s.level) + "," + std::to_string(s.upper) + ",\n";
  out += std::to_string(trace.step_count) + "," + trace.final_vertex.to_string() + "," +
         trace.final_outmap.to_string() + ",," + std::to_string(level(trace.final_outmap, trace.final_vertex)) +
         "," + std::to_string(upper_minus_count(trace.final_outmap, trace.final_vertex)) + "," +
         status_name(trace.status) + "\n";
  return out;
}

}  // namespace usolab
