// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "usolab/errors.hpp"
#include "usolab/experiments.hpp"
#include "usolab/gen.hpp"
#include "usolab/pivot.hpp"
#include "usolab/verify.hpp"

using namespace usolab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

LcpInstance instance_of(Family f, int n, std::uint64_t seed) {
  GenSpec spec;
  spec.family = f;
  spec.n = n;
  spec.seed = seed;
  return generate_instance(spec);
}

// Tables shared by several criteria.
struct Corpus {
  std::vector<UsoTable> morris;     // n = 3, 5, 7
  std::vector<UsoTable> k_tables;   // n = 2..6
  std::vector<UsoTable> p_tables;   // n = 2..6
  std::vector<UsoTable> uniform;    // n = 1..6

  Corpus() {
    for (int n : {3, 5, 7}) morris.push_back(tabulate(MorrisOrientation(n)));
    for (int n = 2; n <= 6; ++n)
      for (std::uint64_t s = 0; s < 20; ++s) {
        k_tables.push_back(tabulate_plcp(instance_of(Family::RandomK, n, 7000 + s)));
        p_tables.push_back(tabulate_plcp(instance_of(Family::RandomP, n, 8000 + s)));
      }
    for (int n = 1; n <= 6; ++n) uniform.push_back(tabulate(UniformOrientation(n)));
  }
};

std::string cells_failed(const ExperimentResult& r, const std::string& prefix = "") {
  int bad = 0, total = 0;
  for (const auto& c : r.cells) {
    if (!prefix.empty() && c.parameter.rfind(prefix, 0) != 0) continue;
    ++total;
    bad += c.verdict == Verdict::Fail;
  }
  return std::to_string(total - bad) + "/" + std::to_string(total) + " cells pass";
}

Outcome criterion_thm_id(double& seconds) {
  std::vector<int> ns;
  for (int n = 3; n <= 25; n += 2) ns.push_back(n);
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult r = exp_thm_id(ns);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  for (const auto& c : r.cells)
    if (c.parameter == "steps" && c.verdict != Verdict::Pass) o.pass = false;
  o.pass = o.pass && seconds < 1.0;
  o.detail = "n=3..25 " + cells_failed(r, "steps");
  return o;
}

Outcome criterion_milestones() {
  std::vector<int> ns;
  for (int n = 3; n <= 25; n += 2) ns.push_back(n);
  const ExperimentResult r = exp_thm_id(ns);
  Outcome o;
  int checked = 0;
  for (const auto& c : r.cells) {
    if (c.parameter == "steps") continue;
    ++checked;
    if (c.verdict != Verdict::Pass) o.pass = false;
  }
  // 1 + 2 + ... + 12 gaps plus one final segment for each of the 12 values of n.
  o.pass = o.pass && checked == 78 + 12;
  o.detail = std::to_string(checked) + " milestone gaps and final segments, " + cells_failed(r);
  return o;
}

Outcome criterion_experiment(const ExperimentResult& r, double seconds, double limit) {
  Outcome o;
  o.pass = r.pass() && seconds < limit;
  o.detail = cells_failed(r);
  if (!r.failures.empty()) o.detail += "; first failure: " + r.failures.front();
  return o;
}

Outcome criterion_uso_holt_klee(const Corpus& c) {
  Outcome o;
  int tables = 0;
  for (const auto& t : c.morris) {
    ++tables;
    o.pass = o.pass && is_uso(t).pass && holt_klee(t).pass;
  }
  for (const auto& t : c.p_tables) {
    ++tables;
    o.pass = o.pass && is_uso(t).pass && holt_klee(t).pass;
  }
  o.detail = std::to_string(tables) + " tables (Morris n=3,5,7 and " + std::to_string(c.p_tables.size()) +
             " random P-instances n<=6)";
  return o;
}

Outcome criterion_transducer() {
  Outcome o;
  long mismatches = 0;
  for (int n : {3, 5, 7, 9}) {
    const MorrisOrientation m(n);
    const PlcpOrientation p(morris_instance(n));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
      if (m.evaluate(Vertex(n, b)) != p.evaluate(Vertex(n, b))) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(mismatches) + " mismatches over n=3,5,7,9";
  return o;
}

Outcome criterion_completion(const Corpus& c) {
  Outcome o;
  long tables = 0, disagreements = 0, usos = 0;
  const auto one = [&](const UsoTable& t) {
    ++tables;
    const bool a = is_uso(t).pass;
    usos += a;
    if (a != unique_completion_holds(t).pass) ++disagreements;
  };
  for (std::uint64_t s = 0; s < 500; ++s) one(gen_random_orientation(3, 90000 + s));
  for (const auto* group : {&c.morris, &c.k_tables, &c.p_tables, &c.uniform})
    for (const auto& t : *group) one(t);
  o.pass = disagreements == 0;
  o.detail = std::to_string(tables) + " tables (" + std::to_string(usos) + " USOs), " +
             std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome criterion_uniformity(const Corpus& c) {
  Outcome o;
  long problems = 0, compared = 0;
  for (const auto& t : c.k_tables)
    if (!is_two_uniform(t).pass || !is_locally_up_uniform(t).pass) ++problems;
  for (int n : {3, 5}) {
    const VerifyReport r = is_two_up_uniform(tabulate(MorrisOrientation(n)));
    if (r.pass || !r.witness || !r.witness->face) ++problems;
    if (!is_two_up_uniform(tabulate(*antipodal_relabel(morris(n)))).pass) ++problems;
  }
  std::vector<UsoTable> tested;
  for (int n : {3, 5}) {
    tested.push_back(tabulate(MorrisOrientation(n)));
    tested.push_back(tabulate(*antipodal_relabel(morris(n))));
  }
  for (const auto* group : {&c.k_tables, &c.p_tables, &c.uniform})
    for (const auto& t : *group)
      if (t.dimension() <= 5) tested.push_back(t);
  for (std::uint64_t s = 0; s < 2000; ++s) {
    UsoTable t = gen_random_orientation(3, 50000 + s);
    if (is_uso(t).pass) tested.push_back(std::move(t));
  }
  for (const auto& t : tested) {
    ++compared;
    if (is_locally_up_uniform(t).pass != is_two_up_uniform(t).pass) ++problems;
  }
  o.pass = problems == 0;
  o.detail = std::to_string(c.k_tables.size()) + " K-tables, " + std::to_string(compared) +
             " tables compared for local vs 2-up uniformity, " + std::to_string(problems) + " problems";
  return o;
}

Outcome criterion_morris_structure() {
  Outcome o;
  long violations = 0, edges = 0;
  for (int n : {3, 5, 7, 9}) {
    const UsoTable t = tabulate(MorrisOrientation(n));
    for (std::uint64_t b = 0; b < t.size(); ++b) {
      const Vertex v(n, b);
      const Outmap ov = t.at(b);
      const int lv = level(ov, v);
      if (lv + upper_minus_count(ov, v) != ov.outdegree()) ++violations;
      if (lv != 0 && lv % 2 == 0) ++violations;
      for (int s = 1; s < n; ++s)
        if (t.evaluate(cyclic_shift(v, s)) != cyclic_shift(ov, s)) ++violations;
      for (int i : ov.outgoing_set().members()) {
        ++edges;
        const Vertex u = flip(v, i);
        const Outmap ou = t.evaluate(u);
        const int lu = level(ou, u);
        if (!(lu == lv || lu == lv - 2 || (lv == 1 && lu == 0))) ++violations;
        for (int k = 1; k <= n; ++k)
          if (v.bit(k) == 0 && u.bit(k) == 0 && potential(ou, u, k) > potential(ov, v, k) - 1) ++violations;
      }
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(edges) + " directed edges over n=3,5,7,9, " + std::to_string(violations) + " violations";
  return o;
}

Outcome criterion_monotone(const Corpus& c) {
  Outcome o;
  long vertices = 0, missing = 0;
  std::vector<const UsoTable*> tables;
  for (const auto* group : {&c.morris, &c.k_tables, &c.p_tables, &c.uniform})
    for (const auto& t : *group)
      if (t.dimension() <= 6) tables.push_back(&t);
  for (const UsoTable* t : tables)
    for (std::uint64_t b = 0; b < t->size(); ++b) {
      ++vertices;
      if (!monotone_path_exists(*t, Vertex(t->dimension(), b))) ++missing;
    }
  o.pass = missing == 0;
  o.detail = std::to_string(tables.size()) + " tables, " + std::to_string(vertices) + " vertices, " +
             std::to_string(missing) + " without a monotone path";
  return o;
}

Outcome criterion_longest_path() {
  Outcome o;
  int worst_excess = -100, count = 0;
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t s = 0; s < 100; ++s) {
      const UsoTable t = tabulate_plcp(instance_of(Family::RandomK, n, 6000 + s));
      worst_excess = std::max(worst_excess, longest_path_exact(t) - 2 * n);
      ++count;
    }
  const int morris3 = longest_path_exact(tabulate(MorrisOrientation(3)));
  o.pass = worst_excess <= 0 && morris3 >= 6;
  o.detail = std::to_string(count) + " K-tables n=2..4, max(longest - 2n) = " + std::to_string(worst_excess) +
             "; Morris n=3 longest path " + std::to_string(morris3);
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s  %2d  %-44s %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), s);
    std::fflush(stdout);
  };

  report(1, "Murty identity on Morris: (n^2+1)/2 steps", [] {
    double seconds = 0;
    Outcome o = criterion_thm_id(seconds);
    o.detail += ", run time " + std::to_string(seconds) + "s (< 1s)";
    return o;
  });
  report(2, "Milestone gaps 4i+3 and final segment", criterion_milestones);
  report(3, "Murty_pi bound 2n^2-(5n-3)/2 on Morris", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentResult r = exp_thm_general(ThmGeneralConfig{});
    return criterion_experiment(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 60);
  });
  report(4, "K-instances: exact from 0, <= 2n from all", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentResult r = exp_k_bound(KBoundConfig{});
    return criterion_experiment(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 120);
  });

  const Corpus corpus;
  report(5, "USO axiom and Holt-Klee", [&] { return criterion_uso_holt_klee(corpus); });
  report(6, "Transducer equals linear algebra", criterion_transducer);
  report(7, "USO axiom iff unique completion", [&] { return criterion_completion(corpus); });
  report(8, "Uniformity hierarchy", [&] { return criterion_uniformity(corpus); });
  report(9, "Morris level, potential, shift invariants", criterion_morris_structure);
  report(10, "Antipodal greedy cycles on Morris n=3", [] {
    const ExperimentResult r = exp_greedy_cycle();
    return criterion_experiment(r, 0, 1);
  });
  report(11, "RandomEdge level-1 law and growth", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentResult r = exp_random_edge(RandomEdgeConfig{});
    return criterion_experiment(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 600);
  });
  report(12, "Monotone path to the sink from every vertex", [&] { return criterion_monotone(corpus); });
  report(13, "Longest paths: K <= 2n, Morris n=3 >= 6", criterion_longest_path);

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
