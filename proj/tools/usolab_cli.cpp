// usolab: generate, solve, verify and export P-LCP instances and unique-sink
// orientations, and run the experiment drivers.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "usolab/errors.hpp"
#include "usolab/experiments.hpp"
#include "usolab/gen.hpp"
#include "usolab/pivot.hpp"
#include "usolab/verify.hpp"

namespace {

using namespace usolab;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitCycle = 2;
constexpr int kExitStepLimit = 3;
constexpr int kExitUsage = 64;

struct Source {
  std::string instance;
  std::string uso;
  std::string family;
  int n = 3;
  std::uint64_t seed = 0;
  long range = 3;
  std::string strategy = "k-ppt";
};

void add_source_flags(CLI::App* cmd, Source& src, bool allow_uso) {
  cmd->add_option("--instance", src.instance, "Instance JSON file")->check(CLI::ExistingFile);
  if (allow_uso) cmd->add_option("--uso", src.uso, "USO table file")->check(CLI::ExistingFile);
  cmd->add_option("--family", src.family, "Builtin family")
      ->check(CLI::IsMember({"morris", "random-k", "random-p", "uniform", "random-orientation"}));
  cmd->add_option("--n", src.n, "Dimension")->check(CLI::Range(1, kMaxDimension));
  cmd->add_option("--seed", src.seed, "Master seed");
  cmd->add_option("--range", src.range, "Integer entry range for random families")->check(CLI::PositiveNumber);
  cmd->add_option("--strategy", src.strategy, "P-matrix strategy")->check(CLI::IsMember({"gram", "k-ppt"}));
}

GenSpec spec_of(const Source& src) {
  GenSpec spec;
  spec.family = parse_family(src.family);
  spec.n = src.n;
  spec.seed = src.seed;
  spec.range = src.range;
  spec.strategy = src.strategy == "gram" ? PStrategy::Gram : PStrategy::KPpt;
  return spec;
}

LcpInstance load_instance(const Source& src) {
  if (!src.instance.empty()) return read_instance(src.instance);
  if (src.family.empty()) throw CLI::ValidationError("one of --instance or --family is required");
  if (src.family == "random-orientation")
    throw CLI::ValidationError("--family random-orientation has no LCP instance; use --uso");
  return generate_instance(spec_of(src));
}

UsoTable load_table(const Source& src) {
  if (!src.uso.empty()) return read_table(src.uso);
  if (src.family == "random-orientation") return gen_random_orientation(src.n, src.seed);
  if (src.family == "morris" && src.instance.empty()) return tabulate(MorrisOrientation(src.n));
  return tabulate_plcp(load_instance(src));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error("write to " + path + " failed");
}

std::vector<int> parse_pi(const std::string& text) {
  std::vector<int> pi;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      pi.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--pi: \"" + item + "\" is not an integer");
    }
  }
  return pi;
}

std::string join(const RatVector& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ',';
    out += x.to_string();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"usolab: principal pivoting on unique-sink orientations"};
  app.require_subcommand(1);

  // solve
  Source solve_src;
  std::string rule_name = "murty";
  std::string pi_text;
  std::string start_text;
  std::uint64_t max_steps = 0;
  std::string trace_path;
  auto* solve = app.add_subcommand("solve", "Run simple principal pivoting on an instance");
  add_source_flags(solve, solve_src, false);
  solve->add_option("--rule", rule_name, "Pivot rule")
      ->check(CLI::IsMember({"murty", "murty-pi", "randomized-murty", "random-edge", "greedy-antipodal",
                             "greedy-subcube-sink"}));
  solve->add_option("--pi", pi_text, "Permutation for murty-pi, e.g. 3,1,2");
  solve->add_option("--start", start_text, "Start vertex bitstring (default all zeros)");
  solve->add_option("--max-steps", max_steps, "Step limit (0: default)");
  solve->add_option("--trace", trace_path, "Write the trace CSV here");

  // verify
  Source verify_src;
  std::vector<std::string> checks{"uso"};
  auto* verify = app.add_subcommand("verify", "Check properties of a tabulated orientation");
  add_source_flags(verify, verify_src, true);
  verify->add_option("--checks", checks, "Comma-separated checks")
      ->delimiter(',')
      ->check(CLI::IsMember(check_names()));

  // gen
  Source gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated instance (or orientation table)");
  add_source_flags(gen, gen_src, false);
  gen->add_option("-o,--output", gen_out, "Output path")->required();

  // export
  Source export_src;
  std::string export_out;
  auto* exp = app.add_subcommand("export", "Write the orientation table of an instance");
  add_source_flags(exp, export_src, false);
  exp->add_option("-o,--output", export_out, "Output path")->required();

  // experiment
  std::string experiment_name;
  std::vector<int> experiment_ns;
  std::uint64_t experiment_seed = 1;
  std::string experiment_out;
  std::string experiment_json;
  auto* experiment = app.add_subcommand("experiment", "Run a named experiment");
  experiment->add_option("--name", experiment_name, "Experiment")
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  experiment->add_option("--n", experiment_ns, "Comma-separated dimensions")->delimiter(',');
  experiment->add_option("--seed", experiment_seed, "Master seed");
  experiment->add_option("-o,--output", experiment_out, "CSV output path (default stdout)");
  experiment->add_option("--json", experiment_json, "JSON summary path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      PivotRule rule;
      rule.kind = parse_rule_kind(rule_name);
      rule.seed = solve_src.seed;
      if (!pi_text.empty() && rule.kind != RuleKind::MurtyPi)
        throw CLI::ValidationError("--pi is only valid with --rule murty-pi");
      if (rule.kind == RuleKind::MurtyPi) {
        if (pi_text.empty()) throw CLI::ValidationError("--rule murty-pi requires --pi");
        rule.pi = parse_pi(pi_text);
      }
      const LcpInstance inst = load_instance(solve_src);
      if (rule.kind == RuleKind::MurtyPi) check_permutation(rule.pi, inst.n);
      const Vertex start = start_text.empty() ? Vertex::zeros(inst.n) : Vertex::parse(start_text);
      if (start.dimension() != inst.n)
        throw CLI::ValidationError("--start has " + std::to_string(start.dimension()) + " bits, instance has n=" +
                                   std::to_string(inst.n));
      const PlcpOrientation oracle(inst);
      RunLimits limits;
      limits.max_steps = max_steps;
      limits.record = !trace_path.empty();
      const RunTrace trace = run(oracle, rule, start, limits);
      if (!trace_path.empty()) write_text(trace_path, trace_to_csv(trace));
      std::cout << "status=" << status_name(trace.status) << "\n";
      std::cout << "steps=" << trace.step_count << "\n";
      std::cout << "vertex=" << trace.final_vertex.to_string() << "\n";
      switch (trace.status) {
        case RunStatus::SinkReached: {
          const LcpSolution sol = extract_solution(inst, trace.final_vertex.ones_set());
          std::cout << "w=" << join(sol.w) << "\n";
          std::cout << "z=" << join(sol.z) << "\n";
          return kExitOk;
        }
        case RunStatus::CycleDetected: return kExitCycle;
        case RunStatus::StepLimit: return kExitStepLimit;
      }
    }
    if (*verify) {
      const UsoTable t = load_table(verify_src);
      bool all = true;
      for (const auto& name : checks) {
        VerifyReport rep;
        try {
          rep = run_check(name, t);
        } catch (const DependencyError& e) {
          rep.property = name;
          rep.pass = false;
          Witness w;
          w.detail = e.what();
          rep.witness = std::move(w);
        }
        all = all && rep.pass;
        std::cout << rep.to_json() << "\n";
      }
      return all ? kExitOk : kExitFail;
    }
    if (*gen) {
      if (gen_src.family.empty()) throw CLI::ValidationError("gen requires --family");
      if (gen_src.family == "random-orientation")
        write_table(gen_random_orientation(gen_src.n, gen_src.seed), gen_out);
      else
        write_instance(generate_instance(spec_of(gen_src)), gen_out);
      std::cout << "wrote " << gen_out << "\n";
      return kExitOk;
    }
    if (*exp) {
      write_table(tabulate_plcp(load_instance(export_src)), export_out);
      std::cout << "wrote " << export_out << "\n";
      return kExitOk;
    }
    if (*experiment) {
      const ExperimentResult r = run_experiment(experiment_name, experiment_ns, experiment_seed);
      if (experiment_out.empty())
        std::cout << r.to_csv();
      else
        write_text(experiment_out, r.to_csv());
      if (!experiment_json.empty()) write_text(experiment_json, r.to_json());
      std::cout << "verdict=" << (r.pass() ? "pass" : "fail") << "\n";
      return r.pass() ? kExitOk : kExitFail;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
