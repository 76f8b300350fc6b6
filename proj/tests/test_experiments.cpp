#include <gtest/gtest.h>

#include "usolab/errors.hpp"
#include "usolab/experiments.hpp"

using namespace usolab;

namespace {

const ExperimentCell* find_cell(const ExperimentResult& r, int n, const std::string& parameter) {
  for (const auto& c : r.cells)
    if (c.n == n && c.parameter == parameter) return &c;
  return nullptr;
}

}  // namespace

TEST(ThmId, SmallGrid) {
  const ExperimentResult r = exp_thm_id({3, 5, 25});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(find_cell(r, 3, "steps")->observed, "5");
  EXPECT_EQ(find_cell(r, 5, "steps")->observed, "13");
  EXPECT_EQ(find_cell(r, 25, "steps")->observed, "313");
  EXPECT_EQ(find_cell(r, 5, "gap=1->2")->observed, "7");
  EXPECT_EQ(find_cell(r, 25, "final-segment")->observed, "13");
  EXPECT_THROW(exp_thm_id({4}), ParityError);
}

TEST(ThmGeneral, Bounds) {
  ThmGeneralConfig cfg;
  cfg.ns = {3, 5, 7};
  cfg.samples = 100;
  const ExperimentResult r = exp_thm_general(cfg);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(find_cell(r, 3, "mode=exhaustive;runs=48;max-steps")->bound, "12");
  EXPECT_EQ(find_cell(r, 5, "mode=exhaustive;runs=3840;max-steps")->bound, "39");
  EXPECT_EQ(find_cell(r, 7, "identity-from-0")->observed, "25");
}

TEST(KBound, SmallGrid) {
  KBoundConfig cfg;
  cfg.ns = {2, 3, 7};
  cfg.instances = 8;
  cfg.sampled_starts = 10;
  const ExperimentResult r = exp_k_bound(cfg);
  EXPECT_TRUE(r.pass()) << r.to_json();
  EXPECT_NE(find_cell(r, 7, "family=ppt;rule=random-edge;starts=10;check=max-steps"), nullptr);
  EXPECT_EQ(find_cell(r, 3, "family=k;rule=murty;check=monotone-mismatches")->observed, "0");
}

TEST(RandomEdge, SmallGrid) {
  RandomEdgeConfig cfg;
  cfg.ns = {7, 9};
  cfg.trials = 20;
  cfg.level_one_n = 9;
  cfg.level_one_steps = 2000;
  const ExperimentResult r = exp_random_edge(cfg);
  EXPECT_EQ(find_cell(r, 7, "level-increases")->observed, "0");
  EXPECT_EQ(find_cell(r, 9, "level1-steps")->verdict, Verdict::Pass);
  EXPECT_EQ(find_cell(r, 9, "reference-factorial")->observed, "24");
}

TEST(GreedyCycle, WeightTwoStartsCycle) {
  const ExperimentResult r = exp_greedy_cycle();
  EXPECT_TRUE(r.pass());
  for (const char* s : {"start=110", "start=011", "start=101"})
    EXPECT_EQ(find_cell(r, 3, s)->observed, "cycle-detected:3:cycle-length=3");
  EXPECT_EQ(find_cell(r, 3, "start=000")->observed, "sink-reached:1");
}

TEST(Output, CsvAndJson) {
  const ExperimentResult r = exp_thm_id({3});
  const std::string csv = r.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "experiment,n,parameter,observed,bound,verdict");
  EXPECT_NE(csv.find("thm-id,3,steps,5,5,pass\n"), std::string::npos);
  const std::string json = r.to_json();
  EXPECT_NE(json.find("\"verdict\": \"pass\""), std::string::npos);
  EXPECT_NE(json.find("\"experiment\": \"thm-id\""), std::string::npos);
}

TEST(Output, ByteStable) {
  KBoundConfig cfg;
  cfg.ns = {3};
  cfg.instances = 5;
  EXPECT_EQ(exp_k_bound(cfg).to_csv(), exp_k_bound(cfg).to_csv());
  RandomEdgeConfig re;
  re.ns = {7};
  re.trials = 10;
  EXPECT_EQ(exp_random_edge(re).to_json(), exp_random_edge(re).to_json());
}

TEST(Dispatch, Names) {
  for (const auto& name : experiment_names()) EXPECT_FALSE(name.empty());
  EXPECT_TRUE(run_experiment("thm-id", {3, 5}, 1).pass());
  EXPECT_THROW(run_experiment("nope", {}, 1), RangeError);
}

TEST(Verdicts, FailCellFailsResult) {
  ExperimentResult r;
  r.name = "x";
  r.check(3, "a", "1", "1", true);
  r.add(3, "b", "2", "", Verdict::Info);
  EXPECT_TRUE(r.pass());
  r.check(3, "c", "5", "4", false);
  EXPECT_FALSE(r.pass());
}
