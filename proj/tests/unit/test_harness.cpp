#include <doctest.h>

#include "aeap/cascade.hpp"
#include "aeap/errors.hpp"
#include "aeap/harness.hpp"
#include "test_support.hpp"

using namespace aeap;
using aeap::testing::kExample;

TEST_CASE("generator is deterministic per seed") {
  GeneratorConfig cfg;
  cfg.seed = 17;
  const auto first = gen_network(cfg);
  CHECK(first == gen_network(cfg));
  CHECK(format_network(first) == format_network(gen_network(cfg)));
  CHECK(first.entities_a().size() == 14);
  CHECK(first.entities_b().size() == 14);
  cfg.seed = 18;
  CHECK_FALSE(first == gen_network(cfg));
}

TEST_CASE("generator respects its bounds") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorConfig cfg;
    cfg.n_a = 1 + static_cast<int>(seed % 7);
    cfg.n_b = 1 + static_cast<int>(seed % 5);
    cfg.max_minterms = 3;
    cfg.max_minterm_size = 2;
    cfg.seed = seed;
    const auto net = gen_network(cfg);
    CHECK(parse_network(format_network(net)) == net);
    for (const auto& idr : net.idrs()) {
      CHECK(idr.minterms.size() <= 3);
      for (const auto& m : idr.minterms) {
        CHECK(m.size() <= 2);
        for (const auto& lit : m.literals()) CHECK(lit.side != idr.target.side);
      }
    }
  }
  GeneratorConfig none;
  none.idr_probability = 0.0;
  const auto bare = gen_network(none);
  for (const auto& idr : bare.idrs()) CHECK(idr.empty());

  GeneratorConfig bad;
  bad.n_a = 0;
  CHECK_THROWS_AS(gen_network(bad), ValidationError);
  bad = {};
  bad.idr_probability = 1.5;
  CHECK_THROWS_AS(gen_network(bad), ValidationError);
  bad = {};
  bad.max_minterm_size = 0;
  CHECK_THROWS_AS(gen_network(bad), ValidationError);
}

TEST_CASE("sweep files") {
  const auto sweep = parse_sweep_config(
      "# small sweep\n"
      "n_a = 6\nn_b = 5\nseed = 9\ninstances = 3\nk = 2\ns_list = 1, 2\ntimings = 0\n"
      "idr_probability = 0.5\n");
  CHECK(sweep.generator.n_a == 6);
  CHECK(sweep.generator.n_b == 5);
  CHECK(sweep.generator.seed == 9);
  CHECK(sweep.generator.idr_probability == doctest::Approx(0.5));
  CHECK(sweep.instances == 3);
  CHECK(sweep.k == 2);
  CHECK(sweep.budgets == std::vector<int>{1, 2});
  CHECK_FALSE(sweep.record_timings);

  const auto defaults = parse_sweep_config("");
  CHECK(defaults.k == 8);
  CHECK(defaults.budgets == std::vector<int>{1, 3, 5, 7});
  CHECK(defaults.record_timings);

  CHECK_THROWS_AS(parse_sweep_config("colour = blue"), ValidationError);
  CHECK_THROWS_AS(parse_sweep_config("n_a six"), ValidationError);
  CHECK_THROWS_AS(parse_sweep_config("n_a = six"), ValidationError);
  CHECK_THROWS_AS(parse_sweep_config("instances = 0"), ValidationError);
  CHECK_THROWS_AS(parse_generator_config("k = 3"), ValidationError);
  CHECK(parse_generator_config("n_b = 3").n_b == 3);

  const auto instances = instances_from_sweep(sweep);
  REQUIRE(instances.size() == 3);
  CHECK(instances[0].id == "1");
  CHECK(instances[2].id == "3");
  GeneratorConfig third = sweep.generator;
  third.seed = 11;
  CHECK(instances[2].network == gen_network(third));
}

TEST_CASE("experiment on the example network") {
  ExperimentInstance inst{"ex", parse_network(kExample), 2, {1, 2}};
  const auto records = run_experiment({inst}, {kDefaultEvaluationCap, false});
  REQUIRE(records.size() == 2);
  const auto& r = records[0];
  CHECK(r.instance == "ex");
  CHECK(r.na == 5);
  CHECK(r.nb == 3);
  CHECK(r.k == 2);
  CHECK(r.s == 1);
  CHECK(r.induced_before == 5);
  CHECK(r.protected_heuristic == 3);
  CHECK(r.protected_exact == 3);
  CHECK(r.gap_percent == 0.0);
  CHECK(r.ms_heuristic == 0.0);
  CHECK(r.attack_method == "exact");
  CHECK(records[1].protected_exact >= records[1].protected_heuristic);
}

TEST_CASE("experiment without failures") {
  ExperimentInstance inst{"quiet", parse_network("a1\nb1"), 1, {1}};
  const auto records = run_experiment({inst}, {kDefaultEvaluationCap, false});
  REQUIRE(records.size() == 1);
  CHECK(records[0].induced_before == 0);
  CHECK(records[0].protected_heuristic == 0);
  CHECK(records[0].protected_exact == 0);
  CHECK(records[0].gap_percent == 0.0);
}

TEST_CASE("capped runs fall back to greedy attacks and skip the exact solver") {
  ExperimentInstance inst{"big", parse_network(kExample), 3, {1, 3}};
  const auto records = run_experiment({inst}, {5, false});  // C(8,3) = 56 attacks, C(5,3) = 10 subsets
  REQUIRE(records.size() == 2);
  CHECK(records[0].attack_method == "greedy");
  CHECK(records[0].protected_exact.has_value());
  CHECK_FALSE(records[1].protected_exact.has_value());
  const auto csv = records_to_csv(records);
  CHECK(csv.find("big,5,3,3,3,") != std::string::npos);
}

TEST_CASE("CSV and SVG are pure functions of the records") {
  SweepConfig sweep;
  sweep.generator.n_a = 6;
  sweep.generator.n_b = 6;
  sweep.generator.seed = 3;
  sweep.instances = 2;
  sweep.k = 3;
  sweep.budgets = {1, 2, 3};
  const auto first = run_experiment(instances_from_sweep(sweep), {sweep.cap, false});
  const auto second = run_experiment(instances_from_sweep(sweep), {sweep.cap, false});
  const auto csv = records_to_csv(first);
  CHECK(csv == records_to_csv(second));
  CHECK(csv.rfind("instance,na,nb,k,s,induced_before,prot_heur,prot_exact,gap_pct,ms_heur,ms_exact\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(render_svg(first) == render_svg(second));
  CHECK(render_svg(first).rfind("<svg", 0) == 0);
  for (const auto& r : first) {
    REQUIRE(r.protected_exact.has_value());
    CHECK(*r.protected_exact >= r.protected_heuristic);
    CHECK(*r.protected_exact <= r.induced_before);
    CHECK(r.gap_percent >= 0.0);
  }
}
