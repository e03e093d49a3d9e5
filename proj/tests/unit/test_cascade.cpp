#include <doctest.h>

#include <random>

#include "aeap/cascade.hpp"
#include "aeap/errors.hpp"
#include "test_support.hpp"

using namespace aeap;
using aeap::testing::a;
using aeap::testing::b;
using aeap::testing::kExample;

TEST_CASE("example cascade from {b2, b3}") {
  const auto net = parse_network(kExample);
  const auto trace = simulate_cascade(net, {b(2), b(3)});
  CHECK(trace.horizon == 7);
  CHECK(trace.failed_set() == EntitySet{a(1), a(2), a(3), a(4), b(1), b(2), b(3)});
  CHECK(trace.fail_time(b(2)) == 0);
  CHECK(trace.fail_time(b(3)) == 0);
  CHECK(trace.fail_time(a(2)) == 1);
  CHECK(trace.fail_time(a(3)) == 1);
  CHECK(trace.fail_time(a(4)) == 1);
  CHECK(trace.fail_time(b(1)) == 2);
  CHECK(trace.fail_time(a(1)) == 3);
  CHECK_FALSE(trace.fail_time(a(5)).has_value());
  CHECK(induced_failure_set(trace) == EntitySet{a(1), a(2), a(3), a(4), b(1)});

  // Rows a1..a5, b1..b3; columns t = 0..7; 1 = failed.
  CHECK(trace_to_csv(trace) ==
        "entity,0,1,2,3,4,5,6,7\n"
        "a1,0,0,0,1,1,1,1,1\n"
        "a2,0,1,1,1,1,1,1,1\n"
        "a3,0,1,1,1,1,1,1,1\n"
        "a4,0,1,1,1,1,1,1,1\n"
        "a5,0,0,0,0,0,0,0,0\n"
        "b1,0,0,1,1,1,1,1,1\n"
        "b2,1,1,1,1,1,1,1,1\n"
        "b3,1,1,1,1,1,1,1,1\n");
}

TEST_CASE("no initial failure, no cascade") {
  const auto trace = simulate_cascade(parse_network(kExample), {});
  CHECK(trace.failed_set().empty());
  CHECK(induced_failure_set(trace).empty());
}

TEST_CASE("modified b1 <- a2 + a5 stops the cascade at a2, a3, a4") {
  const auto net = parse_network(kExample);
  const auto modified = apply_modification(net, {net.label_of(b(1)), a(5)});
  const auto trace = simulate_cascade(modified, {b(2), b(3)});
  CHECK(trace.failed_set() == EntitySet{a(2), a(3), a(4), b(2), b(3)});
  CHECK(induced_failure_set(trace) == EntitySet{a(2), a(3), a(4)});
}

TEST_CASE("always-alive disjunct keeps its target up") {
  const auto net = parse_network(kExample);
  const auto modified = apply_modification(net, {net.label_of(a(2)), EntityId::always_alive()});
  const auto trace = simulate_cascade(modified, {b(1), b(2), b(3)});
  CHECK_FALSE(trace.fail_time(a(2)).has_value());
  // An attacked target stays failed whatever its IDR says.
  const auto attacked = simulate_cascade(modified, {a(2)});
  CHECK(attacked.fail_time(a(2)) == 0);
}

TEST_CASE("unknown initial entity is rejected") {
  CHECK_THROWS_AS(simulate_cascade(parse_network(kExample), {b(9)}), ValidationError);
}

TEST_CASE("empty network") {
  const auto trace = simulate_cascade(Network{}, {});
  CHECK(trace.failed_set().empty());
  CHECK(trace_to_csv(trace) == "entity,0\n");
}

TEST_CASE("cascade properties on random networks") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const int n_a = std::uniform_int_distribution<int>(1, 10)(rng);
    const int n_b = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto net = aeap::testing::random_network(rng, n_a, n_b);
    const int k = std::uniform_int_distribution<int>(0, 4)(rng);
    const auto initial = aeap::testing::random_attack(rng, net, k);

    const auto trace = simulate_cascade(net, initial);
    // Agrees with the direct rule evaluation oracle.
    REQUIRE(trace.failed_set() == aeap::testing::reference_failed(net, initial));

    for (std::size_t i = 0; i < trace.entities.size(); ++i) {
      const bool attacked = initial.contains(trace.entities[i]);
      CHECK((trace.fail_times[i] == 0) == attacked);
      CHECK(trace.fail_times[i] <= trace.horizon);
    }
    for (std::size_t t = 1; t < trace.states.size(); ++t) {
      for (std::size_t i = 0; i < trace.entities.size(); ++i) {
        if (trace.states[t - 1][i]) CHECK(trace.states[t][i]);
      }
    }
    const auto longer = simulate_cascade(net, initial, {2 * net.horizon() + 3, false});
    CHECK(longer.failed_set() == trace.failed_set());

    // Adding any auxiliary can only shrink the failed set.
    const int label = std::uniform_int_distribution<int>(1, static_cast<int>(net.idr_count()))(rng);
    const auto modified = apply_modification(net, {label, EntityId::always_alive()});
    const auto after = simulate_cascade(modified, initial).failed_set();
    for (const auto& e : after) CHECK(trace.failed_set().contains(e));
  }
}

TEST_CASE("kernel immunity matches an always-alive modification") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 100; ++round) {
    const auto net = aeap::testing::random_network(rng, 6, 6);
    const auto initial = aeap::testing::random_attack(rng, net, 2);
    const CascadeKernel kernel(net);
    const auto target = net.entities()[static_cast<std::size_t>(round) % net.size()];
    auto immune = kernel.mask_of({target});
    const auto via_kernel = kernel.set_of(kernel.final_failures(kernel.mask_of(initial), immune));
    const auto via_mod =
        simulate_cascade(apply_modification(net, {net.label_of(target), EntityId::always_alive()}), initial)
            .failed_set();
    CHECK(via_kernel == via_mod);
  }
}
