#pragma once

#include <cstdint>

#include "aeap/entity.hpp"
#include "aeap/network.hpp"

namespace aeap {

/// Default cap on cascade evaluations for every exhaustive search.
inline constexpr std::uint64_t kDefaultEvaluationCap = 10'000'000;

struct VulnerabilityResult {
  int k = 0;
  EntitySet attacked;
  int total_failed = 0;
  EntitySet failed_set;  // A' ∪ B'
};

/// Number of k-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Exhaustive search for the k entities whose initial failure kills the most
/// entities. Ties go to the lexicographically smallest attacked set in
/// canonical entity order. Throws ValidationError if k is outside
/// [1, |A|+|B|] and CapExceededError if C(|A|+|B|, k) exceeds `cap`.
VulnerabilityResult k_most_vulnerable_exact(const Network& net, int k, std::uint64_t cap = kDefaultEvaluationCap);

/// Adds one entity at a time, each maximising the final failure count.
VulnerabilityResult k_most_vulnerable_greedy(const Network& net, int k);

}  // namespace aeap
