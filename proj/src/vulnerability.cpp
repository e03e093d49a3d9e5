#include "aeap/vulnerability.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "aeap/cascade.hpp"
#include "aeap/errors.hpp"

namespace aeap {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
    result = result * factor / i;
  }
  return result;
}

namespace {

void check_k(const Network& net, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > net.size()) {
    throw ValidationError("k=" + std::to_string(k) + " outside [1, " + std::to_string(net.size()) + "]");
  }
}

int count(const CascadeKernel::Mask& mask) { return static_cast<int>(std::count(mask.begin(), mask.end(), 1)); }

}  // namespace

VulnerabilityResult k_most_vulnerable_exact(const Network& net, int k, std::uint64_t cap) {
  check_k(net, k);
  const auto n = net.size();
  const auto combos = binomial(n, static_cast<std::uint64_t>(k));
  if (combos > cap) {
    throw CapExceededError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " + std::to_string(combos) +
                           " evaluations exceed cap " + std::to_string(cap));
  }
  const CascadeKernel kernel(net);

  // Combinations in lexicographic order; a strict improvement is required to
  // replace the incumbent, so the first maximiser wins the tie-break.
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::size_t> best_pick;
  int best = -1;
  CascadeKernel::Mask initial(n, 0);
  for (;;) {
    std::fill(initial.begin(), initial.end(), 0);
    for (auto p : pick) initial[p] = 1;
    const int failed = count(kernel.final_failures(initial, {}));
    if (failed > best) {
      best = failed;
      best_pick = pick;
    }
    auto i = pick.size();
    while (i > 0 && pick[i - 1] == n - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (auto j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }

  CascadeKernel::Mask attacked(n, 0);
  for (auto p : best_pick) attacked[p] = 1;
  const auto failed = kernel.final_failures(attacked, {});
  return {k, kernel.set_of(attacked), count(failed), kernel.set_of(failed)};
}

VulnerabilityResult k_most_vulnerable_greedy(const Network& net, int k) {
  check_k(net, k);
  const CascadeKernel kernel(net);
  const auto n = net.size();
  CascadeKernel::Mask attacked(n, 0);
  for (int step = 0; step < k; ++step) {
    std::size_t best_pos = n;
    int best = -1;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (attacked[pos]) continue;
      attacked[pos] = 1;
      const int failed = count(kernel.final_failures(attacked, {}));
      attacked[pos] = 0;
      if (failed > best) {
        best = failed;
        best_pos = pos;
      }
    }
    attacked[best_pos] = 1;
  }
  const auto failed = kernel.final_failures(attacked, {});
  return {k, kernel.set_of(attacked), count(failed), kernel.set_of(failed)};
}

}  // namespace aeap
