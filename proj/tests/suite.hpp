// Seeded random distributions shared by the property tests and the
// acceptance suite.

#ifndef HOINFO_TESTS_SUITE_HPP
#define HOINFO_TESTS_SUITE_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hoinfo/generators.hpp"

namespace suite {

struct Case {
  std::vector<hoinfo::Symbol> cardinalities;
  std::uint64_t seed;
  double concentration;
};

// N in [min_vars, max_vars], each cardinality in {2, 3}, concentration
// spread over [0.2, 5] so the suite mixes near-uniform and highly skewed
// tables.
inline std::vector<Case> random_cases(std::size_t count, std::uint64_t master_seed, int min_vars = 2,
                                      int max_vars = 5) {
  std::mt19937_64 rng(master_seed);
  std::vector<Case> cases;
  for (std::size_t c = 0; c < count; ++c) {
    const int n = min_vars + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vars - min_vars + 1));
    Case k;
    for (int v = 0; v < n; ++v) k.cardinalities.push_back(2 + static_cast<hoinfo::Symbol>(rng() % 2));
    k.seed = rng();
    k.concentration = 0.2 * std::pow(25.0, static_cast<double>(rng() % 1000) / 999.0);
    cases.push_back(std::move(k));
  }
  return cases;
}

// n independent uniform variables over `alphabet` symbols.
inline hoinfo::JointDistribution uniform(int n, hoinfo::Symbol alphabet = 2) {
  std::vector<hoinfo::Entry> entries;
  hoinfo::State state(n, 0);
  const double p = 1.0 / std::pow(static_cast<double>(alphabet), n);
  for (;;) {
    entries.push_back({state, p});
    int v = n;
    while (v > 0) {
      if (++state[v - 1] < alphabet) break;
      state[--v] = 0;
    }
    if (v == 0) break;
  }
  return hoinfo::build_distribution(std::vector<hoinfo::Symbol>(n, alphabet), entries);
}

inline hoinfo::JointDistribution make(const Case& c) {
  return hoinfo::random_distribution(c.cardinalities, c.seed, c.concentration);
}

inline std::vector<hoinfo::JointDistribution> random_distributions(std::size_t count, std::uint64_t master_seed,
                                                                   int min_vars = 2, int max_vars = 5) {
  std::vector<hoinfo::JointDistribution> out;
  for (const auto& c : random_cases(count, master_seed, min_vars, max_vars)) out.push_back(make(c));
  return out;
}

}  // namespace suite

#endif  // HOINFO_TESTS_SUITE_HPP
