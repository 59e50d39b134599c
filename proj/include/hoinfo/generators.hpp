#ifndef HOINFO_GENERATORS_HPP
#define HOINFO_GENERATORS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hoinfo/distribution.hpp"

namespace hoinfo {

enum class GeneratorKind { giant_bit, parity, independent_product, random, point_mass };

std::string_view to_string(GeneratorKind kind) noexcept;
// Accepts "giant-bit"/"giant_bit", "parity", "product", "random", "point-mass"/"point_mass".
GeneratorKind parse_generator_kind(std::string_view name);

// Declarative description of a synthetic system.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::parity;
  int order = 2;       // giant_bit, parity
  int alphabet = 2;    // per-variable cardinality
  int n_vars = 1;      // random, point_mass
  std::uint64_t seed = 0;
  double concentration = 1.0;
  std::vector<GeneratorSpec> parts;  // independent_product

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Short human-readable provenance string, e.g. "gen:parity(order=3,alphabet=2)".
std::string describe(const GeneratorSpec& spec);

/// k copies of one uniform variable over `alphabet` symbols.
JointDistribution giant_bit(int k, int alphabet = 2, const EstimatorConfig& config = {});

/// k variables: the first k-1 uniform and independent, the last their sum
/// modulo `alphabet` (XOR for the binary default). Every (k-1)-variable
/// marginal is independent uniform.
JointDistribution parity(int k, int alphabet = 2, const EstimatorConfig& config = {});

// Deterministic system: all mass on the all-zero state.
JointDistribution point_mass(int n_vars = 1, int alphabet = 2, const EstimatorConfig& config = {});

/**
 * Seeded random pmf with strictly positive masses.
 *
 * Scheme: a SplitMix64 stream seeded with `seed` yields one 53-bit uniform
 * u in (0, 1] per state (ascending state order); the unnormalized weight is
 * u^(1/concentration), floored at 1e-300, and the weights are divided by
 * their sum. Large concentrations push all weights towards 1 (uniform);
 * small ones concentrate the mass on a few states. The scheme depends only
 * on integer arithmetic and libm pow, so a seed reproduces the same table
 * on every run.
 */
JointDistribution random_distribution(int n_vars, int alphabet, std::uint64_t seed, double concentration,
                                      const EstimatorConfig& config = {});
JointDistribution random_distribution(std::span<const Symbol> cardinalities, std::uint64_t seed,
                                      double concentration, const EstimatorConfig& config = {});

// Independent product of the generated subsystems, in list order.
JointDistribution compose_independent(std::span<const GeneratorSpec> specs, const EstimatorConfig& config = {});

JointDistribution generate(const GeneratorSpec& spec, const EstimatorConfig& config = {});

}  // namespace hoinfo

#endif  // HOINFO_GENERATORS_HPP
