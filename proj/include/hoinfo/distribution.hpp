#ifndef HOINFO_DISTRIBUTION_HPP
#define HOINFO_DISTRIBUTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hoinfo/config.hpp"
#include "hoinfo/error.hpp"

namespace hoinfo {

using Symbol = std::uint32_t;
using State = std::vector<Symbol>;

// Ordered set of distinct variable indices.
class VariableSubset {
 public:
  VariableSubset() = default;
  // Sorts the indices; duplicates raise InvalidSubset.
  explicit VariableSubset(std::vector<std::size_t> indices);

  static VariableSubset all(std::size_t n_vars);
  static VariableSubset all_except(std::size_t n_vars, std::size_t excluded);

  std::span<const std::size_t> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t index) const noexcept;
  bool disjoint_from(const VariableSubset& other) const noexcept;

  friend bool operator==(const VariableSubset&, const VariableSubset&) = default;

 private:
  std::vector<std::size_t> indices_;
};

enum class Representation { automatic, dense, sparse };

struct BuildOptions {
  bool renormalize = false;
  Representation representation = Representation::automatic;
};

struct Entry {
  State state;
  double p = 0.0;
};

/// Number of joint states (product of cardinalities), or nullopt when the
/// product overflows 64 bits.
std::optional<std::uint64_t> state_space_size(std::span<const Symbol> cardinalities) noexcept;

/**
 * Joint probability mass function over N discrete variables.
 *
 * Two storage layouts are supported:
 *  - dense: one mass per joint state, indexed in mixed radix with variable 0
 *    as the most significant digit;
 *  - sparse: sorted (state, mass) pairs holding only the non-zero masses.
 *
 * Lexicographic state order coincides with ascending dense index, and every
 * reduction walks entries in that order, so both layouts produce
 * bit-identical results. Instances are immutable once built.
 */
class JointDistribution {
 public:
  std::size_t n_vars() const noexcept { return cardinalities_.size(); }
  std::span<const Symbol> cardinalities() const noexcept { return cardinalities_; }
  std::optional<std::uint64_t> state_count() const noexcept { return state_space_size(cardinalities_); }
  bool is_dense() const noexcept { return dense_; }
  // Dense: table size. Sparse: number of stored non-zero entries.
  std::size_t stored_entries() const noexcept { return masses_.size(); }

  // Mass of a full joint state; 0 for states not in the support.
  double mass(std::span<const Symbol> state) const;

  // Sum of all masses, accumulated in state order.
  double total_mass() const noexcept;

  /// Calls fn(std::span<const Symbol> state, double p) for every state with
  /// p > 0, in ascending lexicographic state order.
  template <class Fn>
  void for_each_entry(Fn&& fn) const;

  JointDistribution to_dense(const EstimatorConfig& config = {}) const;
  JointDistribution to_sparse() const;

  // Same layout and bit-identical contents.
  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

 private:
  friend class DistributionAccess;

  JointDistribution() = default;

  std::vector<Symbol> cardinalities_;
  bool dense_ = true;
  std::vector<double> masses_;
  // Sparse only: stored_entries() states of n_vars() symbols each, row-major.
  std::vector<Symbol> states_;
};

/// Validates the entries and builds a distribution. Repeated states
/// accumulate. Unlisted states have mass 0.
JointDistribution build_distribution(std::vector<Symbol> cardinalities, std::span<const Entry> entries,
                                     const EstimatorConfig& config = {}, const BuildOptions& options = {});

JointDistribution marginalize(const JointDistribution& dist, const VariableSubset& keep,
                              const EstimatorConfig& config = {});

// Joint distribution of every variable except `index`.
JointDistribution leave_one_out(const JointDistribution& dist, std::size_t index,
                                const EstimatorConfig& config = {});

// Independent join: variables of `a` first, then those of `b`.
JointDistribution product(const JointDistribution& a, const JointDistribution& b,
                          const EstimatorConfig& config = {});

// Shannon entropy in units of config.log_base (bits by default).
double entropy(const JointDistribution& dist, const EstimatorConfig& config = {});

// ---------------------------------------------------------------------------

template <class Fn>
void JointDistribution::for_each_entry(Fn&& fn) const {
  const std::size_t n = n_vars();
  if (!dense_) {
    for (std::size_t e = 0; e < masses_.size(); ++e) {
      if (masses_[e] > 0.0) {
        fn(std::span<const Symbol>(states_.data() + e * n, n), masses_[e]);
      }
    }
    return;
  }
  State state(n, 0);
  for (std::size_t idx = 0; idx < masses_.size(); ++idx) {
    if (masses_[idx] > 0.0) fn(std::span<const Symbol>(state), masses_[idx]);
    for (std::size_t v = n; v-- > 0;) {
      if (++state[v] < cardinalities_[v]) break;
      state[v] = 0;
    }
  }
}

}  // namespace hoinfo

#endif  // HOINFO_DISTRIBUTION_HPP
