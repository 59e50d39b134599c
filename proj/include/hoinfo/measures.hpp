#ifndef HOINFO_MEASURES_HPP
#define HOINFO_MEASURES_HPP

#include <functional>
#include <string>
#include <vector>

#include "hoinfo/distribution.hpp"

namespace hoinfo {

/// Scalar measures of one distribution, in units of the configured log base.
struct MeasureReport {
  double joint_entropy = 0.0;
  double total_correlation = 0.0;
  double dual_total_correlation = 0.0;
  double s_information = 0.0;
  double o_information = 0.0;

  friend bool operator==(const MeasureReport&, const MeasureReport&) = default;
};

/// Joint entropy, every single-variable entropy, and every leave-one-out
/// entropy. All the TC/DTC-family measures are linear in these.
struct EntropyProfile {
  double joint = 0.0;
  std::vector<double> single;
  std::vector<double> leave_one_out;  // empty when N == 1
};

EntropyProfile compute_entropy_profile(const JointDistribution& dist, const EstimatorConfig& config = {});

// Entropy of the marginal over `subset`.
double entropy_of(const JointDistribution& dist, const VariableSubset& subset, const EstimatorConfig& config = {});

// I(A;B) = H(A) + H(B) - H(A,B). Subsets must be non-empty and disjoint.
double mutual_information(const JointDistribution& dist, const VariableSubset& a, const VariableSubset& b,
                          const EstimatorConfig& config = {});

// Sum of marginal entropies minus the joint entropy. Defined for N >= 1.
double total_correlation(const JointDistribution& dist, const EstimatorConfig& config = {});

// H(X) - sum_i H(X_i | X^{-i}). Throws SystemTooSmall for N < 2.
double dual_total_correlation(const JointDistribution& dist, const EstimatorConfig& config = {});

/// Dual total correlation rebuilt purely from total correlations of the
/// system and of its leave-one-out marginals: (N-1)·T(X) - sum_i T(X^{-i}).
/// Used to cross-check dual_total_correlation().
double dual_total_correlation_via_tc(const JointDistribution& dist, const EstimatorConfig& config = {});

// sum_i I(X_i ; X^{-i}).
double s_information(const JointDistribution& dist, const EstimatorConfig& config = {});

// T - D. Negative when synergy dominates, positive when redundancy dominates.
double o_information(const JointDistribution& dist, const EstimatorConfig& config = {});

// H, T, D, S and O from a single entropy profile. Throws SystemTooSmall for N < 2.
MeasureReport compute_measures(const JointDistribution& dist, const EstimatorConfig& config = {});
MeasureReport measures_from_profile(const EntropyProfile& profile);

// sum_i T(X^{-i}), each term evaluated on its own marginal distribution.
double sum_leave_one_out_tc(const JointDistribution& dist, const EstimatorConfig& config = {});

/// Δ^k = S - k·T. k may be any integer; 0, 1 and 2 give S, D and -O.
double delta_k(const JointDistribution& dist, int k, const EstimatorConfig& config = {});

/// Γ^k = S - k·D. 0, 1 and 2 give S, T and O.
double gamma_k(const JointDistribution& dist, int k, const EstimatorConfig& config = {});

/// Whole-minus-sum form (N-k)·T(X) - sum_i T(X^{-i}); agrees with delta_k().
double delta_k_via_tc(const JointDistribution& dist, int k, const EstimatorConfig& config = {});

/// (1 - (N-1)(k-1))·T(X) + (k-1)·sum_i T(X^{-i}); agrees with gamma_k().
double gamma_k_via_tc(const JointDistribution& dist, int k, const EstimatorConfig& config = {});

/**
 * A set function usable in place of total correlation in the whole-minus-sum
 * construction. For the order interpretation to hold, f must be
 * non-negative, must not grow under marginalization, and must vanish on the
 * leave-one-out marginals of a pure interaction. The first two are checked
 * on every call to generic_delta_k(); the third cannot be checked per input,
 * so implementations declare it via `fragile_on_pure_interactions`.
 */
struct MeasureFunctional {
  std::string name;
  std::function<double(const JointDistribution&)> evaluate;
  bool fragile_on_pure_interactions = false;
};

struct GenericDeltaResult {
  double value = 0.0;
  // Set when the functional does not declare the fragility property, so no
  // interaction-order reading of `value` is warranted.
  bool fragility_unverified = true;
};

// (N-k)·f(X) - sum_i f(X^{-i}).
GenericDeltaResult generic_delta_k(const MeasureFunctional& f, const JointDistribution& dist, int k,
                                   const EstimatorConfig& config = {});

MeasureFunctional total_correlation_functional(const EstimatorConfig& config = {});
MeasureFunctional joint_entropy_functional(const EstimatorConfig& config = {});

}  // namespace hoinfo

#endif  // HOINFO_MEASURES_HPP
