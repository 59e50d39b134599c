#ifndef HOINFO_SPECTRUM_HPP
#define HOINFO_SPECTRUM_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "hoinfo/distribution.hpp"
#include "hoinfo/measures.hpp"

namespace hoinfo {

/**
 * Δ^k and Γ^k for k = 0..N.
 *
 * Both families are affine in k: Δ^k = S - k·T and Γ^k = S - k·D. The order
 * diagnostics report the first k at which the family stops being positive:
 *
 *   synergy_order    = min { k : Δ^k <= tol }   (defined only when T > tol)
 *   redundancy_order = min { k : Γ^k <= tol }   (defined only when D > tol)
 *
 * A pure order-k parity gadget therefore reports synergy_order == k, and a
 * k-copy giant bit reports redundancy_order == k. The alternative query
 * "largest k with Δ^k > 0" is one less on those gadgets; it is available as
 * last_positive_delta() / last_positive_gamma().
 */
struct SpectrumResult {
  std::vector<double> delta;
  std::vector<double> gamma;
  std::optional<int> synergy_order;
  std::optional<int> redundancy_order;
  std::optional<double> delta_crossing;  // S / T
  std::optional<double> gamma_crossing;  // S / D

  std::optional<int> last_positive_delta(double zero_tolerance = 1e-9) const;
  std::optional<int> last_positive_gamma(double zero_tolerance = 1e-9) const;

  friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

SpectrumResult compute_spectrum(const JointDistribution& dist, const EstimatorConfig& config = {});

// Same as compute_spectrum() but reuses already computed measures.
SpectrumResult spectrum_from_measures(const MeasureReport& measures, std::size_t n_vars,
                                      const EstimatorConfig& config = {});

enum class OrderDominance { HigherOrderDominated, LowerOrderDominated, BalancedAtK };

std::string_view to_string(OrderDominance d) noexcept;

// Δ^k > tol: higher-order dependencies dominate; Δ^k < -tol: lower-order ones do.
OrderDominance sign_interpretation(const SpectrumResult& spectrum, int k, const EstimatorConfig& config = {});

}  // namespace hoinfo

#endif  // HOINFO_SPECTRUM_HPP
