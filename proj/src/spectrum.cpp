#include "hoinfo/spectrum.hpp"

#include <string>

namespace hoinfo {

namespace {

std::optional<int> first_non_positive(const std::vector<double>& values, double tol) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] <= tol) return static_cast<int>(k);
  }
  return std::nullopt;
}

std::optional<int> last_positive(const std::vector<double>& values, double tol) {
  for (std::size_t k = values.size(); k-- > 0;) {
    if (values[k] > tol) return static_cast<int>(k);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> SpectrumResult::last_positive_delta(double zero_tolerance) const {
  return last_positive(delta, zero_tolerance);
}

std::optional<int> SpectrumResult::last_positive_gamma(double zero_tolerance) const {
  return last_positive(gamma, zero_tolerance);
}

SpectrumResult spectrum_from_measures(const MeasureReport& m, std::size_t n_vars, const EstimatorConfig& config) {
  if (n_vars < 2) throw Error(ErrorCode::SystemTooSmall, "spectrum needs at least two variables");
  const double tol = config.zero_tolerance;
  const double s = m.s_information;
  const double t = m.total_correlation;
  const double d = m.dual_total_correlation;

  SpectrumResult r;
  r.delta.reserve(n_vars + 1);
  r.gamma.reserve(n_vars + 1);
  for (std::size_t k = 0; k <= n_vars; ++k) {
    const double kk = static_cast<double>(k);
    r.delta.push_back(s - kk * t);
    r.gamma.push_back(s - kk * d);
  }
  if (t > tol) {
    r.synergy_order = first_non_positive(r.delta, tol);
    r.delta_crossing = s / t;
  }
  if (d > tol) {
    r.redundancy_order = first_non_positive(r.gamma, tol);
    r.gamma_crossing = s / d;
  }
  return r;
}

SpectrumResult compute_spectrum(const JointDistribution& dist, const EstimatorConfig& config) {
  return spectrum_from_measures(compute_measures(dist, config), dist.n_vars(), config);
}

std::string_view to_string(OrderDominance d) noexcept {
  switch (d) {
    case OrderDominance::HigherOrderDominated: return "HigherOrderDominated";
    case OrderDominance::LowerOrderDominated: return "LowerOrderDominated";
    case OrderDominance::BalancedAtK: return "BalancedAtK";
  }
  return "Unknown";
}

OrderDominance sign_interpretation(const SpectrumResult& spectrum, int k, const EstimatorConfig& config) {
  if (k < 0 || static_cast<std::size_t>(k) >= spectrum.delta.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "k=" + std::to_string(k) + " is outside the spectrum");
  }
  const double v = spectrum.delta[k];
  if (v > config.zero_tolerance) return OrderDominance::HigherOrderDominated;
  if (v < -config.zero_tolerance) return OrderDominance::LowerOrderDominated;
  return OrderDominance::BalancedAtK;
}

}  // namespace hoinfo
