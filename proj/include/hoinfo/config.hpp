#ifndef HOINFO_CONFIG_HPP
#define HOINFO_CONFIG_HPP

#include <cstdint>

namespace hoinfo {

// Masses below this are treated as exact zeros before taking logarithms.
inline constexpr double kMassFloor = 1e-15;

struct EstimatorConfig {
  double log_base = 2.0;
  double normalization_tolerance = 1e-9;
  // Absolute slack (in output units) for sign and "is zero" decisions.
  double zero_tolerance = 1e-9;
  std::uint64_t max_dense_states = std::uint64_t{1} << 26;

  // Throws Error(InvalidArgument) unless log_base > 1 and tolerances >= 0.
  void validate() const;
};

}  // namespace hoinfo

#endif  // HOINFO_CONFIG_HPP
