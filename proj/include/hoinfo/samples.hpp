#ifndef HOINFO_SAMPLES_HPP
#define HOINFO_SAMPLES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hoinfo/distribution.hpp"

namespace hoinfo {

using SampleRow = std::vector<std::string>;

struct SampleTable {
  std::vector<std::string> names;  // one per column; may be empty
  std::vector<SampleRow> rows;
};

struct SampleEstimate {
  JointDistribution distribution;
  // alphabets[v][s] is the raw symbol encoded as index s of variable v.
  std::vector<std::vector<std::string>> alphabets;
};

/// Plug-in (maximum likelihood) estimate: P(x) = count(x) / |rows|.
///
/// Each variable's alphabet is the set of observed symbols in sorted order:
/// numeric order when every symbol of the column is an integer literal,
/// byte-wise string order otherwise. The result is thus independent of row
/// order.
SampleEstimate estimate_from_samples(const std::vector<SampleRow>& rows, const EstimatorConfig& config = {});
SampleEstimate estimate_from_samples(const std::vector<std::vector<long long>>& rows,
                                     const EstimatorConfig& config = {});

// Header row of variable names, then one observation per line. Fields are
// comma-separated and trimmed; double-quoted fields may contain commas.
SampleTable parse_samples_csv(std::string_view text);

}  // namespace hoinfo

#endif  // HOINFO_SAMPLES_HPP
