#ifndef HOINFO_REPORT_HPP
#define HOINFO_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hoinfo/io.hpp"
#include "hoinfo/measures.hpp"
#include "hoinfo/spectrum.hpp"

namespace hoinfo {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct SampleAlphabet {
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> symbols;

  friend bool operator==(const SampleAlphabet&, const SampleAlphabet&) = default;
};

// Everything computed for one input.
struct RunReport {
  std::string input_descriptor;
  std::size_t n_vars = 0;
  std::vector<Symbol> cardinalities;
  MeasureReport measures;
  std::optional<SpectrumResult> spectrum;
  double log_base = 2.0;
  double normalization_tolerance = 1e-9;
  double zero_tolerance = 1e-9;
  std::string tool_version{kToolVersion};
  std::optional<SampleAlphabet> alphabet;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct RunOptions {
  EstimatorConfig config;
  BuildOptions build;
  bool with_spectrum = false;
};

RunReport make_report(const LoadedInput& input, const RunOptions& options);
RunReport run_source(const InputSource& source, const RunOptions& options);

// Doubles are written in shortest round-trip form, so report_from_json()
// restores every field bit for bit.
nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& doc);

// Two columns, "field,value"; one row per scalar, arrays flattened to
// delta_0..delta_N and gamma_0..gamma_N. Numbers use 17 significant digits.
std::string report_to_csv(const RunReport& report);

// CLI exit status for a failure: 2 for SystemTooSmall, 1 otherwise.
int exit_code_for(ErrorCode code) noexcept;

}  // namespace hoinfo

#endif  // HOINFO_REPORT_HPP
