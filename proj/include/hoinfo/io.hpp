#ifndef HOINFO_IO_HPP
#define HOINFO_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hoinfo/distribution.hpp"
#include "hoinfo/generators.hpp"

namespace hoinfo {

// Distribution JSON:
//   {"cardinalities": [2, 2], "entries": [{"state": [0, 0], "p": 0.5}, ...]}
JointDistribution parse_distribution_json(std::string_view text, const EstimatorConfig& config = {},
                                          const BuildOptions& options = {});
JointDistribution distribution_from_json(const nlohmann::json& doc, const EstimatorConfig& config = {},
                                         const BuildOptions& options = {});

// Emits only the states with non-zero mass, in ascending state order.
nlohmann::json distribution_to_json(const JointDistribution& dist);

// {"kind": "parity", "order": 3, ...}; "gen" is accepted as an alias of "kind".
GeneratorSpec generator_spec_from_json(const nlohmann::json& doc);
nlohmann::json generator_spec_to_json(const GeneratorSpec& spec);

enum class InputFormat { automatic, dist_json, samples_csv };

InputFormat parse_input_format(std::string_view name);

// Extension first (.json / .csv), then the first non-blank character.
InputFormat detect_format(const std::filesystem::path& path, std::string_view content);

struct FileInput {
  std::filesystem::path path;  // "-" reads standard input
  InputFormat format = InputFormat::automatic;
};

using InputSource = std::variant<FileInput, GeneratorSpec>;

struct LoadedInput {
  JointDistribution distribution;
  std::string descriptor;
  // Filled for sample CSV input only.
  std::vector<std::string> variable_names;
  std::vector<std::vector<std::string>> alphabets;
};

LoadedInput load_input_text(std::string_view text, InputFormat format, std::string descriptor,
                            const EstimatorConfig& config = {}, const BuildOptions& options = {});
LoadedInput load_input(const InputSource& source, const EstimatorConfig& config = {},
                       const BuildOptions& options = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace hoinfo

#endif  // HOINFO_IO_HPP
