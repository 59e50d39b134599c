#include "hoinfo/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hoinfo/samples.hpp"

namespace hoinfo {

using nlohmann::json;

namespace {

const json& require_key(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing required key '") + key + "'");
  }
  return doc.at(key);
}

Symbol as_symbol(const json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  const auto value = v.get<long long>();
  if (value < 0 || value > static_cast<long long>(UINT32_MAX)) {
    throw Error(ErrorCode::StateOutOfRange, std::string(what) + " " + std::to_string(value) + " is out of range");
  }
  return static_cast<Symbol>(value);
}

int as_int(const json& doc, const char* key, int fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

JointDistribution distribution_from_json(const json& doc, const EstimatorConfig& config, const BuildOptions& options) {
  const json& cards_doc = require_key(doc, "cardinalities");
  const json& entries_doc = require_key(doc, "entries");
  if (!cards_doc.is_array() || !entries_doc.is_array()) {
    throw Error(ErrorCode::ParseError, "'cardinalities' and 'entries' must be arrays");
  }
  std::vector<Symbol> cards;
  for (const json& c : cards_doc) cards.push_back(as_symbol(c, "cardinality"));

  std::vector<Entry> entries;
  entries.reserve(entries_doc.size());
  for (const json& e : entries_doc) {
    const json& state_doc = require_key(e, "state");
    const json& p_doc = require_key(e, "p");
    if (!state_doc.is_array()) throw Error(ErrorCode::ParseError, "'state' must be an array");
    if (!p_doc.is_number()) throw Error(ErrorCode::ParseError, "'p' must be a number");
    Entry entry;
    for (const json& s : state_doc) entry.state.push_back(as_symbol(s, "state symbol"));
    entry.p = p_doc.get<double>();
    entries.push_back(std::move(entry));
  }
  return build_distribution(std::move(cards), entries, config, options);
}

JointDistribution parse_distribution_json(std::string_view text, const EstimatorConfig& config,
                                          const BuildOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return distribution_from_json(doc, config, options);
}

json distribution_to_json(const JointDistribution& dist) {
  json entries = json::array();
  dist.for_each_entry([&](std::span<const Symbol> s, double p) {
    entries.push_back({{"state", std::vector<Symbol>(s.begin(), s.end())}, {"p", p}});
  });
  return {{"cardinalities", std::vector<Symbol>(dist.cardinalities().begin(), dist.cardinalities().end())},
          {"entries", std::move(entries)}};
}

GeneratorSpec generator_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "generator spec must be an object");
  const json* kind = doc.contains("kind") ? &doc.at("kind") : doc.contains("gen") ? &doc.at("gen") : nullptr;
  if (kind == nullptr || !kind->is_string()) throw Error(ErrorCode::ParseError, "generator spec needs a 'kind'");

  GeneratorSpec spec;
  spec.kind = parse_generator_kind(kind->get<std::string>());
  spec.order = as_int(doc, "order", spec.order);
  spec.alphabet = as_int(doc, "alphabet", spec.alphabet);
  spec.n_vars = as_int(doc, "n_vars", spec.n_vars);
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw Error(ErrorCode::ParseError, "'seed' must be unsigned");
    spec.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("concentration")) {
    if (!doc.at("concentration").is_number()) throw Error(ErrorCode::ParseError, "'concentration' must be a number");
    spec.concentration = doc.at("concentration").get<double>();
  }
  if (doc.contains("parts")) {
    if (!doc.at("parts").is_array()) throw Error(ErrorCode::ParseError, "'parts' must be an array");
    for (const json& p : doc.at("parts")) spec.parts.push_back(generator_spec_from_json(p));
  }
  return spec;
}

json generator_spec_to_json(const GeneratorSpec& spec) {
  json doc = {{"kind", std::string(to_string(spec.kind))}};
  switch (spec.kind) {
    case GeneratorKind::giant_bit:
    case GeneratorKind::parity:
      doc["order"] = spec.order;
      doc["alphabet"] = spec.alphabet;
      break;
    case GeneratorKind::point_mass:
      doc["n_vars"] = spec.n_vars;
      doc["alphabet"] = spec.alphabet;
      break;
    case GeneratorKind::random:
      doc["n_vars"] = spec.n_vars;
      doc["alphabet"] = spec.alphabet;
      doc["seed"] = spec.seed;
      doc["concentration"] = spec.concentration;
      break;
    case GeneratorKind::independent_product: {
      json parts = json::array();
      for (const auto& p : spec.parts) parts.push_back(generator_spec_to_json(p));
      doc["parts"] = std::move(parts);
      break;
    }
  }
  return doc;
}

InputFormat parse_input_format(std::string_view name) {
  if (name == "auto") return InputFormat::automatic;
  if (name == "dist-json" || name == "json") return InputFormat::dist_json;
  if (name == "samples-csv" || name == "csv") return InputFormat::samples_csv;
  throw Error(ErrorCode::InvalidArgument, "unknown input format '" + std::string(name) + "'");
}

InputFormat detect_format(const std::filesystem::path& path, std::string_view content) {
  const auto ext = path.extension().string();
  if (ext == ".json") return InputFormat::dist_json;
  if (ext == ".csv") return InputFormat::samples_csv;
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') return InputFormat::dist_json;
  return InputFormat::samples_csv;
}

std::string read_text_file(const std::filesystem::path& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedInput load_input_text(std::string_view text, InputFormat format, std::string descriptor,
                            const EstimatorConfig& config, const BuildOptions& options) {
  if (format == InputFormat::automatic) format = detect_format(descriptor, text);
  if (format == InputFormat::dist_json) {
    return {parse_distribution_json(text, config, options), std::move(descriptor), {}, {}};
  }
  SampleTable table = parse_samples_csv(text);
  SampleEstimate est = estimate_from_samples(table.rows, config);
  return {std::move(est.distribution), std::move(descriptor), std::move(table.names), std::move(est.alphabets)};
}

LoadedInput load_input(const InputSource& source, const EstimatorConfig& config, const BuildOptions& options) {
  if (const auto* spec = std::get_if<GeneratorSpec>(&source)) {
    return {generate(*spec, config), describe(*spec), {}, {}};
  }
  const auto& file = std::get<FileInput>(source);
  const std::string text = read_text_file(file.path);
  return load_input_text(text, file.format, file.path.string(), config, options);
}

}  // namespace hoinfo
