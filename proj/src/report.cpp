#include "hoinfo/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hoinfo {

using nlohmann::json;

RunReport make_report(const LoadedInput& input, const RunOptions& options) {
  const JointDistribution& dist = input.distribution;
  RunReport r;
  r.input_descriptor = input.descriptor;
  r.n_vars = dist.n_vars();
  r.cardinalities.assign(dist.cardinalities().begin(), dist.cardinalities().end());
  r.measures = compute_measures(dist, options.config);
  if (options.with_spectrum) r.spectrum = spectrum_from_measures(r.measures, r.n_vars, options.config);
  r.log_base = options.config.log_base;
  r.normalization_tolerance = options.config.normalization_tolerance;
  r.zero_tolerance = options.config.zero_tolerance;
  if (!input.alphabets.empty()) r.alphabet = SampleAlphabet{input.variable_names, input.alphabets};
  return r;
}

RunReport run_source(const InputSource& source, const RunOptions& options) {
  options.config.validate();
  return make_report(load_input(source, options.config, options.build), options);
}

namespace {

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

json report_to_json(const RunReport& r) {
  json doc = {
      {"tool_version", r.tool_version},
      {"input", r.input_descriptor},
      {"n_vars", r.n_vars},
      {"cardinalities", r.cardinalities},
      {"config",
       {{"log_base", r.log_base},
        {"normalization_tolerance", r.normalization_tolerance},
        {"zero_tolerance", r.zero_tolerance}}},
      {"measures",
       {{"joint_entropy", r.measures.joint_entropy},
        {"total_correlation", r.measures.total_correlation},
        {"dual_total_correlation", r.measures.dual_total_correlation},
        {"s_information", r.measures.s_information},
        {"o_information", r.measures.o_information}}},
  };
  if (r.spectrum) {
    const SpectrumResult& s = *r.spectrum;
    doc["spectrum"] = {
        {"delta", s.delta},
        {"gamma", s.gamma},
        {"synergy_order", optional_to_json(s.synergy_order)},
        {"redundancy_order", optional_to_json(s.redundancy_order)},
        {"delta_crossing", optional_to_json(s.delta_crossing)},
        {"gamma_crossing", optional_to_json(s.gamma_crossing)},
    };
  }
  if (r.alphabet) doc["alphabet"] = {{"variables", r.alphabet->variables}, {"symbols", r.alphabet->symbols}};
  return doc;
}

RunReport report_from_json(const json& doc) {
  try {
    RunReport r;
    r.tool_version = doc.at("tool_version").get<std::string>();
    r.input_descriptor = doc.at("input").get<std::string>();
    r.n_vars = doc.at("n_vars").get<std::size_t>();
    r.cardinalities = doc.at("cardinalities").get<std::vector<Symbol>>();
    const json& cfg = doc.at("config");
    r.log_base = cfg.at("log_base").get<double>();
    r.normalization_tolerance = cfg.at("normalization_tolerance").get<double>();
    r.zero_tolerance = cfg.at("zero_tolerance").get<double>();
    const json& m = doc.at("measures");
    r.measures.joint_entropy = m.at("joint_entropy").get<double>();
    r.measures.total_correlation = m.at("total_correlation").get<double>();
    r.measures.dual_total_correlation = m.at("dual_total_correlation").get<double>();
    r.measures.s_information = m.at("s_information").get<double>();
    r.measures.o_information = m.at("o_information").get<double>();
    if (doc.contains("spectrum")) {
      const json& s = doc.at("spectrum");
      SpectrumResult sr;
      sr.delta = s.at("delta").get<std::vector<double>>();
      sr.gamma = s.at("gamma").get<std::vector<double>>();
      sr.synergy_order = optional_from_json<int>(s.at("synergy_order"));
      sr.redundancy_order = optional_from_json<int>(s.at("redundancy_order"));
      sr.delta_crossing = optional_from_json<double>(s.at("delta_crossing"));
      sr.gamma_crossing = optional_from_json<double>(s.at("gamma_crossing"));
      r.spectrum = std::move(sr);
    }
    if (doc.contains("alphabet")) {
      const json& a = doc.at("alphabet");
      r.alphabet = SampleAlphabet{a.at("variables").get<std::vector<std::string>>(),
                                  a.at("symbols").get<std::vector<std::vector<std::string>>>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string report_to_csv(const RunReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) { os << key << ',' << value << '\n'; };
  auto opt_row = [&](const std::string& key, const auto& v) {
    if (v) {
      row(key, format_number(static_cast<double>(*v)));
    } else {
      row(key, "");
    }
  };

  row("field", "value");
  row("input", csv_field(r.input_descriptor));
  row("n_vars", std::to_string(r.n_vars));
  row("joint_entropy", format_number(r.measures.joint_entropy));
  row("total_correlation", format_number(r.measures.total_correlation));
  row("dual_total_correlation", format_number(r.measures.dual_total_correlation));
  row("s_information", format_number(r.measures.s_information));
  row("o_information", format_number(r.measures.o_information));
  if (r.spectrum) {
    for (std::size_t k = 0; k < r.spectrum->delta.size(); ++k) {
      row("delta_" + std::to_string(k), format_number(r.spectrum->delta[k]));
    }
    for (std::size_t k = 0; k < r.spectrum->gamma.size(); ++k) {
      row("gamma_" + std::to_string(k), format_number(r.spectrum->gamma[k]));
    }
    opt_row("synergy_order", r.spectrum->synergy_order);
    opt_row("redundancy_order", r.spectrum->redundancy_order);
    opt_row("delta_crossing", r.spectrum->delta_crossing);
    opt_row("gamma_crossing", r.spectrum->gamma_crossing);
  }
  row("log_base", format_number(r.log_base));
  row("zero_tolerance", format_number(r.zero_tolerance));
  row("tool_version", r.tool_version);
  return os.str();
}

int exit_code_for(ErrorCode code) noexcept { return code == ErrorCode::SystemTooSmall ? 2 : 1; }

}  // namespace hoinfo
