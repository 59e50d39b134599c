// hoinfo: higher-order information measures on discrete distributions.
//
//   hoinfo measures --gen parity --order 3
//   hoinfo spectrum --input dist.json --output csv
//   hoinfo gen --kind giant-bit --order 2 --alphabet 3 --emit | hoinfo measures --input -
//   hoinfo batch manifest.json --jobs 8 --spectrum

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoinfo/batch.hpp"
#include "hoinfo/generators.hpp"
#include "hoinfo/io.hpp"
#include "hoinfo/report.hpp"

namespace {

using namespace hoinfo;

struct GenFlags {
  std::string kind;
  std::string spec_json;
  int order = 2;
  int alphabet = 2;
  int n_vars = 1;
  std::uint64_t seed = 0;
  double concentration = 1.0;

  void add_to(CLI::App* cmd, const std::string& kind_flag) {
    cmd->add_option(kind_flag, kind, "Generator: parity, giant-bit, random, point-mass");
    cmd->add_option("--gen-json", spec_json, "Generator spec as JSON (supports kind=product with parts)");
    cmd->add_option("--order", order, "Interaction order k")->capture_default_str();
    cmd->add_option("--alphabet", alphabet, "Per-variable alphabet size")->capture_default_str();
    cmd->add_option("--n-vars", n_vars, "Variable count (random, point-mass)")->capture_default_str();
    cmd->add_option("--seed", seed, "Seed (random)")->capture_default_str();
    cmd->add_option("--concentration", concentration, "Concentration (random)")->capture_default_str();
  }

  bool requested() const { return !kind.empty() || !spec_json.empty(); }

  GeneratorSpec spec() const {
    if (!spec_json.empty()) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(spec_json);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("--gen-json: ") + e.what());
      }
      return generator_spec_from_json(doc);
    }
    GeneratorSpec s;
    s.kind = parse_generator_kind(kind);
    s.order = order;
    s.alphabet = alphabet;
    s.n_vars = n_vars;
    s.seed = seed;
    s.concentration = concentration;
    return s;
  }
};

struct ConfigFlags {
  double base = 2.0;
  double tolerance = 1e-9;
  double norm_tolerance = 1e-9;
  bool normalize = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--base", base, "Logarithm base (2 = bits)")->capture_default_str();
    cmd->add_option("--tolerance", tolerance, "Zero tolerance for sign and order decisions")->capture_default_str();
    cmd->add_option("--norm-tolerance", norm_tolerance, "Allowed |sum(p) - 1|")->capture_default_str();
    cmd->add_flag("--normalize", normalize, "Divide masses by their total instead of rejecting");
  }

  RunOptions options(bool with_spectrum) const {
    RunOptions o;
    o.config.log_base = base;
    o.config.zero_tolerance = tolerance;
    o.config.normalization_tolerance = norm_tolerance;
    o.build.renormalize = normalize;
    o.with_spectrum = with_spectrum;
    o.config.validate();
    return o;
  }
};

struct ReportCommand {
  std::string input;
  std::string format = "auto";
  std::string output = "json";
  GenFlags gen;
  ConfigFlags config;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input", input, "Distribution JSON or sample CSV ('-' for stdin)");
    cmd->add_option("--format", format, "auto | dist-json | samples-csv")->capture_default_str();
    cmd->add_option("--output", output, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
    gen.add_to(cmd, "--gen");
    config.add_to(cmd);
  }

  int run(bool with_spectrum) const {
    if (input.empty() == !gen.requested()) {
      throw Error(ErrorCode::InvalidArgument, "give exactly one of --input or --gen/--gen-json");
    }
    const InputSource source =
        gen.requested() ? InputSource(gen.spec()) : InputSource(FileInput{input, parse_input_format(format)});
    const RunReport report = run_source(source, config.options(with_spectrum));
    if (output == "csv") {
      std::cout << report_to_csv(report);
    } else {
      std::cout << report_to_json(report).dump(2) << '\n';
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order information measures (T, D, S, O and the delta/gamma spectra) for discrete systems"};
  app.set_version_flag("--version", std::string(hoinfo::kToolVersion));
  app.require_subcommand(1);

  ReportCommand measures_cmd;
  auto* measures = app.add_subcommand("measures", "Joint entropy, TC, DTC, S- and O-information");
  measures_cmd.add_to(measures);

  ReportCommand spectrum_cmd;
  auto* spectrum = app.add_subcommand("spectrum", "Measures plus delta^k / gamma^k for k = 0..N");
  spectrum_cmd.add_to(spectrum);

  GenFlags gen_flags;
  bool emit = false;
  auto* gen = app.add_subcommand("gen", "Emit a synthetic system as distribution JSON");
  gen_flags.add_to(gen, "--kind,--gen");
  gen->add_flag("--emit", emit, "Write the distribution JSON to stdout (default)");

  std::string manifest;
  unsigned jobs = 1;
  bool batch_spectrum = false;
  ConfigFlags batch_config;
  auto* batch = app.add_subcommand("batch", "Run every manifest entry; one JSON report per line, in order");
  batch->add_option("manifest", manifest, "Manifest JSON file")->required();
  batch->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  batch->add_flag("--spectrum", batch_spectrum, "Include the delta/gamma spectrum in each report");
  batch_config.add_to(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*measures) return measures_cmd.run(false);
    if (*spectrum) return spectrum_cmd.run(true);
    if (*gen) {
      if (!gen_flags.requested()) throw hoinfo::Error(hoinfo::ErrorCode::InvalidArgument, "gen needs --kind");
      std::cout << hoinfo::distribution_to_json(hoinfo::generate(gen_flags.spec())).dump() << '\n';
      return 0;
    }
    if (*batch) {
      const auto options = batch_config.options(batch_spectrum);
      const auto items = hoinfo::parse_manifest(hoinfo::read_text_file(manifest),
                                                std::filesystem::path(manifest).parent_path());
      const std::size_t failed = hoinfo::run_batch(items, options, jobs, [](const hoinfo::BatchRecord& rec) {
        if (!rec.ok()) std::cerr << "item " << rec.index << " (" << rec.descriptor << "): " << rec.error_message << '\n';
        std::cout << hoinfo::batch_record_to_json(rec).dump() << '\n' << std::flush;
      });
      return failed == 0 ? 0 : 1;
    }
  } catch (const hoinfo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hoinfo::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
